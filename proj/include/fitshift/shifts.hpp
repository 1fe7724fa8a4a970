#pragma once

#include "fitshift/complexes.hpp"
#include "fitshift/fitting.hpp"
#include "fitshift/ideal.hpp"

#include <string>
#include <vector>

namespace fitshift {

/// Parameters for the shifted Fitting ideal of the trivial module Z_p.
struct ShiftRequest {
  RingPtr ring;  // needs d >= 1
  int n = 0;
  /// delta_i is replaced by delta_i^{u_i} in the resolution (empty: all 1).
  std::vector<unsigned> exponents;
  /// Order in which the cyclic factors enter the tensor product (empty: identity).
  std::vector<std::size_t> permutation;
  unsigned jobs = 1;
};

/// The resolution data behind a nonnegative shift: the complex over the ring
/// without T_d, and the lifting quotient map.
struct TrivialResolution {
  RingHom lift;          // full ring -> ring without T_d
  ChainComplex complex;  // over lift.target(), length n + 1
};

TrivialResolution trivial_resolution(const ShiftRequest& req, std::size_t length);

/// Shifted Fitting ideal of Z_p as a fractional ideal.
///
/// n >= 0: T_d^t Fitt(N_n) where N_n is presented by d_{n+1} lifted along
/// T_d -> 0 and t = sum_{j<n} (-1)^{n+j} r_j.  Negative n is supported for
/// d = 1 (n = -1 gives (N_Delta, T)/T, n <= -2 reflects to -2-n) and for
/// cyclic Delta (two-periodicity, lifted to n >= d-1); other cases throw
/// Unsupported.
FractionalIdeal shift_trivial(const ShiftRequest& req);
FractionalIdeal shift_trivial(const RingPtr& ring, int n, unsigned jobs = 1);

/// t = sum_{j<n} (-1)^{n+j} r_j for the given ranks.
long shift_exponent(const std::vector<std::size_t>& ranks, int n);

struct SequenceTerm {
  PresentedModule module;
  RingElement generator;  // declared generator g of Fitt(module)
  bool assume_nzd = false;
};

/// 0 -> N -> P_1 -> ... -> P_n -> M -> 0 with every P_i of projective
/// dimension <= 1.  Exactness is the caller's obligation.
struct SequenceData {
  std::vector<SequenceTerm> p_list;  // P_1 .. P_n
  PresentedModule n_module;
};

struct SequenceShift {
  FractionalIdeal value;
  std::string provenance;
};

/// (prod_i g_i^{(-1)^i}) Fitt(N).  Throws OutOfRange when some (g_i) differs
/// from Fitt(P_i).
SequenceShift shift_from_sequence(const SequenceData& data, unsigned jobs = 1);

/// The sequence of the trivial resolution: P_i = C_{n-i} / T_d, N = N_n.
SequenceData trivial_sequence(const ShiftRequest& req);

/// Adds R/(f) to two neighbouring terms: position 0 pairs N with P_1,
/// position i >= 1 pairs P_i with P_{i+1}.
SequenceData pad_sequence(const SequenceData& data, std::size_t position, const RingElement& f);

/// Presentation of B_Delta = coker(d_3) lifted along T -> 0 (d = 1).
PresentedModule b_delta(const RingPtr& ring);

/// frac_equal(shift_trivial(2), Fitt(B_Delta) / T^{s-1}); needs d = 1 and p odd.
FracVerdict verify_second_shift_identity(const RingPtr& ring, unsigned jobs = 1);

}  // namespace fitshift
