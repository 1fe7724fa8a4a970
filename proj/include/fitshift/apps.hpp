#pragma once

#include "fitshift/ideal.hpp"
#include "fitshift/ring_hom.hpp"

#include <vector>

namespace fitshift {

/// Local data at a prime v not above p.
///
/// The local group is I_v x <delta_m> x Z_p with the cyclic factors of I_v
/// first and, when m_v > 1, one cyclic factor of order m_v last; d = 1.
/// The Frobenius lift is sigma = delta^a (1+T)^c.
struct DecompositionData {
  u64 p = 3;
  unsigned k = 4;
  unsigned N = 6;
  std::vector<unsigned> inertia_orders;
  unsigned m_v = 1;
  i64 q = 2;
  std::vector<unsigned> delta_exponents;  // one per local cyclic factor
  u64 gamma_exponent = 1;

  GroupRingSpec local_spec() const;
  /// Throws OutOfRange on inconsistent data (see the checks in apps.cpp).
  void validate() const;
};

RingElement frobenius_lift(const RingPtr& local, const DecompositionData& data);

/// kappa(delta_I) = 1, kappa(delta_m) = zeta, kappa(1+T) = w with kappa(sigma) = q:
/// zeta = omega(q)^{a_m^{-1} mod m_v}, w = <q>^{c^{-1} mod p^{k-1}}.
struct KappaValues {
  std::vector<u64> delta_values;
  u64 gamma_value = 1;
};

KappaValues kappa_values(const DecompositionData& data);

/// (kappa^r)^# on the local ring.
RingHom kappa_twist(const RingPtr& local, const DecompositionData& data, int r);

/// (N_I, sigma - q) / (sigma - q).
FractionalIdeal euler_factor_closed(const DecompositionData& data, bool assume_nzd = false);

/// The -1 shift of Z_p for the decomposition (finite part) x <sigma^{m_v}>,
/// moved to the local coordinates and twisted by (kappa^{-1})^#.
FractionalIdeal euler_factor_direct(const DecompositionData& data, bool assume_nzd = false);

/// t_r(I) = (kappa^r)^#(I) for unit character values on the generators.
/// The result agrees with the exact twist below T-degree
/// RingHom::exact_t_precision() of the twist.
Ideal tate_twist_ideal(int r, const std::vector<u64>& delta_values, const std::vector<u64>& gamma_values,
                       const Ideal& ideal);

}  // namespace fitshift
