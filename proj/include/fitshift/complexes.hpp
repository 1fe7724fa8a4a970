#pragma once

#include "fitshift/ring_matrix.hpp"

#include <vector>

namespace fitshift {

/// Finite free chain complex C_0 <- C_1 <- ... <- C_L over one ring.
struct ChainComplex {
  RingPtr ring;
  std::vector<std::size_t> ranks;       // r_0 .. r_L
  std::vector<RingMatrix> boundaries;   // boundaries[j-1] = d_j : C_j -> C_{j-1}
  /// degree_labels[j][e] = per-factor degrees of basis element e of C_j.
  std::vector<std::vector<std::vector<unsigned>>> degree_labels;

  std::size_t length() const { return ranks.empty() ? 0 : ranks.size() - 1; }
  /// d_j for 1 <= j <= length (r_{j-1} x r_j).
  const RingMatrix& d(std::size_t j) const;
  /// d_{j-1} d_j == 0 for every j.
  bool is_complex() const;
};

/// ... -> R --N_i--> R --(delta_i^u - 1)--> R, with d_1 = delta_i^u - 1.
/// Factor index i is 0-based; u must be prime to m_i.
ChainComplex cyclic_complex(const RingPtr& ring, std::size_t i, std::size_t length, unsigned u = 1);

/// 0 -> R --T_j--> R -> 0 (0-based j).
ChainComplex t_complex(const RingPtr& ring, std::size_t j);

/// Total complex of the tensor product, truncated at the given length.
///
/// Basis of C_n: tuples ((n_1, e_1), ..., (n_F, e_F)) with sum n_f = n, in
/// lexicographic order.  d(x1 (x) ... (x) xF) = sum_f (-1)^{n_1+..+n_{f-1}} x1 (x) .. dxf .. (x) xF.
/// Factors shorter than the requested length are treated as zero above
/// their top degree.
ChainComplex tensor(const std::vector<ChainComplex>& factors, std::size_t length);

}  // namespace fitshift
