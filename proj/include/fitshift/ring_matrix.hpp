#pragma once

#include "fitshift/group_ring.hpp"
#include "fitshift/ring_hom.hpp"

#include <vector>

namespace fitshift {

/// Row-major matrix of ring elements; all entries share one ring.
class RingMatrix {
 public:
  RingMatrix() = default;
  /// Zero matrix.
  RingMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  RingMatrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<RingElement> entries);

  static RingMatrix identity(const RingPtr& ring, std::size_t n) { return scalar_identity(ring->one(), n); }
  /// f * identity of size n.
  static RingMatrix scalar_identity(const RingElement& f, std::size_t n);
  static RingMatrix from_rows(const RingPtr& ring, const std::vector<std::vector<RingElement>>& rows);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const RingElement& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  RingElement& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  RingMatrix transpose() const;
  RingMatrix operator*(const RingMatrix& o) const;
  bool is_zero() const;
  bool operator==(const RingMatrix& o) const;

  /// Columns restricted to the given indices, in that order.
  RingMatrix select_columns(const std::vector<std::size_t>& cols) const;
  RingMatrix select_rows(const std::vector<std::size_t>& rows) const;

 private:
  RingPtr ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<RingElement> e_;
};

/// [a | b]
RingMatrix hconcat(const RingMatrix& a, const RingMatrix& b);
RingMatrix block_diag(const RingMatrix& a, const RingMatrix& b);
/// Entrywise image under a ring homomorphism.
RingMatrix map_matrix(const RingHom& h, const RingMatrix& m);

}  // namespace fitshift
