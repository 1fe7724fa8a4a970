#include "fitshift/ring_matrix.hpp"

#include "fitshift/error.hpp"

#include <algorithm>

namespace fitshift {

RingMatrix::RingMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), e_(rows * cols, ring_->zero()) {}

RingMatrix::RingMatrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<RingElement> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows * cols) throw OutOfRange("matrix entry count differs from rows * cols");
  for (const auto& x : e_)
    if (!x.valid() || !ring_->compatible(x.r())) throw SpecMismatch("matrix entry lives on a different spec");
}

RingMatrix RingMatrix::scalar_identity(const RingElement& f, std::size_t n) {
  RingMatrix m(f.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f;
  return m;
}

RingMatrix RingMatrix::from_rows(const RingPtr& ring, const std::vector<std::vector<RingElement>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  std::vector<RingElement> e;
  for (const auto& r : rows) {
    if (r.size() != nc) throw OutOfRange("ragged matrix rows");
    e.insert(e.end(), r.begin(), r.end());
  }
  return RingMatrix(ring, rows.size(), nc, std::move(e));
}

RingMatrix RingMatrix::transpose() const {
  RingMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
  if (!ring_->compatible(*o.ring_)) throw SpecMismatch("matrix product across specs");
  if (cols_ != o.rows_) throw OutOfRange("matrix product with mismatched dimensions");
  RingMatrix r(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      if (at(i, l).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o.at(l, j).is_zero()) r.at(i, j) += at(i, l) * o.at(l, j);
    }
  return r;
}

bool RingMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const RingElement& x) { return x.is_zero(); });
}

bool RingMatrix::operator==(const RingMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

RingMatrix RingMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  RingMatrix r(ring_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r.at(i, j) = at(i, cols.at(j));
  return r;
}

RingMatrix RingMatrix::select_rows(const std::vector<std::size_t>& rows) const {
  RingMatrix r(ring_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(rows.at(i), j);
  return r;
}

RingMatrix hconcat(const RingMatrix& a, const RingMatrix& b) {
  if (!a.ring()->compatible(*b.ring())) throw SpecMismatch("hconcat across specs");
  if (a.rows() != b.rows()) throw OutOfRange("hconcat with different row counts");
  RingMatrix r(a.ring(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

RingMatrix block_diag(const RingMatrix& a, const RingMatrix& b) {
  if (!a.ring()->compatible(*b.ring())) throw SpecMismatch("block_diag across specs");
  RingMatrix r(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return r;
}

RingMatrix map_matrix(const RingHom& h, const RingMatrix& m) {
  RingMatrix r(h.target(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = h.apply(m.at(i, j));
  return r;
}

}  // namespace fitshift
