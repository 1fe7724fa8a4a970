#pragma once

#include "fitshift/zmod.hpp"

#include <span>
#include <vector>

namespace fitshift {

/// Row-major matrix over Z/p^k.
struct CoeffMatrix {
  Zmod zmod;
  std::size_t ncols = 0;
  std::vector<std::vector<u64>> rows;

  CoeffMatrix(Zmod z, std::size_t cols) : zmod(z), ncols(cols) {}
  CoeffMatrix(Zmod z, std::size_t cols, std::vector<std::vector<u64>> r);

  std::size_t nrows() const { return rows.size(); }
  bool operator==(const CoeffMatrix& o) const {
    return zmod == o.zmod && ncols == o.ncols && rows == o.rows;
  }
};

/// Incremental Howell-form builder over Z/p^k.
///
/// Keeps at most one row per pivot column, each pivot normalised to p^e,
/// and closes the span under annihilator multiples p^{k-e} * row so that
/// membership can be decided by plain reduction at every point between
/// insertions.
class HowellBuilder {
 public:
  HowellBuilder(Zmod z, std::size_t ncols);

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return count_; }
  /// Adds v to the span; returns true when the span grew.
  bool insert(std::span<const u64> v);
  bool contains(std::span<const u64> v) const;
  /// Canonical (back-reduced) Howell form of the current span.
  CoeffMatrix finish() const;

 private:
  u64* row(std::size_t c) { return &store_[c * ncols_]; }
  const u64* row(std::size_t c) const { return &store_[c * ncols_]; }
  void axpy(u64* dst, u64 q, const u64* src, std::size_t from) const;

  Zmod z_;
  std::size_t ncols_;
  std::vector<u64> store_;          // row for pivot column c at c * ncols
  std::vector<unsigned> pivot_val_;  // k when no pivot in that column
  std::size_t count_ = 0;
};

CoeffMatrix howell_form(const CoeffMatrix& a);
bool same_span(const CoeffMatrix& a, const CoeffMatrix& b);
/// v in the row span of a.
bool member(std::span<const u64> v, const CoeffMatrix& a);
/// Membership against a matrix already in Howell form.
bool member_howell(std::span<const u64> v, const CoeffMatrix& howell);

}  // namespace fitshift
