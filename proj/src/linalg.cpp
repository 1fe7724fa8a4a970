#include "fitshift/linalg.hpp"

#include "fitshift/error.hpp"

#include <algorithm>

namespace fitshift {

CoeffMatrix::CoeffMatrix(Zmod z, std::size_t cols, std::vector<std::vector<u64>> r)
    : zmod(z), ncols(cols), rows(std::move(r)) {
  for (auto& row : rows) {
    if (row.size() != ncols) throw OutOfRange("matrix row has the wrong length");
    for (u64& x : row) x = zmod.reduce_u(x);
  }
}

HowellBuilder::HowellBuilder(Zmod z, std::size_t ncols)
    : z_(z), ncols_(ncols), store_(ncols * ncols, 0), pivot_val_(ncols, z.k()) {}

void HowellBuilder::axpy(u64* dst, u64 q, const u64* src, std::size_t from) const {
  if (q == 0) return;
  const u64 nq = z_.neg(q);
  for (std::size_t j = from; j < ncols_; ++j)
    if (src[j]) dst[j] = z_.add(dst[j], z_.mul(nq, src[j]));
}

bool HowellBuilder::insert(std::span<const u64> v) {
  if (v.size() != ncols_) throw OutOfRange("row length differs from column count");
  const unsigned k = z_.k();
  bool changed = false;
  std::vector<std::vector<u64>> stack;
  stack.emplace_back(v.begin(), v.end());
  for (u64& x : stack.back()) x = z_.reduce_u(x);

  auto normalise = [&](std::vector<u64>& w, std::size_t c) {
    const u64 uinv = *z_.inverse(z_.unit_part(w[c]));
    if (uinv != 1)
      for (std::size_t j = c; j < ncols_; ++j) w[j] = z_.mul(w[j], uinv);
  };
  auto annihilator = [&](const std::vector<u64>& w, unsigned e) {
    std::vector<u64> a(ncols_);
    const u64 f = z_.p_pow(k - e);
    for (std::size_t j = 0; j < ncols_; ++j) a[j] = z_.mul(w[j], f);
    return a;
  };

  while (!stack.empty()) {
    std::vector<u64> w = std::move(stack.back());
    stack.pop_back();
    std::size_t c = 0;
    while (c < ncols_) {
      if (w[c] == 0) {
        ++c;
        continue;
      }
      const unsigned e = z_.valuation(w[c]);
      const unsigned f = pivot_val_[c];
      if (f == k) {
        normalise(w, c);
        std::copy(w.begin(), w.end(), row(c));
        pivot_val_[c] = e;
        ++count_;
        changed = true;
        if (e > 0) stack.push_back(annihilator(w, e));
        break;
      }
      if (e >= f) {
        axpy(w.data(), w[c] / z_.p_pow(f), row(c), c);
        ++c;
        continue;
      }
      normalise(w, c);
      std::vector<u64> old(row(c), row(c) + ncols_);
      std::copy(w.begin(), w.end(), row(c));
      pivot_val_[c] = e;
      changed = true;
      if (e > 0) stack.push_back(annihilator(w, e));
      axpy(old.data(), z_.p_pow(f - e), w.data(), c);
      w = std::move(old);
      ++c;
    }
  }
  return changed;
}

bool HowellBuilder::contains(std::span<const u64> v) const {
  if (v.size() != ncols_) throw OutOfRange("row length differs from column count");
  std::vector<u64> w(v.begin(), v.end());
  for (u64& x : w) x = z_.reduce_u(x);
  for (std::size_t c = 0; c < ncols_; ++c) {
    if (w[c] == 0) continue;
    const unsigned f = pivot_val_[c];
    if (f == z_.k() || z_.valuation(w[c]) < f) return false;
    axpy(w.data(), w[c] / z_.p_pow(f), row(c), c);
  }
  return true;
}

CoeffMatrix HowellBuilder::finish() const {
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < ncols_; ++c)
    if (pivot_val_[c] < z_.k()) cols.push_back(c);
  std::vector<std::vector<u64>> rows;
  rows.reserve(cols.size());
  for (std::size_t c : cols) rows.emplace_back(row(c), row(c) + ncols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const std::size_t cj = cols[j];
      const u64 q = rows[i][cj] / z_.p_pow(pivot_val_[cj]);
      axpy(rows[i].data(), q, rows[j].data(), cj);
    }
  return CoeffMatrix(z_, ncols_, std::move(rows));
}

CoeffMatrix howell_form(const CoeffMatrix& a) {
  HowellBuilder hb(a.zmod, a.ncols);
  for (const auto& r : a.rows) hb.insert(r);
  return hb.finish();
}

bool same_span(const CoeffMatrix& a, const CoeffMatrix& b) {
  if (a.ncols != b.ncols || !(a.zmod == b.zmod)) throw OutOfRange("same_span: dimension or modulus mismatch");
  return howell_form(a) == howell_form(b);
}

bool member(std::span<const u64> v, const CoeffMatrix& a) {
  if (v.size() != a.ncols) throw OutOfRange("member: vector length differs from column count");
  return member_howell(v, howell_form(a));
}

bool member_howell(std::span<const u64> v, const CoeffMatrix& h) {
  if (v.size() != h.ncols) throw OutOfRange("member: vector length differs from column count");
  const Zmod& z = h.zmod;
  std::vector<u64> w(v.begin(), v.end());
  for (u64& x : w) x = z.reduce_u(x);
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.ncols; ++c) {
    // advance to the row whose pivot sits in column c, if any
    while (r < h.rows.size()) {
      const auto& row = h.rows[r];
      std::size_t pc = 0;
      while (pc < h.ncols && row[pc] == 0) ++pc;
      if (pc >= c) break;
      ++r;
    }
    if (w[c] == 0) continue;
    if (r == h.rows.size()) return false;
    const auto& row = h.rows[r];
    if (row[c] == 0) return false;  // no pivot in this column
    const unsigned f = z.valuation(row[c]);
    if (z.valuation(w[c]) < f) return false;
    const u64 nq = z.neg(w[c] / z.p_pow(f));
    for (std::size_t j = c; j < h.ncols; ++j)
      if (row[j]) w[j] = z.add(w[j], z.mul(nq, row[j]));
  }
  return true;
}

}  // namespace fitshift
