#pragma once

// Brute-force reference implementations used by the tests.  None of these
// share code with the library's Howell or minor-enumeration paths.

#include "fitshift/expr.hpp"
#include "fitshift/group_ring.hpp"
#include "fitshift/ideal.hpp"
#include "fitshift/ring_matrix.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace fitshift {

// Readable gtest failure messages.
inline void PrintTo(const RingElement& x, std::ostream* os) { *os << format_element(x); }

}  // namespace fitshift

namespace oracle {

using fitshift::RingElement;
using fitshift::RingMatrix;
using fitshift::RingPtr;
using fitshift::u64;

/// Every Z/m-combination of the rows, as a set of vectors.
inline std::set<std::vector<u64>> enumerate_span(const std::vector<std::vector<u64>>& rows, std::size_t ncols, u64 m) {
  std::set<std::vector<u64>> span{std::vector<u64>(ncols, 0)};
  for (const auto& r : rows) {
    std::set<std::vector<u64>> next;
    for (const auto& v : span)
      for (u64 c = 0; c < m; ++c) {
        std::vector<u64> w(v);
        for (std::size_t j = 0; j < ncols; ++j) w[j] = (w[j] + c * r[j]) % m;
        next.insert(std::move(w));
      }
    span = std::move(next);
  }
  return span;
}

/// Determinant by cofactor expansion along the first row.
inline RingElement cofactor_det(const RingMatrix& a) {
  const std::size_t n = a.rows();
  const RingPtr& R = a.ring();
  if (n == 0) return R->one();
  if (n == 1) return a.at(0, 0);
  RingElement acc = R->zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (a.at(0, j).is_zero()) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    const RingElement term = a.at(0, j) * cofactor_det(a.select_rows(rows).select_columns(cols));
    acc = j % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

/// All maximal minors by explicit column subsets.
inline std::vector<RingElement> cofactor_minors(const RingMatrix& h) {
  const std::size_t a = h.rows(), b = h.cols();
  std::vector<RingElement> out;
  if (a == 0) return {h.ring()->one()};
  if (b < a) return out;
  std::vector<bool> pick(b, false);
  std::fill(pick.begin(), pick.begin() + a, true);
  do {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < b; ++j)
      if (pick[j]) cols.push_back(j);
    out.push_back(cofactor_det(h.select_columns(cols)));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

/// The ideal as a set of coefficient vectors: the Z/p^k-span of g * monomial.
inline std::set<std::vector<u64>> enumerate_ideal(const RingPtr& R, const std::vector<RingElement>& gens) {
  std::vector<std::vector<u64>> rows;
  for (const auto& g : gens)
    for (std::size_t b = 0; b < R->basis_size(); ++b) rows.push_back(g.times_monomial(b).coeffs());
  return enumerate_span(rows, R->basis_size(), R->zmod().modulus());
}

/// Random element with about `density` nonzero coefficients in [0, p^k).
inline RingElement random_element(const RingPtr& R, std::mt19937_64& rng, double density = 0.4) {
  std::vector<u64> c(R->basis_size(), 0);
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<u64> val(0, R->zmod().modulus() - 1);
  for (auto& x : c)
    if (coin(rng) < density) x = val(rng);
  return RingElement(R, std::move(c));
}

inline RingMatrix random_matrix(const RingPtr& R, std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                                double density = 0.4) {
  std::vector<RingElement> e;
  for (std::size_t i = 0; i < rows * cols; ++i) e.push_back(random_element(R, rng, density));
  return RingMatrix(R, rows, cols, std::move(e));
}

}  // namespace oracle
