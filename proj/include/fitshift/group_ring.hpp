#pragma once

#include "fitshift/zmod.hpp"

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fitshift {

/// Parameters of R = (Z/p^k)[delta_1..delta_s, T_1..T_d] / (delta_i^{m_i} - 1, T_j^N).
struct GroupRingSpec {
  u64 p = 3;
  unsigned k = 1;
  std::vector<unsigned> orders;  // m_1..m_s, each >= 2
  unsigned d = 0;
  unsigned N = 1;

  std::size_t s() const { return orders.size(); }
  bool operator==(const GroupRingSpec&) const = default;
  std::string to_string() const;
};

class RingElement;

/// Immutable ring context shared by all elements built on one spec.
///
/// The monomial basis is delta^a T^b, flattened as
/// index = group_index(a) * N^d + t_index(b) with the first coordinate most
/// significant in both parts.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  static std::shared_ptr<const Ring> make(GroupRingSpec spec);

  const GroupRingSpec& spec() const { return spec_; }
  const Zmod& zmod() const { return zmod_; }
  std::size_t s() const { return spec_.orders.size(); }
  unsigned d() const { return spec_.d; }
  unsigned N() const { return spec_.N; }
  std::size_t group_size() const { return group_size_; }
  std::size_t t_size() const { return t_size_; }
  std::size_t basis_size() const { return group_size_ * t_size_; }

  bool compatible(const Ring& o) const { return this == &o || spec_ == o.spec_; }

  std::size_t group_index(std::span<const unsigned> a) const;
  std::size_t t_index(std::span<const unsigned> b) const;
  std::size_t index(std::span<const unsigned> a, std::span<const unsigned> b) const {
    return group_index(a) * t_size_ + t_index(b);
  }
  std::vector<unsigned> group_exponents(std::size_t gi) const;
  std::vector<unsigned> t_exponents(std::size_t ti) const;
  unsigned t_degree_of(std::size_t ti) const { return t_total_degree_[ti]; }

  std::size_t group_mul(std::size_t gi, std::size_t gj) const { return gmul_[gi * group_size_ + gj]; }
  /// Product of T-monomials, or -1 when some exponent reaches N.
  long t_mul(std::size_t ti, std::size_t tj) const { return tmul_[ti * t_size_ + tj]; }
  std::size_t group_inverse(std::size_t gi) const { return ginv_[gi]; }

  RingElement zero() const;
  RingElement one() const;
  RingElement constant(i64 c) const;
  /// c * delta^a * T^b
  RingElement monomial(std::span<const unsigned> a, std::span<const unsigned> b, i64 c = 1) const;
  /// delta_i (0-based factor index)
  RingElement delta(std::size_t i) const;
  /// tau_i = delta_i - 1
  RingElement tau(std::size_t i) const;
  /// T_j (0-based variable index)
  RingElement t(std::size_t j) const;
  /// Product over i in subset of (1 + delta_i + ... + delta_i^{m_i - 1}).
  RingElement norm_element(std::span<const std::size_t> subset) const;
  /// Norm of the whole group.
  RingElement norm_element() const;
  /// Builds an element from (group exponents, T exponents, integer) terms.
  RingElement element(
      const std::vector<std::pair<std::pair<std::vector<unsigned>, std::vector<unsigned>>, i64>>& terms) const;

  /// Same spec with the given (k, N); used for precision reduction.
  std::shared_ptr<const Ring> with_precision(unsigned k, unsigned N) const;

  /// The s = 0 coefficient ring (Z/p^k)[T_1..T_d]/(T^N).
  std::shared_ptr<const Ring> t_part() const;

 private:
  explicit Ring(GroupRingSpec spec);

  GroupRingSpec spec_;
  Zmod zmod_;
  std::size_t group_size_ = 1;
  std::size_t t_size_ = 1;
  std::vector<std::size_t> gmul_;
  std::vector<std::size_t> ginv_;
  std::vector<long> tmul_;
  std::vector<unsigned> t_total_degree_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Dense element of a truncated group ring.
class RingElement {
 public:
  RingElement() = default;
  RingElement(RingPtr ring, std::vector<u64> coeffs);

  const RingPtr& ring() const { return ring_; }
  const Ring& r() const { return *ring_; }
  const std::vector<u64>& coeffs() const { return c_; }
  u64 coeff(std::size_t idx) const { return c_[idx]; }
  u64 coeff(std::span<const unsigned> a, std::span<const unsigned> b) const {
    return c_[ring_->index(a, b)];
  }
  std::size_t size() const { return c_.size(); }
  bool valid() const { return ring_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;
  /// Maximal total T-degree of a nonzero monomial; -1 for zero.
  int t_degree() const;
  std::size_t nonzero_count() const;

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& o) const;
  RingElement scaled(u64 c) const;
  RingElement pow(u64 e) const;
  /// Multiply by the basis monomial with flat index idx (permutation with drops).
  RingElement times_monomial(std::size_t idx) const;
  /// Drop coefficients to a ring of lower precision (same s, d).
  RingElement reduced_to(const RingPtr& target) const;

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);

  bool operator==(const RingElement& o) const;

 private:
  void check_same(const RingElement& o) const;

  RingPtr ring_;
  std::vector<u64> c_;
};

/// Product with the monomial basis element written into out (size basis).
void times_monomial_into(const RingElement& x, std::size_t idx, std::span<u64> out);

RingElement augmentation(const RingElement& x);

/// Coordinates in the basis tau^a T^b (tau_i = delta_i - 1), same flat layout.
std::vector<u64> tau_coordinates(const RingElement& x);
RingElement from_tau_coordinates(const RingPtr& ring, std::vector<u64> coords);

}  // namespace fitshift
