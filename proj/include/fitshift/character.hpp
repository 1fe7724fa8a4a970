#pragma once

#include "fitshift/group_ring.hpp"

#include <memory>
#include <vector>

namespace fitshift {

/// Integer coefficients of the e-th cyclotomic polynomial (ascending).
std::vector<i64> cyclotomic_polynomial(unsigned e);

/// (Z/p^k)[x] / Phi_e(x); elements are coefficient vectors of length phi(e).
class CycloRing {
 public:
  CycloRing(const Zmod& z, unsigned e);

  const Zmod& zmod() const { return z_; }
  unsigned order() const { return e_; }
  std::size_t degree() const { return deg_; }

  /// x^a reduced mod Phi_e (a taken mod e).
  const std::vector<u64>& root_power(u64 a) const { return xpow_[a % e_]; }
  std::vector<u64> mul(const std::vector<u64>& a, const std::vector<u64>& b) const;
  std::vector<u64> add(const std::vector<u64>& a, const std::vector<u64>& b) const;
  /// Resultant Res(Phi_e, a) = det of multiplication by a, reduced mod p^k.
  u64 norm(const std::vector<u64>& a) const;

 private:
  std::vector<u64> reduce(std::vector<u64> poly) const;

  Zmod z_;
  unsigned e_;
  std::size_t deg_;
  std::vector<u64> phi_;  // monic, length deg_ + 1
  std::vector<std::vector<u64>> xpow_;
};

/// A character of the finite part: delta_i -> zeta_e^{exponent_i * e / m_i}.
class Character {
 public:
  /// exponents[i] in [0, m_i); the character has order e = lcm of m_i / gcd(exponents_i, m_i).
  Character(const RingPtr& ring, std::vector<unsigned> exponents);

  const std::vector<unsigned>& exponents() const { return exps_; }
  unsigned order() const { return cyclo_->order(); }
  const CycloRing& cyclo() const { return *cyclo_; }
  /// Value on delta_i as an element of the cyclotomic ring.
  std::vector<u64> value(std::size_t i) const;
  /// Exponent of zeta_e in chi(delta^a) for the group element with flat index gi.
  u64 root_exponent(std::size_t gi) const;

  static std::vector<Character> all(const RingPtr& ring);

 private:
  RingPtr ring_;
  std::vector<unsigned> exps_;
  std::shared_ptr<const CycloRing> cyclo_;
};

/// chi(x): coefficients indexed by T-monomial, each a cyclotomic element.
struct CycloTPoly {
  std::shared_ptr<const CycloRing> cyclo;
  RingPtr t_ring;  // the s = 0 ring carrying the T-monomial layout
  std::vector<std::vector<u64>> coeffs;

  bool is_zero() const;
  CycloTPoly operator*(const CycloTPoly& o) const;
  CycloTPoly operator+(const CycloTPoly& o) const;
  bool operator==(const CycloTPoly& o) const { return coeffs == o.coeffs; }
};

CycloTPoly char_eval(const Character& chi, const RingElement& x);

}  // namespace fitshift
