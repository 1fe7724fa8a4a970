#pragma once

#include <cstdint>
#include <optional>

namespace fitshift {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

bool is_prime(u64 n);

/// Arithmetic in the chain ring Z/p^k.
///
/// Residues are kept in [0, p^k).  Moduli below 2^32 use Barrett reduction
/// on 64-bit products; larger moduli (up to 2^63) fall back to 128-bit
/// products.
class Zmod {
 public:
  Zmod(u64 p, unsigned k);

  u64 p() const { return p_; }
  unsigned k() const { return k_; }
  u64 modulus() const { return m_; }

  u64 reduce(i64 v) const;
  u64 reduce_u(u64 v) const { return v < m_ ? v : v % m_; }

  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= m_ ? s - m_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (m_ - b); }
  u64 neg(u64 a) const { return a == 0 ? 0 : m_ - a; }

  u64 mul(u64 a, u64 b) const {
    if (small_) {
      u64 x = a * b;
      u64 q = static_cast<u64>((static_cast<u128>(x) * mu_) >> 64);
      u64 r = x - q * m_;
      return r >= m_ ? r - m_ : r;
    }
    return static_cast<u64>(static_cast<u128>(a) * b % m_);
  }

  u64 pow(u64 a, u64 e) const;

  /// p-adic valuation of a residue; k for zero.
  unsigned valuation(u64 a) const;
  /// a = p^v * u with v = valuation(a); returns u reduced mod p^k.
  u64 unit_part(u64 a) const;
  bool is_unit(u64 a) const { return a % p_ != 0; }
  std::optional<u64> inverse(u64 a) const;

  /// p^e for 0 <= e <= k (p^k maps to 0).
  u64 p_pow(unsigned e) const { return e >= k_ ? 0 : ppow_[e]; }

  /// Signed representative in (-m/2, m/2].
  i64 centered(u64 a) const {
    return a > m_ / 2 ? -static_cast<i64>(m_ - a) : static_cast<i64>(a);
  }

  /// Teichmueller representative of a unit: the unique root of unity of
  /// order dividing p-1 congruent to a mod p.
  u64 teichmuller(u64 a) const;

  bool operator==(const Zmod& o) const { return p_ == o.p_ && k_ == o.k_; }

 private:
  u64 p_;
  unsigned k_;
  u64 m_;
  bool small_;
  u64 mu_ = 0;
  u64 ppow_[64] = {};
};

}  // namespace fitshift
