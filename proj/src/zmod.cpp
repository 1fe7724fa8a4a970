#include "fitshift/zmod.hpp"

#include "fitshift/error.hpp"

#include <limits>
#include <string>

namespace fitshift {

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Zmod::Zmod(u64 p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p)) throw OutOfRange("p = " + std::to_string(p) + " is not prime");
  if (k == 0) throw OutOfRange("p-adic precision k must be positive");
  u128 m = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (i < 64) ppow_[i] = static_cast<u64>(m);
    m *= p;
    if (m > (static_cast<u128>(1) << 63))
      throw OutOfRange("p^k = " + std::to_string(p) + "^" + std::to_string(k) +
                       " exceeds 2^63");
  }
  m_ = static_cast<u64>(m);
  small_ = m_ < (u64{1} << 32);
  if (small_) mu_ = static_cast<u64>((static_cast<u128>(1) << 64) / m_);
}

u64 Zmod::reduce(i64 v) const {
  if (v >= 0) return static_cast<u64>(v) % m_;
  u64 r = static_cast<u64>(-(v + 1)) % m_;  // avoids overflow at INT64_MIN
  return m_ - 1 - r;
}

u64 Zmod::pow(u64 a, u64 e) const {
  u64 r = 1 % m_;
  a = reduce_u(a);
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

unsigned Zmod::valuation(u64 a) const {
  if (a == 0) return k_;
  unsigned v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

u64 Zmod::unit_part(u64 a) const {
  if (a == 0) return 0;
  while (a % p_ == 0) a /= p_;
  return a;
}

std::optional<u64> Zmod::inverse(u64 a) const {
  a = reduce_u(a);
  if (!is_unit(a)) return std::nullopt;
  // extended Euclid on signed 128-bit values
  __int128 t = 0, nt = 1, r = m_, nr = a;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += m_;
  return static_cast<u64>(t);
}

u64 Zmod::teichmuller(u64 a) const {
  // a^(p^(k-1)) converges to the Teichmueller lift after k-1 iterations
  u64 x = reduce_u(a);
  for (unsigned i = 1; i < k_; ++i) x = pow(x, p_);
  return x;
}

}  // namespace fitshift
