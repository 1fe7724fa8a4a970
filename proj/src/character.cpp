#include "fitshift/character.hpp"

#include "fitshift/error.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace fitshift {

std::vector<i64> cyclotomic_polynomial(unsigned e) {
  if (e == 0) throw OutOfRange("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<unsigned, std::vector<i64>> cache;
  {
    std::lock_guard lk(mu);
    if (auto it = cache.find(e); it != cache.end()) return it->second;
  }
  // x^e - 1 divided by Phi_d for every proper divisor d
  std::vector<i64> num(e + 1, 0);
  num[0] = -1;
  num[e] = 1;
  for (unsigned dv = 1; dv < e; ++dv) {
    if (e % dv) continue;
    std::vector<i64> den = cyclotomic_polynomial(dv);
    const std::size_t dd = den.size() - 1;
    std::vector<i64> q(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      const i64 c = num[i];  // den is monic
      q[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(q);
  }
  std::lock_guard lk(mu);
  cache.emplace(e, num);
  return num;
}

CycloRing::CycloRing(const Zmod& z, unsigned e) : z_(z), e_(e) {
  std::vector<i64> phi = cyclotomic_polynomial(e);
  deg_ = phi.size() - 1;
  for (i64 c : phi) phi_.push_back(z_.reduce(c));
  xpow_.resize(e);
  for (unsigned a = 0; a < e; ++a) {
    std::vector<u64> mono(a + 1, 0);
    mono[a] = 1 % z_.modulus();
    xpow_[a] = reduce(std::move(mono));
  }
}

std::vector<u64> CycloRing::reduce(std::vector<u64> poly) const {
  for (std::size_t i = poly.size(); i-- > deg_;) {
    const u64 c = poly[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg_; ++j) poly[i - deg_ + j] = z_.sub(poly[i - deg_ + j], z_.mul(c, phi_[j]));
  }
  poly.resize(deg_, 0);
  return poly;
}

std::vector<u64> CycloRing::mul(const std::vector<u64>& a, const std::vector<u64>& b) const {
  std::vector<u64> prod(2 * deg_, 0);
  for (std::size_t i = 0; i < deg_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < deg_; ++j) prod[i + j] = z_.add(prod[i + j], z_.mul(a[i], b[j]));
  }
  return reduce(std::move(prod));
}

std::vector<u64> CycloRing::add(const std::vector<u64>& a, const std::vector<u64>& b) const {
  std::vector<u64> r(deg_);
  for (std::size_t i = 0; i < deg_; ++i) r[i] = z_.add(a[i], b[i]);
  return r;
}

u64 CycloRing::norm(const std::vector<u64>& a) const {
  const std::size_t n = deg_;
  // column j holds a * x^j
  std::vector<std::vector<u64>> m(n, std::vector<u64>(n));
  std::vector<u64> col = a;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
    std::vector<u64> shifted(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) shifted[i + 1] = col[i];
    col = reduce(std::move(shifted));
  }
  // full pivoting on minimal valuation keeps every elimination step exact over Z/p^k
  u64 det = 1 % z_.modulus();
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t bi = n, bj = n;
    unsigned bv = z_.k();
    for (std::size_t i = t; i < n; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const unsigned v = z_.valuation(m[i][j]);
        if (v < bv) {
          bv = v;
          bi = i;
          bj = j;
        }
      }
    if (bi == n) return 0;
    if (bi != t) {
      std::swap(m[bi], m[t]);
      det = z_.neg(det);
    }
    if (bj != t) {
      for (std::size_t i = 0; i < n; ++i) std::swap(m[i][bj], m[i][t]);
      det = z_.neg(det);
    }
    const u64 piv = m[t][t];
    const u64 uinv = *z_.inverse(z_.unit_part(piv));
    const u64 pe = z_.p_pow(bv);
    for (std::size_t i = t + 1; i < n; ++i) {
      if (m[i][t] == 0) continue;
      const u64 c = z_.mul(m[i][t] / pe, uinv);
      for (std::size_t j = t; j < n; ++j) m[i][j] = z_.sub(m[i][j], z_.mul(c, m[t][j]));
    }
    det = z_.mul(det, piv);
  }
  return det;
}

Character::Character(const RingPtr& ring, std::vector<unsigned> exponents) : ring_(ring), exps_(std::move(exponents)) {
  const auto& orders = ring_->spec().orders;
  if (exps_.size() != orders.size()) throw SpecMismatch("character needs one exponent per cyclic factor");
  unsigned e = 1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (exps_[i] >= orders[i]) throw OutOfRange("character exponent out of range");
    const unsigned ord = orders[i] / std::gcd(exps_[i] == 0 ? orders[i] : exps_[i], orders[i]);
    e = std::lcm(e, ord);
  }
  cyclo_ = std::make_shared<CycloRing>(ring_->zmod(), e);
  for (std::size_t i = 0; i < orders.size(); ++i) {
    // value(delta_i)^{m_i} must be 1
    const u64 a = static_cast<u64>(exps_[i]) * e / orders[i];
    if ((a * orders[i]) % e != 0) throw OutOfRange("character value is not an m_i-th root of unity");
  }
}

std::vector<u64> Character::value(std::size_t i) const {
  const unsigned e = cyclo_->order();
  return cyclo_->root_power(static_cast<u64>(exps_.at(i)) * e / ring_->spec().orders[i]);
}

u64 Character::root_exponent(std::size_t gi) const {
  const unsigned e = cyclo_->order();
  const auto a = ring_->group_exponents(gi);
  u64 r = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    r = (r + static_cast<u64>(a[i]) * exps_[i] % e * (e / ring_->spec().orders[i])) % e;
  return r;
}

std::vector<Character> Character::all(const RingPtr& ring) {
  const auto& orders = ring->spec().orders;
  std::vector<Character> out;
  std::vector<unsigned> e(orders.size(), 0);
  while (true) {
    out.emplace_back(ring, e);
    std::size_t i = orders.size();
    while (i > 0) {
      --i;
      if (++e[i] < orders[i]) break;
      e[i] = 0;
      if (i == 0) return out;
    }
    if (orders.empty()) return out;
  }
}

bool CycloTPoly::is_zero() const {
  for (const auto& c : coeffs)
    for (u64 v : c)
      if (v) return false;
  return true;
}

CycloTPoly CycloTPoly::operator+(const CycloTPoly& o) const {
  CycloTPoly r = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = cyclo->add(coeffs[i], o.coeffs[i]);
  return r;
}

CycloTPoly CycloTPoly::operator*(const CycloTPoly& o) const {
  CycloTPoly r = *this;
  const std::size_t ts = t_ring->t_size();
  for (auto& c : r.coeffs) c.assign(cyclo->degree(), 0);
  for (std::size_t i = 0; i < ts; ++i) {
    bool nz = false;
    for (u64 v : coeffs[i]) nz = nz || v;
    if (!nz) continue;
    for (std::size_t j = 0; j < ts; ++j) {
      const long t = t_ring->t_mul(i, j);
      if (t < 0) continue;
      r.coeffs[t] = cyclo->add(r.coeffs[t], cyclo->mul(coeffs[i], o.coeffs[j]));
    }
  }
  return r;
}

CycloTPoly char_eval(const Character& chi, const RingElement& x) {
  const Ring& R = x.r();
  CycloTPoly out;
  out.cyclo = std::make_shared<CycloRing>(chi.cyclo());
  out.t_ring = R.t_part();
  const std::size_t ts = R.t_size();
  const std::size_t deg = chi.cyclo().degree();
  const Zmod& z = R.zmod();
  out.coeffs.assign(ts, std::vector<u64>(deg, 0));
  for (std::size_t gi = 0; gi < R.group_size(); ++gi) {
    const auto& root = chi.cyclo().root_power(chi.root_exponent(gi));
    for (std::size_t ti = 0; ti < ts; ++ti) {
      const u64 c = x.coeff(gi * ts + ti);
      if (c == 0) continue;
      auto& dst = out.coeffs[ti];
      for (std::size_t l = 0; l < deg; ++l) dst[l] = z.add(dst[l], z.mul(c, root[l]));
    }
  }
  return out;
}

}  // namespace fitshift
