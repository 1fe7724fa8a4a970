#include "fitshift/group_ring.hpp"

#include "fitshift/error.hpp"

#include <algorithm>
#include <sstream>

namespace fitshift {

std::string GroupRingSpec::to_string() const {
  std::ostringstream os;
  os << "p=" << p << " k=" << k << " orders=";
  for (std::size_t i = 0; i < orders.size(); ++i) os << (i ? "," : "") << orders[i];
  os << " d=" << d << " N=" << N;
  return os.str();
}

RingPtr Ring::make(GroupRingSpec spec) {
  return RingPtr(new Ring(std::move(spec)));
}

Ring::Ring(GroupRingSpec spec) : spec_(std::move(spec)), zmod_(spec_.p, spec_.k) {
  if (spec_.N == 0) throw OutOfRange("T-truncation N must be positive");
  for (unsigned m : spec_.orders)
    if (m < 2) throw OutOfRange("cyclic factor orders must be >= 2");
  for (unsigned m : spec_.orders) group_size_ *= m;
  for (unsigned j = 0; j < spec_.d; ++j) t_size_ *= spec_.N;
  if (group_size_ * t_size_ > (1u << 20)) throw OutOfRange("basis size exceeds 2^20");

  const std::size_t G = group_size_;
  gmul_.resize(G * G);
  ginv_.resize(G);
  std::vector<unsigned> a(s()), b(s()), c(s());
  for (std::size_t gi = 0; gi < G; ++gi) {
    a = group_exponents(gi);
    for (std::size_t i = 0; i < s(); ++i) c[i] = (spec_.orders[i] - a[i]) % spec_.orders[i];
    ginv_[gi] = group_index(c);
    for (std::size_t gj = 0; gj < G; ++gj) {
      b = group_exponents(gj);
      for (std::size_t i = 0; i < s(); ++i) c[i] = (a[i] + b[i]) % spec_.orders[i];
      gmul_[gi * G + gj] = group_index(c);
    }
  }

  const std::size_t Ts = t_size_;
  tmul_.resize(Ts * Ts);
  t_total_degree_.resize(Ts);
  std::vector<unsigned> u(spec_.d), v(spec_.d), w(spec_.d);
  for (std::size_t ti = 0; ti < Ts; ++ti) {
    u = t_exponents(ti);
    unsigned deg = 0;
    for (unsigned e : u) deg += e;
    t_total_degree_[ti] = deg;
    for (std::size_t tj = 0; tj < Ts; ++tj) {
      v = t_exponents(tj);
      bool drop = false;
      for (unsigned j = 0; j < spec_.d; ++j) {
        w[j] = u[j] + v[j];
        if (w[j] >= spec_.N) drop = true;
      }
      tmul_[ti * Ts + tj] = drop ? -1 : static_cast<long>(t_index(w));
    }
  }
}

std::size_t Ring::group_index(std::span<const unsigned> a) const {
  if (a.size() != s()) throw OutOfRange("group exponent tuple has wrong length");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < s(); ++i) {
    if (a[i] >= spec_.orders[i]) throw OutOfRange("group exponent out of range");
    idx = idx * spec_.orders[i] + a[i];
  }
  return idx;
}

std::size_t Ring::t_index(std::span<const unsigned> b) const {
  if (b.size() != spec_.d) throw OutOfRange("T exponent tuple has wrong length");
  std::size_t idx = 0;
  for (unsigned j = 0; j < spec_.d; ++j) {
    if (b[j] >= spec_.N) throw OutOfRange("T exponent out of range");
    idx = idx * spec_.N + b[j];
  }
  return idx;
}

std::vector<unsigned> Ring::group_exponents(std::size_t gi) const {
  std::vector<unsigned> a(s());
  for (std::size_t i = s(); i-- > 0;) {
    a[i] = static_cast<unsigned>(gi % spec_.orders[i]);
    gi /= spec_.orders[i];
  }
  return a;
}

std::vector<unsigned> Ring::t_exponents(std::size_t ti) const {
  std::vector<unsigned> b(spec_.d);
  for (unsigned j = spec_.d; j-- > 0;) {
    b[j] = static_cast<unsigned>(ti % spec_.N);
    ti /= spec_.N;
  }
  return b;
}

RingElement Ring::zero() const {
  return RingElement(shared_from_this(), std::vector<u64>(basis_size(), 0));
}

RingElement Ring::one() const { return constant(1); }

RingElement Ring::constant(i64 c) const {
  std::vector<u64> v(basis_size(), 0);
  v[0] = zmod_.reduce(c);
  return RingElement(shared_from_this(), std::move(v));
}

RingElement Ring::monomial(std::span<const unsigned> a, std::span<const unsigned> b, i64 c) const {
  std::vector<u64> v(basis_size(), 0);
  v[index(a, b)] = zmod_.reduce(c);
  return RingElement(shared_from_this(), std::move(v));
}

RingElement Ring::delta(std::size_t i) const {
  if (i >= s()) throw OutOfRange("delta index out of range");
  std::vector<unsigned> a(s(), 0), b(d(), 0);
  a[i] = 1;
  return monomial(a, b);
}

RingElement Ring::tau(std::size_t i) const { return delta(i) - one(); }

RingElement Ring::t(std::size_t j) const {
  if (j >= d()) throw OutOfRange("T index out of range");
  std::vector<unsigned> a(s(), 0), b(d(), 0);
  if (N() == 1) return zero();
  b[j] = 1;
  return monomial(a, b);
}

RingElement Ring::norm_element(std::span<const std::size_t> subset) const {
  RingElement acc = one();
  for (std::size_t i : subset) {
    if (i >= s()) throw OutOfRange("norm factor index out of range");
    RingElement sum = zero();
    RingElement g = one();
    RingElement dl = delta(i);
    for (unsigned j = 0; j < spec_.orders[i]; ++j) {
      sum += g;
      g = g * dl;
    }
    acc = acc * sum;
  }
  return acc;
}

RingElement Ring::norm_element() const {
  std::vector<std::size_t> all(s());
  for (std::size_t i = 0; i < s(); ++i) all[i] = i;
  return norm_element(all);
}

RingElement Ring::element(
    const std::vector<std::pair<std::pair<std::vector<unsigned>, std::vector<unsigned>>, i64>>& terms) const {
  std::vector<u64> v(basis_size(), 0);
  for (const auto& [mono, c] : terms) {
    std::size_t idx = index(mono.first, mono.second);
    v[idx] = zmod_.add(v[idx], zmod_.reduce(c));
  }
  return RingElement(shared_from_this(), std::move(v));
}

RingPtr Ring::with_precision(unsigned k, unsigned N) const {
  GroupRingSpec sp = spec_;
  sp.k = k;
  sp.N = N;
  return make(std::move(sp));
}

RingPtr Ring::t_part() const {
  GroupRingSpec sp = spec_;
  sp.orders.clear();
  return make(std::move(sp));
}

// ---------------------------------------------------------------------------

RingElement::RingElement(RingPtr ring, std::vector<u64> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
  if (c_.size() != ring_->basis_size()) throw OutOfRange("coefficient vector length differs from basis size");
  const Zmod& z = ring_->zmod();
  for (u64& x : c_) x = z.reduce_u(x);
}

void RingElement::check_same(const RingElement& o) const {
  if (!ring_ || !o.ring_ || !ring_->compatible(*o.ring_))
    throw SpecMismatch("ring elements live on different specs");
}

bool RingElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](u64 x) { return x == 0; });
}

bool RingElement::is_one() const {
  if (c_.empty() || c_[0] != 1 % ring_->zmod().modulus()) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](u64 x) { return x == 0; });
}

int RingElement::t_degree() const {
  int deg = -1;
  const std::size_t ts = ring_->t_size();
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) deg = std::max(deg, static_cast<int>(ring_->t_degree_of(i % ts)));
  return deg;
}

std::size_t RingElement::nonzero_count() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](u64 x) { return x != 0; }));
}

RingElement RingElement::operator+(const RingElement& o) const {
  RingElement r = *this;
  r += o;
  return r;
}

RingElement RingElement::operator-(const RingElement& o) const {
  RingElement r = *this;
  r -= o;
  return r;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  check_same(o);
  const Zmod& z = ring_->zmod();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = z.add(c_[i], o.c_[i]);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  check_same(o);
  const Zmod& z = ring_->zmod();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = z.sub(c_[i], o.c_[i]);
  return *this;
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  const Zmod& z = ring_->zmod();
  for (u64& x : r.c_) x = z.neg(x);
  return r;
}

RingElement RingElement::operator*(const RingElement& o) const {
  check_same(o);
  const Ring& R = *ring_;
  const Zmod& z = R.zmod();
  const std::size_t ts = R.t_size();
  std::vector<u64> out(c_.size(), 0);

  std::vector<std::size_t> ynz;
  ynz.reserve(o.c_.size());
  for (std::size_t j = 0; j < o.c_.size(); ++j)
    if (o.c_[j] != 0) ynz.push_back(j);

  for (std::size_t i = 0; i < c_.size(); ++i) {
    const u64 xi = c_[i];
    if (xi == 0) continue;
    const std::size_t gi = i / ts, ti = i % ts;
    for (std::size_t j : ynz) {
      const long tt = R.t_mul(ti, j % ts);
      if (tt < 0) continue;
      const std::size_t idx = R.group_mul(gi, j / ts) * ts + static_cast<std::size_t>(tt);
      out[idx] = z.add(out[idx], z.mul(xi, o.c_[j]));
    }
  }
  return RingElement(ring_, std::move(out));
}

RingElement RingElement::scaled(u64 c) const {
  RingElement r = *this;
  const Zmod& z = ring_->zmod();
  c = z.reduce_u(c);
  for (u64& x : r.c_) x = z.mul(x, c);
  return r;
}

RingElement RingElement::pow(u64 e) const {
  RingElement result = ring_->one();
  RingElement base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

void times_monomial_into(const RingElement& x, std::size_t idx, std::span<u64> out) {
  const Ring& R = x.r();
  const std::size_t ts = R.t_size();
  const std::size_t g = idx / ts, t = idx % ts;
  std::fill(out.begin(), out.end(), 0);
  const auto& c = x.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const long tt = R.t_mul(i % ts, t);
    if (tt < 0) continue;
    out[R.group_mul(i / ts, g) * ts + static_cast<std::size_t>(tt)] = c[i];
  }
}

RingElement RingElement::times_monomial(std::size_t idx) const {
  std::vector<u64> out(c_.size());
  times_monomial_into(*this, idx, out);
  return RingElement(ring_, std::move(out));
}

RingElement RingElement::reduced_to(const RingPtr& target) const {
  const Ring& S = *ring_;
  const Ring& T = *target;
  if (S.spec().p != T.spec().p || S.spec().orders != T.spec().orders || S.d() != T.d() ||
      T.spec().k > S.spec().k || T.N() > S.N())
    throw SpecMismatch("precision reduction needs the same group and fewer digits");
  std::vector<u64> out(T.basis_size(), 0);
  const u64 m = T.zmod().modulus();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    auto b = S.t_exponents(i % S.t_size());
    if (std::any_of(b.begin(), b.end(), [&](unsigned e) { return e >= T.N(); })) continue;
    out[(i / S.t_size()) * T.t_size() + T.t_index(b)] = c_[i] % m;
  }
  return RingElement(target, std::move(out));
}

bool RingElement::operator==(const RingElement& o) const {
  if (!ring_ || !o.ring_) return !ring_ && !o.ring_;
  return ring_->compatible(*o.ring_) && c_ == o.c_;
}

RingElement augmentation(const RingElement& x) {
  const Ring& R = x.r();
  RingPtr target = R.t_part();
  const Zmod& z = R.zmod();
  const std::size_t ts = R.t_size();
  std::vector<u64> out(ts, 0);
  for (std::size_t i = 0; i < x.size(); ++i) out[i % ts] = z.add(out[i % ts], x.coeff(i));
  return RingElement(target, std::move(out));
}

}  // namespace fitshift

namespace fitshift {

namespace {

// Applies, along every cyclic axis, the transform c'_j = sum_a c_a * M[a][j].
std::vector<u64> transform_axes(const Ring& R, std::vector<u64> c, bool to_tau) {
  const Zmod& z = R.zmod();
  const std::size_t ts = R.t_size();
  std::size_t inner = ts;  // stride of axis i in the flat index
  for (std::size_t i = R.s(); i-- > 0;) {
    const unsigned m = R.spec().orders[i];
    std::vector<std::vector<u64>> binom(m, std::vector<u64>(m, 0));
    for (unsigned a = 0; a < m; ++a) {
      binom[a][0] = 1;
      for (unsigned j = 1; j <= a; ++j) binom[a][j] = z.add(binom[a - 1][j - 1], j < a ? binom[a - 1][j] : 0);
    }
    // to_tau: delta^a = sum_j C(a,j) tau^j ; from_tau: tau^j = sum_a C(j,a) (-1)^{j-a} delta^a
    std::vector<u64> fiber(m), out(m);
    for (std::size_t base = 0; base < c.size(); ++base) {
      if ((base / inner) % m != 0) continue;
      for (unsigned a = 0; a < m; ++a) fiber[a] = c[base + a * inner];
      std::fill(out.begin(), out.end(), 0);
      for (unsigned a = 0; a < m; ++a) {
        if (fiber[a] == 0) continue;
        for (unsigned j = 0; j <= a; ++j) {
          u64 coef = binom[a][j];
          if (!to_tau && ((a - j) & 1)) coef = z.neg(coef);
          out[j] = z.add(out[j], z.mul(fiber[a], coef));
        }
      }
      for (unsigned a = 0; a < m; ++a) c[base + a * inner] = out[a];
    }
    inner *= m;
  }
  return c;
}

}  // namespace

std::vector<u64> tau_coordinates(const RingElement& x) { return transform_axes(x.r(), x.coeffs(), true); }

RingElement from_tau_coordinates(const RingPtr& ring, std::vector<u64> coords) {
  return RingElement(ring, transform_axes(*ring, std::move(coords), false));
}

}  // namespace fitshift
