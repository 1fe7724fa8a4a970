#include "fitshift/ring_hom.hpp"

#include "fitshift/error.hpp"

#include <algorithm>

namespace fitshift {

namespace {

bool contains(const std::vector<std::size_t>& v, std::size_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

GroupLike identity_image(const Ring& target, std::size_t delta, std::size_t gamma, bool is_delta) {
  GroupLike g;
  g.delta_exps.assign(target.s(), 0);
  g.gamma_exps.assign(target.d(), 0);
  if (is_delta)
    g.delta_exps[delta] = 1;
  else
    g.gamma_exps[gamma] = 1;
  return g;
}

}  // namespace

RingElement gamma_power(const Ring& ring, std::size_t j, u64 c) {
  if (j >= ring.d()) throw OutOfRange("T index out of range");
  RingElement base = ring.one() + ring.t(j);
  return base.pow(c);
}

RingElement evaluate(const Ring& ring, const GroupLike& g) {
  if (g.delta_exps.size() != ring.s() || g.gamma_exps.size() != ring.d())
    throw SpecMismatch("group-like image has the wrong number of coordinates");
  std::vector<unsigned> a(ring.s());
  for (std::size_t i = 0; i < ring.s(); ++i) a[i] = g.delta_exps[i] % ring.spec().orders[i];
  std::vector<unsigned> b(ring.d(), 0);
  RingElement x = ring.monomial(a, b, 1).scaled(g.scalar);
  for (std::size_t j = 0; j < ring.d(); ++j)
    if (g.gamma_exps[j] != 0) x = x * gamma_power(ring, j, g.gamma_exps[j]);
  return x;
}

RingHom RingHom::quotient(const RingPtr& source, const std::vector<std::size_t>& killed_deltas,
                          const std::vector<std::size_t>& killed_ts) {
  const Ring& S = *source;
  for (std::size_t i : killed_deltas)
    if (i >= S.s()) throw OutOfRange("quotient: delta index out of range");
  for (std::size_t j : killed_ts)
    if (j >= S.d()) throw OutOfRange("quotient: T index out of range");

  GroupRingSpec tsp = S.spec();
  tsp.orders.clear();
  std::vector<std::size_t> dmap(S.s(), 0), tmap(S.d(), 0);
  for (std::size_t i = 0; i < S.s(); ++i)
    if (!contains(killed_deltas, i)) {
      dmap[i] = tsp.orders.size();
      tsp.orders.push_back(S.spec().orders[i]);
    }
  tsp.d = 0;
  for (std::size_t j = 0; j < S.d(); ++j)
    if (!contains(killed_ts, j)) tmap[j] = tsp.d++;

  RingHom h;
  h.kind_ = Kind::quotient;
  h.source_ = source;
  h.target_ = Ring::make(tsp);
  h.killed_deltas_ = killed_deltas;
  h.killed_ts_ = killed_ts;
  std::sort(h.killed_deltas_.begin(), h.killed_deltas_.end());
  std::sort(h.killed_ts_.begin(), h.killed_ts_.end());
  const Ring& T = *h.target_;
  for (std::size_t i = 0; i < S.s(); ++i) {
    GroupLike g;
    g.delta_exps.assign(T.s(), 0);
    g.gamma_exps.assign(T.d(), 0);
    if (!contains(killed_deltas, i)) g.delta_exps[dmap[i]] = 1;
    h.delta_images_.push_back(g);
  }
  for (std::size_t j = 0; j < S.d(); ++j) {
    GroupLike g;
    g.delta_exps.assign(T.s(), 0);
    g.gamma_exps.assign(T.d(), 0);
    if (!contains(killed_ts, j)) g.gamma_exps[tmap[j]] = 1;
    h.gamma_images_.push_back(g);
  }
  return h;
}

RingHom RingHom::twist(const RingPtr& ring, std::vector<u64> delta_values, std::vector<u64> gamma_values) {
  const Ring& R = *ring;
  if (delta_values.size() != R.s() || gamma_values.size() != R.d())
    throw SpecMismatch("twist: one character value per generator is required");
  RingHom h;
  h.kind_ = Kind::twist;
  h.source_ = ring;
  h.target_ = ring;
  for (std::size_t i = 0; i < R.s(); ++i) {
    u64 v = R.zmod().reduce_u(delta_values[i]);
    if (!R.zmod().is_unit(v)) throw OutOfRange("twist: character value on delta is not a unit");
    GroupLike g = identity_image(R, i, 0, true);
    g.scalar = v;
    h.delta_images_.push_back(g);
  }
  for (std::size_t j = 0; j < R.d(); ++j) {
    u64 v = R.zmod().reduce_u(gamma_values[j]);
    if (!R.zmod().is_unit(v)) throw OutOfRange("twist: character value on 1+T is not a unit");
    GroupLike g = identity_image(R, 0, j, false);
    g.scalar = v;
    h.gamma_images_.push_back(g);
  }
  h.validate();
  return h;
}

RingHom RingHom::inclusion(const RingPtr& source, const RingPtr& target, std::vector<GroupLike> delta_images,
                           std::vector<GroupLike> gamma_images) {
  if (source->spec().p != target->spec().p || source->spec().k != target->spec().k)
    throw SpecMismatch("inclusion: coefficient rings differ");
  if (delta_images.size() != source->s() || gamma_images.size() != source->d())
    throw SpecMismatch("inclusion: one image per source generator is required");
  RingHom h;
  h.kind_ = Kind::inclusion;
  h.source_ = source;
  h.target_ = target;
  const Zmod& z = target->zmod();
  for (auto* imgs : {&delta_images, &gamma_images})
    for (GroupLike& g : *imgs) {
      if (g.delta_exps.size() != target->s() || g.gamma_exps.size() != target->d())
        throw SpecMismatch("inclusion: image has the wrong number of target coordinates");
      g.scalar = z.reduce_u(g.scalar);
      if (!z.is_unit(g.scalar)) throw OutOfRange("inclusion: image scalar is not a unit");
      for (std::size_t i = 0; i < target->s(); ++i) g.delta_exps[i] %= target->spec().orders[i];
    }
  h.delta_images_ = std::move(delta_images);
  h.gamma_images_ = std::move(gamma_images);
  h.validate();
  return h;
}

void RingHom::validate() const {
  const Ring& S = *source_;
  const Ring& T = *target_;
  const Zmod& z = T.zmod();
  for (std::size_t i = 0; i < S.s(); ++i) {
    const GroupLike& g = delta_images_[i];
    const u64 m = S.spec().orders[i];
    bool ok = z.pow(g.scalar, m) == 1 % z.modulus();
    for (std::size_t t = 0; t < T.s(); ++t) ok = ok && (g.delta_exps[t] * m) % T.spec().orders[t] == 0;
    for (u64 c : g.gamma_exps) ok = ok && c == 0;
    if (!ok) throw OutOfRange("homomorphism: image of delta_" + std::to_string(i + 1) + " does not have order dividing " + std::to_string(m));
  }
}

GroupLike RingHom::image_of(const GroupLike& g) const {
  const Ring& T = *target_;
  const Zmod& z = T.zmod();
  GroupLike out;
  out.scalar = z.reduce_u(g.scalar);
  out.delta_exps.assign(T.s(), 0);
  out.gamma_exps.assign(T.d(), 0);
  auto absorb = [&](const GroupLike& img, u64 e) {
    out.scalar = z.mul(out.scalar, z.pow(img.scalar, e));
    for (std::size_t t = 0; t < T.s(); ++t) {
      const u64 m = T.spec().orders[t];
      out.delta_exps[t] = static_cast<unsigned>((out.delta_exps[t] + (img.delta_exps[t] % m) * (e % m)) % m);
    }
    for (std::size_t t = 0; t < T.d(); ++t) out.gamma_exps[t] += img.gamma_exps[t] * e;
  };
  for (std::size_t i = 0; i < g.delta_exps.size(); ++i)
    if (g.delta_exps[i]) absorb(delta_images_[i], g.delta_exps[i]);
  for (std::size_t j = 0; j < g.gamma_exps.size(); ++j)
    if (g.gamma_exps[j]) absorb(gamma_images_[j], g.gamma_exps[j]);
  return out;
}

RingHom RingHom::after(const RingHom& first) const {
  if (!first.target_->compatible(*source_)) throw SpecMismatch("composition: target/source mismatch");
  RingHom h;
  h.kind_ = (kind_ == Kind::twist && first.kind_ == Kind::twist) ? Kind::twist : Kind::inclusion;
  h.source_ = first.source_;
  h.target_ = target_;
  for (const GroupLike& g : first.delta_images_) h.delta_images_.push_back(image_of(g));
  for (const GroupLike& g : first.gamma_images_) h.gamma_images_.push_back(image_of(g));
  h.validate();
  return h;
}

RingHom RingHom::inverse_twist() const {
  if (kind_ != Kind::twist) throw Unsupported("only twists are inverted");
  const Zmod& z = source_->zmod();
  std::vector<u64> dv, gv;
  for (const GroupLike& g : delta_images_) dv.push_back(*z.inverse(g.scalar));
  for (const GroupLike& g : gamma_images_) gv.push_back(*z.inverse(g.scalar));
  return twist(source_, std::move(dv), std::move(gv));
}

RingElement RingHom::section(const RingElement& y) const {
  if (kind_ != Kind::quotient) throw Unsupported("section exists only for quotient maps");
  if (!y.r().compatible(*target_)) throw SpecMismatch("section: element is not on the quotient spec");
  const Ring& S = *source_;
  const Ring& T = *target_;
  std::vector<u64> out(S.basis_size(), 0);
  for (std::size_t idx = 0; idx < y.size(); ++idx) {
    if (y.coeff(idx) == 0) continue;
    auto ta = T.group_exponents(idx / T.t_size());
    auto tb = T.t_exponents(idx % T.t_size());
    std::vector<unsigned> a(S.s(), 0), b(S.d(), 0);
    std::size_t ai = 0, bi = 0;
    for (std::size_t i = 0; i < S.s(); ++i)
      if (!contains(killed_deltas_, i)) a[i] = ta[ai++];
    for (std::size_t j = 0; j < S.d(); ++j)
      if (!contains(killed_ts_, j)) b[j] = tb[bi++];
    out[S.index(a, b)] = y.coeff(idx);
  }
  return RingElement(source_, std::move(out));
}

unsigned RingHom::exact_t_precision() const {
  const Ring& T = *target_;
  if (kind_ == Kind::quotient) return T.N();
  const Zmod& z = T.zmod();
  unsigned best = T.N();
  bool all_monomial = true;
  for (const GroupLike& g : gamma_images_) {
    const bool finite_trivial = std::all_of(g.delta_exps.begin(), g.delta_exps.end(), [](unsigned e) { return e == 0; });
    if (!finite_trivial) return 0;
    if (g.scalar == 1) continue;
    all_monomial = false;
    const unsigned v = z.valuation(z.sub(g.scalar, 1));
    if (v == 0) return 0;
    const unsigned loss = (T.spec().k + v - 1) / v;
    best = std::min(best, T.N() + 1 > loss ? T.N() + 1 - loss : 0u);
  }
  if (kind_ == Kind::inclusion && all_monomial) {
    // image of T_j^{N_src} only has monomials of total degree >= N_src
    const unsigned per_var = T.d() == 0 ? T.N() : (source_->N() + T.d() - 1) / T.d();
    best = std::min(best, per_var);
  }
  return best;
}

RingElement RingHom::apply(const RingElement& x) const {
  if (!x.r().compatible(*source_)) throw SpecMismatch("apply_hom: element is not on the source spec");
  const Ring& S = *source_;
  const Ring& T = *target_;
  const Zmod& z = T.zmod();

  if (kind_ == Kind::quotient) {
    std::vector<u64> out(T.basis_size(), 0);
    for (std::size_t idx = 0; idx < x.size(); ++idx) {
      if (x.coeff(idx) == 0) continue;
      auto a = S.group_exponents(idx / S.t_size());
      auto b = S.t_exponents(idx % S.t_size());
      std::vector<unsigned> ta, tb;
      bool dropped = false;
      for (std::size_t i = 0; i < S.s(); ++i)
        if (!contains(killed_deltas_, i)) ta.push_back(a[i]);
      for (std::size_t j = 0; j < S.d(); ++j) {
        if (contains(killed_ts_, j)) {
          if (b[j] != 0) dropped = true;
        } else {
          tb.push_back(b[j]);
        }
      }
      if (dropped) continue;
      const std::size_t t = T.index(ta, tb);
      out[t] = z.add(out[t], x.coeff(idx));
    }
    return RingElement(target_, std::move(out));
  }

  if (kind_ == Kind::twist) {
    // scale by rho on the finite part, then substitute T_j -> (u-1) + u T_j
    std::vector<u64> c = x.coeffs();
    const std::size_t ts = S.t_size();
    for (std::size_t gi = 0; gi < S.group_size(); ++gi) {
      auto a = S.group_exponents(gi);
      u64 f = 1;
      for (std::size_t i = 0; i < S.s(); ++i) f = z.mul(f, z.pow(delta_images_[i].scalar, a[i]));
      if (f != 1)
        for (std::size_t ti = 0; ti < ts; ++ti) c[gi * ts + ti] = z.mul(c[gi * ts + ti], f);
    }
    const unsigned N = S.N();
    for (std::size_t j = 0; j < S.d(); ++j) {
      const u64 u = gamma_images_[j].scalar;
      if (u == 1) continue;
      // sub[b][i]: coefficient of T^i in ((u-1) + uT)^b
      std::vector<std::vector<u64>> sub(N, std::vector<u64>(N, 0));
      sub[0][0] = 1;
      const u64 c0 = z.sub(u, 1);
      for (unsigned b = 1; b < N; ++b)
        for (unsigned i = 0; i <= b; ++i) {
          u64 v = z.mul(sub[b - 1][i], c0);
          if (i > 0) v = z.add(v, z.mul(sub[b - 1][i - 1], u));
          sub[b][i] = v;
        }
      u64 stride = 1;
      for (std::size_t jj = j + 1; jj < S.d(); ++jj) stride *= N;
      std::vector<u64> fiber(N), res(N);
      for (std::size_t base = 0; base < c.size(); ++base) {
        if ((base / stride) % N != 0) continue;
        for (unsigned b = 0; b < N; ++b) fiber[b] = c[base + b * stride];
        std::fill(res.begin(), res.end(), 0);
        for (unsigned b = 0; b < N; ++b) {
          if (fiber[b] == 0) continue;
          for (unsigned i = 0; i <= b; ++i) res[i] = z.add(res[i], z.mul(fiber[b], sub[b][i]));
        }
        for (unsigned b = 0; b < N; ++b) c[base + b * stride] = res[b];
      }
    }
    return RingElement(target_, std::move(c));
  }

  // generic substitution
  const std::size_t sg = S.group_size(), sts = S.t_size();
  std::vector<RingElement> gimg(sg);
  std::vector<bool> gused(sg, false);
  for (std::size_t idx = 0; idx < x.size(); ++idx)
    if (x.coeff(idx) != 0) gused[idx / sts] = true;
  for (std::size_t gi = 0; gi < sg; ++gi) {
    if (!gused[gi]) continue;
    GroupLike g;
    g.delta_exps = S.group_exponents(gi);
    g.gamma_exps.assign(S.d(), 0);
    gimg[gi] = evaluate(T, image_of(g));
  }
  std::vector<std::vector<RingElement>> tpow(S.d());
  for (std::size_t j = 0; j < S.d(); ++j) {
    RingElement tj = evaluate(T, gamma_images_[j]) - T.one();
    tpow[j].push_back(T.one());
    for (unsigned b = 1; b < S.N(); ++b) tpow[j].push_back(tpow[j].back() * tj);
  }
  RingElement result = T.zero();
  for (std::size_t ti = 0; ti < sts; ++ti) {
    RingElement acc = T.zero();
    bool any = false;
    for (std::size_t gi = 0; gi < sg; ++gi) {
      const u64 c = x.coeff(gi * sts + ti);
      if (c == 0) continue;
      acc += gimg[gi].scaled(c);
      any = true;
    }
    if (!any) continue;
    auto b = S.t_exponents(ti);
    for (std::size_t j = 0; j < S.d(); ++j)
      if (b[j]) acc = acc * tpow[j][b[j]];
    result += acc;
  }
  return result;
}

RingElement apply_hom(const RingHom& h, const RingElement& x) { return h.apply(x); }

}  // namespace fitshift
