#include "fitshift/apps.hpp"

#include "fitshift/error.hpp"
#include "fitshift/shifts.hpp"

#include <numeric>
#include <utility>

namespace fitshift {

namespace {

std::vector<std::size_t> inertia_indices(const DecompositionData& data) {
  std::vector<std::size_t> idx(data.inertia_orders.size());
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

u64 inverse_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  i64 t = 0, nt = 1, r = static_cast<i64>(m), nr = static_cast<i64>(a % m);
  while (nr != 0) {
    const i64 qq = r / nr;
    t = std::exchange(nt, t - qq * nt);
    r = std::exchange(nr, r - qq * nr);
  }
  if (r != 1) throw OutOfRange("exponent is not invertible");
  return static_cast<u64>(t < 0 ? t + static_cast<i64>(m) : t);
}

u64 power_int(u64 b, unsigned e) {
  u64 r = 1;
  while (e--) r *= b;
  return r;
}

GroupLike delta_generator(const Ring& ring, std::size_t i) {
  GroupLike g;
  g.delta_exps.assign(ring.s(), 0);
  g.gamma_exps.assign(ring.d(), 0);
  g.delta_exps[i] = 1;
  return g;
}

}  // namespace

GroupRingSpec DecompositionData::local_spec() const {
  GroupRingSpec sp;
  sp.p = p;
  sp.k = k;
  sp.orders = inertia_orders;
  if (m_v > 1) sp.orders.push_back(m_v);
  sp.d = 1;
  sp.N = N;
  return sp;
}

void DecompositionData::validate() const {
  const Zmod z(p, k);
  const GroupRingSpec sp = local_spec();
  if (m_v == 0) throw OutOfRange("m_v must be positive");
  if (m_v % p == 0) throw OutOfRange("m_v must be prime to p");
  if (q < 1) throw OutOfRange("q must be positive");
  const u64 qr = z.reduce(q);
  if (!z.is_unit(qr)) throw OutOfRange("q must be prime to p");
  if (delta_exponents.size() != sp.orders.size())
    throw OutOfRange("delta_exponents needs one entry per local cyclic factor (" + std::to_string(sp.orders.size()) +
                     ")");
  for (std::size_t i = 0; i < sp.orders.size(); ++i)
    if (delta_exponents[i] >= sp.orders[i]) throw OutOfRange("delta exponent out of range");
  if (gamma_exponent % p == 0) throw OutOfRange("gamma_exponent must be prime to p");
  const u64 omega = z.teichmuller(qr);
  if (m_v > 1) {
    if (std::gcd<u64>(delta_exponents.back(), m_v) != 1)
      throw OutOfRange("Frobenius must generate the order-m_v factor");
    if (z.pow(omega, m_v) != 1 % z.modulus()) throw OutOfRange("omega(q)^m_v != 1: m_v is not a multiple of the order of q mod p");
  } else if (omega != 1 % z.modulus()) {
    throw OutOfRange("m_v = 1 needs q = 1 mod p");
  }
}

RingElement frobenius_lift(const RingPtr& local, const DecompositionData& data) {
  GroupLike g;
  g.delta_exps = data.delta_exponents;
  g.gamma_exps = {data.gamma_exponent};
  return evaluate(*local, g);
}

KappaValues kappa_values(const DecompositionData& data) {
  data.validate();
  const Zmod z(data.p, data.k);
  const u64 qr = z.reduce(data.q);
  const u64 omega = z.teichmuller(qr);
  const u64 principal = z.mul(qr, *z.inverse(omega));  // <q>, in 1 + pZ_p
  KappaValues kv;
  kv.delta_values.assign(data.inertia_orders.size(), 1);
  if (data.m_v > 1) kv.delta_values.push_back(z.pow(omega, inverse_mod(data.delta_exponents.back(), data.m_v)));
  kv.gamma_value = z.pow(principal, inverse_mod(data.gamma_exponent % power_int(data.p, data.k - 1),
                                                power_int(data.p, data.k - 1)));
  return kv;
}

RingHom kappa_twist(const RingPtr& local, const DecompositionData& data, int r) {
  const KappaValues kv = kappa_values(data);
  const Zmod& z = local->zmod();
  auto pw = [&](u64 v) {
    const u64 base = r < 0 ? *z.inverse(v) : v;
    return z.pow(base, static_cast<u64>(r < 0 ? -static_cast<i64>(r) : r));
  };
  std::vector<u64> dv;
  for (u64 v : kv.delta_values) dv.push_back(pw(v));
  return RingHom::twist(local, std::move(dv), {pw(kv.gamma_value)});
}

FractionalIdeal euler_factor_closed(const DecompositionData& data, bool assume_nzd) {
  data.validate();
  const RingPtr local = Ring::make(data.local_spec());
  const RingElement den = frobenius_lift(local, data) - local->constant(data.q);
  const auto idx = inertia_indices(data);
  return FractionalIdeal(Ideal(local, {local->norm_element(idx), den}), den, assume_nzd);
}

FractionalIdeal euler_factor_direct(const DecompositionData& data, bool assume_nzd) {
  data.validate();
  const RingPtr local = Ring::make(data.local_spec());
  // Same finite part; the free generator 1+T' is sigma^{m_v}.
  const RingPtr aux = Ring::make(data.local_spec());
  const FractionalIdeal shifted = shift_trivial(aux, -1);

  std::vector<GroupLike> delta_images;
  for (std::size_t i = 0; i < local->s(); ++i) delta_images.push_back(delta_generator(*local, i));
  GroupLike sigma_m;
  sigma_m.delta_exps.resize(local->s());
  for (std::size_t i = 0; i < local->s(); ++i)
    sigma_m.delta_exps[i] = static_cast<unsigned>((u64{data.delta_exponents[i]} * data.m_v) % local->spec().orders[i]);
  sigma_m.gamma_exps = {data.gamma_exponent * data.m_v};
  const RingHom move = RingHom::inclusion(aux, local, std::move(delta_images), {sigma_m});
  const RingHom h = kappa_twist(local, data, -1).after(move);
  return frac_image(h, shifted, assume_nzd);
}

Ideal tate_twist_ideal(int r, const std::vector<u64>& delta_values, const std::vector<u64>& gamma_values,
                       const Ideal& ideal) {
  if (r == 0) return ideal;
  const RingPtr& ring = ideal.ring();
  const Zmod& z = ring->zmod();
  auto pw = [&](u64 v) {
    v = z.reduce_u(v);
    if (!z.is_unit(v)) throw OutOfRange("twist character value is not a unit");
    const u64 base = r < 0 ? *z.inverse(v) : v;
    return z.pow(base, static_cast<u64>(r < 0 ? -static_cast<i64>(r) : r));
  };
  std::vector<u64> dv, gv;
  for (u64 v : delta_values) dv.push_back(pw(v));
  for (u64 v : gamma_values) gv.push_back(pw(v));
  return ideal_image(RingHom::twist(ring, std::move(dv), std::move(gv)), ideal);
}

}  // namespace fitshift
