#include "fitshift/ideal.hpp"

#include "fitshift/character.hpp"
#include "fitshift/error.hpp"

#include <algorithm>
#include <numeric>

namespace fitshift {

namespace {

void check_ring(const RingPtr& ring, const RingElement& x) {
  if (!x.valid() || !ring->compatible(x.r())) throw SpecMismatch("ideal generator lives on a different spec");
}

// Inserts the Z/p^k-span of {g * b} into hb unless g is already a member.
void insert_ideal_generator(HowellBuilder& hb, const RingElement& g, std::vector<u64>& buf) {
  if (g.is_zero() || hb.contains(g.coeffs())) return;
  const std::size_t n = g.size();
  for (std::size_t b = 0; b < n; ++b) {
    times_monomial_into(g, b, buf);
    hb.insert(buf);
  }
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<RingElement> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_) check_ring(ring_, g);
}

const CoeffMatrix& Ideal::canonical() const {
  std::call_once(cache_->canon_once, [this] {
    const std::size_t n = ring_->basis_size();
    HowellBuilder hb(ring_->zmod(), n);
    std::vector<u64> buf(n);
    // Sparse generators first: they tend to fill the span cheaply.
    std::vector<const RingElement*> order;
    for (const auto& g : gens_) order.push_back(&g);
    std::stable_sort(order.begin(), order.end(), [](const RingElement* a, const RingElement* b) {
      return a->nonzero_count() < b->nonzero_count();
    });
    for (const RingElement* g : order) insert_ideal_generator(hb, *g, buf);
    cache_->canon = hb.finish();
  });
  return *cache_->canon;
}

bool Ideal::contains(const RingElement& x) const {
  check_ring(ring_, x);
  return member_howell(x.coeffs(), canonical());
}

unsigned Ideal::length() const {
  const CoeffMatrix& h = canonical();
  const Zmod& z = h.zmod;
  unsigned total = 0;
  for (const auto& row : h.rows) {
    auto it = std::find_if(row.begin(), row.end(), [](u64 x) { return x != 0; });
    total += z.k() - z.valuation(*it);
  }
  return total;
}

std::vector<RingElement> Ideal::tau_howell_rows() const {
  const CoeffMatrix& h = canonical();
  const std::size_t n = ring_->basis_size();
  const Ring& R = *ring_;
  // Column order in the tau/T basis: decreasing total degree, then index.
  std::vector<unsigned> degree(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    unsigned deg = R.t_degree_of(idx % R.t_size());
    for (unsigned a : R.group_exponents(idx / R.t_size())) deg += a;
    degree[idx] = deg;
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });

  HowellBuilder tau_hb(R.zmod(), n);
  std::vector<u64> permuted(n);
  for (const auto& row : h.rows) {
    std::vector<u64> tc = tau_coordinates(RingElement(ring_, row));
    for (std::size_t c = 0; c < n; ++c) permuted[c] = tc[perm[c]];
    tau_hb.insert(permuted);
  }
  const CoeffMatrix th = tau_hb.finish();
  std::vector<RingElement> out;
  std::vector<u64> tc(n);
  for (std::size_t r = th.rows.size(); r-- > 0;) {
    for (std::size_t c = 0; c < n; ++c) tc[perm[c]] = th.rows[r][c];
    out.push_back(from_tau_coordinates(ring_, tc));
  }
  return out;
}

const std::vector<RingElement>& Ideal::display_generators() const {
  std::call_once(cache_->display_once, [this] {
    const CoeffMatrix& h = canonical();
    const std::size_t n = ring_->basis_size();
    std::vector<RingElement> kept;
    HowellBuilder sub(ring_->zmod(), n);
    std::vector<u64> buf(n);
    for (RingElement& x : tau_howell_rows()) {
      if (sub.contains(x.coeffs())) continue;
      insert_ideal_generator(sub, x, buf);
      kept.push_back(std::move(x));
      if (sub.rank() == h.rows.size() && sub.finish() == h) break;
    }
    cache_->display = std::move(kept);
  });
  return cache_->display;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!a.ring()->compatible(*b.ring())) throw SpecMismatch("ideals live on different specs");
  return a.canonical() == b.canonical();
}

Ideal ideal_mul(const Ideal& a, const Ideal& b) {
  if (!a.ring()->compatible(*b.ring())) throw SpecMismatch("ideals live on different specs");
  std::vector<RingElement> gens;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) {
      RingElement z = x * y;
      if (!z.is_zero()) gens.push_back(std::move(z));
    }
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!a.ring()->compatible(*b.ring())) throw SpecMismatch("ideals live on different specs");
  std::vector<RingElement> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_pow(const Ideal& a, unsigned e) {
  Ideal r = Ideal::unit(a.ring());
  for (unsigned i = 0; i < e; ++i) {
    r = ideal_mul(r, a);
    // keep the generator list short between steps
    r = Ideal(a.ring(), r.display_generators());
  }
  return r;
}

Ideal ideal_image(const RingHom& h, const Ideal& a) {
  std::vector<RingElement> gens;
  for (const auto& g : a.generators()) gens.push_back(h.apply(g));
  return Ideal(h.target(), std::move(gens));
}

Ideal ideal_reduced(const Ideal& a, const RingPtr& target) {
  std::vector<RingElement> gens;
  for (const auto& g : a.generators()) gens.push_back(g.reduced_to(target));
  return Ideal(target, std::move(gens));
}

Ideal ideal_scaled(const Ideal& a, const RingElement& f) {
  check_ring(a.ring(), f);
  std::vector<RingElement> gens;
  for (const auto& g : a.generators()) gens.push_back(g * f);
  return Ideal(a.ring(), std::move(gens));
}

NzdVerdict nzd_certificate(const RingElement& f) {
  if (f.is_zero()) return NzdVerdict::inconclusive;
  for (const Character& chi : Character::all(f.ring())) {
    const CycloTPoly v = char_eval(chi, f);
    const bool ok = std::any_of(v.coeffs.begin(), v.coeffs.end(),
                                [&](const std::vector<u64>& c) { return v.cyclo->norm(c) != 0; });
    if (!ok) return NzdVerdict::inconclusive;
  }
  return NzdVerdict::certified;
}

FractionalIdeal::FractionalIdeal(Ideal numerator, RingElement denominator, bool assume_nzd)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  check_ring(num_.ring(), den_);
  if (den_.is_zero()) throw OutOfRange("zero denominator");
  if (den_.is_one() || nzd_certificate(den_) == NzdVerdict::certified) {
    status_ = NzdStatus::certified;
  } else if (assume_nzd) {
    status_ = NzdStatus::assumed;
  } else {
    throw Unsupported("denominator is not certified as a non-zero-divisor (pass assume-nzd to proceed)");
  }
}

namespace {

bool assumed(const FractionalIdeal& x) { return x.nzd_status() == NzdStatus::assumed; }

}  // namespace

FractionalIdeal frac_mul(const FractionalIdeal& a, const FractionalIdeal& b) {
  return FractionalIdeal(ideal_mul(a.numerator(), b.numerator()), a.denominator() * b.denominator(),
                         assumed(a) || assumed(b));
}

FractionalIdeal frac_sum(const FractionalIdeal& a, const FractionalIdeal& b) {
  Ideal num = ideal_sum(ideal_scaled(a.numerator(), b.denominator()), ideal_scaled(b.numerator(), a.denominator()));
  return FractionalIdeal(std::move(num), a.denominator() * b.denominator(), assumed(a) || assumed(b));
}

FractionalIdeal frac_image(const RingHom& h, const FractionalIdeal& a, bool assume_nzd) {
  return FractionalIdeal(ideal_image(h, a.numerator()), h.apply(a.denominator()), assume_nzd || assumed(a));
}

FracVerdict frac_equal(const FractionalIdeal& x, const FractionalIdeal& y) {
  if (!x.ring()->compatible(*y.ring())) throw SpecMismatch("fractional ideals live on different specs");
  FracVerdict v;
  v.k = x.ring()->spec().k;
  const RingElement& f = x.denominator();
  const RingElement& g = y.denominator();
  v.equal = ideal_equal(ideal_scaled(x.numerator(), g), ideal_scaled(y.numerator(), f));
  v.certified_t_precision = std::max(0, static_cast<int>(x.ring()->N()) - f.t_degree() - g.t_degree());
  return v;
}

}  // namespace fitshift
