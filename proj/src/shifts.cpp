#include "fitshift/shifts.hpp"

#include "fitshift/error.hpp"

#include <algorithm>
#include <numeric>

namespace fitshift {

namespace {

void check_request(const ShiftRequest& req) {
  if (!req.ring) throw OutOfRange("shift request without a ring");
  if (req.ring->d() == 0) throw Unsupported("shifts need at least one T variable (d >= 1)");
  const std::size_t s = req.ring->s();
  if (!req.exponents.empty() && req.exponents.size() != s)
    throw OutOfRange("one generator exponent per cyclic factor expected");
  if (!req.permutation.empty()) {
    std::vector<std::size_t> sorted = req.permutation;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted.size() != s || sorted[i] != i) throw OutOfRange("factor permutation is not a permutation");
  }
}

// Complex with C_0 = R and nothing above it.
ChainComplex point_complex(const RingPtr& ring, std::size_t length) {
  ChainComplex c;
  c.ring = ring;
  c.ranks.assign(length + 1, 0);
  c.ranks[0] = 1;
  c.degree_labels.assign(length + 1, {});
  c.degree_labels[0] = {{}};
  for (std::size_t j = 1; j <= length; ++j) c.boundaries.emplace_back(ring, c.ranks[j - 1], 0);
  return c;
}

RingElement t_last(const RingPtr& ring) { return ring->t(ring->d() - 1); }

}  // namespace

TrivialResolution trivial_resolution(const ShiftRequest& req, std::size_t length) {
  check_request(req);
  const RingPtr& ring = req.ring;
  RingHom lift = RingHom::quotient(ring, {}, {ring->d() - 1});
  const RingPtr& sub = lift.target();
  std::vector<ChainComplex> factors;
  for (std::size_t pos = 0; pos < ring->s(); ++pos) {
    const std::size_t i = req.permutation.empty() ? pos : req.permutation[pos];
    const unsigned u = req.exponents.empty() ? 1 : req.exponents[i];
    factors.push_back(cyclic_complex(sub, i, length, u));
  }
  for (std::size_t j = 0; j < sub->d(); ++j) factors.push_back(t_complex(sub, j));
  ChainComplex c = factors.empty() ? point_complex(sub, length) : tensor(factors, length);
  return TrivialResolution{std::move(lift), std::move(c)};
}

long shift_exponent(const std::vector<std::size_t>& ranks, int n) {
  long t = 0;
  for (int j = 0; j < n; ++j) {
    const long r = static_cast<long>(ranks.at(j));
    t += ((n + j) % 2 == 0) ? r : -r;
  }
  return t;
}

FractionalIdeal shift_trivial(const ShiftRequest& req) {
  check_request(req);
  const RingPtr& ring = req.ring;
  const int n = req.n;
  if (n < 0) {
    if (ring->d() == 1) {
      if (n == -1) return FractionalIdeal(Ideal(ring, {ring->norm_element(), ring->t(0)}), ring->t(0));
      ShiftRequest r = req;
      r.n = -2 - n;
      return shift_trivial(r);
    }
    if (ring->s() <= 1) {
      ShiftRequest r = req;
      while (r.n < static_cast<int>(ring->d()) - 1) r.n += 2;
      return shift_trivial(r);
    }
    throw Unsupported("negative shifts need d = 1 or a cyclic group");
  }

  const TrivialResolution res = trivial_resolution(req, static_cast<std::size_t>(n) + 1);
  const PresentedModule nn = lift_presentation(PresentedModule{res.complex.d(n + 1), std::nullopt}, res.lift);
  Ideal fitt = fitting_ideal(nn, req.jobs);
  const long t = shift_exponent(res.complex.ranks, n);
  const RingElement T = t_last(ring);
  if (t >= 0) return FractionalIdeal(ideal_scaled(fitt, T.pow(t)), ring->one());
  if (-t >= static_cast<long>(ring->N()))
    throw OutOfRange("T-truncation N = " + std::to_string(ring->N()) + " is too small for the denominator T^" +
                     std::to_string(-t));
  return FractionalIdeal(std::move(fitt), T.pow(-t));
}

FractionalIdeal shift_trivial(const RingPtr& ring, int n, unsigned jobs) {
  ShiftRequest req;
  req.ring = ring;
  req.n = n;
  req.jobs = jobs;
  return shift_trivial(req);
}

SequenceShift shift_from_sequence(const SequenceData& data, unsigned jobs) {
  const RingPtr& ring = data.n_module.ring();
  Ideal num = fitting_ideal(data.n_module, jobs);
  RingElement den = ring->one();
  bool assume = false;
  for (std::size_t i = 0; i < data.p_list.size(); ++i) {
    const SequenceTerm& term = data.p_list[i];
    if (!term.module.ring()->compatible(*ring) || !term.generator.r().compatible(*ring))
      throw SpecMismatch("sequence terms live on different specs");
    if (!ideal_equal(fitting_ideal(term.module, jobs), Ideal::principal(term.generator)))
      throw OutOfRange("declared generator of P_" + std::to_string(i + 1) + " does not generate its Fitting ideal");
    if (!term.assume_nzd && nzd_certificate(term.generator) != NzdVerdict::certified)
      throw Unsupported("generator of P_" + std::to_string(i + 1) + " is not certified as a non-zero-divisor");
    assume = assume || term.assume_nzd;
    if ((i + 1) % 2 == 0)
      num = ideal_scaled(num, term.generator);
    else
      den = den * term.generator;
  }
  const auto& sp = ring->spec();
  std::string note = "exactness of the supplied sequence is asserted by the caller; Fitting ideals checked at k=" +
                     std::to_string(sp.k) + " N=" + std::to_string(sp.N);
  return SequenceShift{FractionalIdeal(std::move(num), std::move(den), assume), std::move(note)};
}

SequenceData trivial_sequence(const ShiftRequest& req) {
  if (req.n < 0) throw OutOfRange("trivial_sequence needs n >= 0");
  const RingPtr& ring = req.ring;
  const std::size_t n = static_cast<std::size_t>(req.n);
  const TrivialResolution res = trivial_resolution(req, n + 1);
  const RingElement T = t_last(ring);
  SequenceData data;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t r = res.complex.ranks[n - i];
    data.p_list.push_back(
        SequenceTerm{PresentedModule{RingMatrix::scalar_identity(T, r), T}, T.pow(r), false});
  }
  data.n_module = lift_presentation(PresentedModule{res.complex.d(n + 1), std::nullopt}, res.lift);
  return data;
}

SequenceData pad_sequence(const SequenceData& data, std::size_t position, const RingElement& f) {
  SequenceData out = data;
  const PresentedModule extra{RingMatrix(f.ring(), 1, 1, {f}), f};
  auto pad_p = [&](std::size_t i) {
    if (i == 0 || i > out.p_list.size()) throw OutOfRange("padding position out of range");
    SequenceTerm& t = out.p_list[i - 1];
    t.module = direct_sum(t.module, extra);
    t.generator = t.generator * f;
  };
  if (position == 0) {
    out.n_module = direct_sum(out.n_module, extra);
    pad_p(1);
  } else {
    pad_p(position);
    pad_p(position + 1);
  }
  return out;
}

PresentedModule b_delta(const RingPtr& ring) {
  if (ring->d() != 1) throw Unsupported("B_Delta is built for d = 1");
  ShiftRequest req;
  req.ring = ring;
  req.n = 2;
  const TrivialResolution res = trivial_resolution(req, 3);
  return lift_presentation(PresentedModule{res.complex.d(3), std::nullopt}, res.lift);
}

FracVerdict verify_second_shift_identity(const RingPtr& ring, unsigned jobs) {
  if (ring->spec().p == 2) throw OutOfRange("the identity is stated for odd p");
  if (ring->d() != 1) throw Unsupported("the identity is stated for d = 1");
  const FractionalIdeal lhs = shift_trivial(ring, 2, jobs);
  const Ideal fb = fitting_ideal(b_delta(ring), jobs);
  const RingElement T = ring->t(0);
  const long e = static_cast<long>(ring->s()) - 1;
  const FractionalIdeal rhs =
      e >= 0 ? FractionalIdeal(fb, T.pow(e)) : FractionalIdeal(ideal_scaled(fb, T), ring->one());
  return frac_equal(lhs, rhs);
}

}  // namespace fitshift
