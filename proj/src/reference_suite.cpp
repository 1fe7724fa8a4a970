#include "fitshift/reference_suite.hpp"

#include "fitshift/apps.hpp"
#include "fitshift/error.hpp"
#include "fitshift/expr.hpp"
#include "fitshift/fitting.hpp"
#include "fitshift/shifts.hpp"

#include <functional>
#include <sstream>

namespace fitshift {

Ideal ideal_from_text(const RingPtr& ring, const std::string& gens) {
  ExprParser p(gens, ring);
  std::vector<RingElement> out;
  if (!p.at_end()) {
    do out.push_back(p.parse_expr());
    while (p.accept(','));
  }
  if (!p.at_end()) p.fail("unexpected trailing input");
  return Ideal(ring, std::move(out));
}

namespace {

struct Precision {
  unsigned k, N;
};

Precision pick(const SuiteOptions& o, unsigned k, unsigned N) {
  return o.precision ? Precision{o.precision->first, o.precision->second} : Precision{k, N};
}

RingPtr make_ring(u64 p, std::vector<unsigned> orders, unsigned d, Precision pr) {
  return Ring::make(GroupRingSpec{p, pr.k, std::move(orders), d, pr.N});
}

std::string stamp(const RingPtr& r) {
  const auto& sp = r->spec();
  std::string s = "p=" + std::to_string(sp.p) + " orders=";
  for (std::size_t i = 0; i < sp.orders.size(); ++i) s += (i ? "," : "") + std::to_string(sp.orders[i]);
  return s + " d=" + std::to_string(sp.d) + " k=" + std::to_string(sp.k) + " N=" + std::to_string(sp.N);
}

FractionalIdeal frac_text(const RingPtr& r, const std::string& num, const std::string& den) {
  return FractionalIdeal(ideal_from_text(r, num), parse_element(den, r));
}

// Runs body, turning exceptions into a failed check.
SuiteCheck run_check(const std::string& name, const RingPtr& ring, const std::function<std::string()>& body) {
  SuiteCheck c;
  c.name = name;
  c.stamp = stamp(ring);
  try {
    c.detail = body();
  } catch (const Error& e) {
    c.detail = std::string("error: ") + e.what();
  }
  c.pass = c.detail.empty();
  return c;
}

std::string expect_shifts(const RingPtr& r, const std::vector<std::pair<int, FractionalIdeal>>& cases, unsigned jobs) {
  std::string bad;
  for (const auto& [n, want] : cases)
    if (!frac_equal(shift_trivial(r, n, jobs), want)) bad += (bad.empty() ? "mismatch at n=" : ",") + std::to_string(n);
  return bad;
}

}  // namespace

std::vector<SuiteCheck> run_reference_suite(const SuiteOptions& o) {
  std::vector<SuiteCheck> out;
  const unsigned jobs = o.jobs;

  {
    const RingPtr r = make_ring(3, {3}, 1, pick(o, 4, 6));
    out.push_back(run_check("trivial-module shifts, one cyclic factor, n=-4..4", r, [&] {
      const FractionalIdeal even = frac_text(r, "tau1, t1", "1");
      const FractionalIdeal odd = frac_text(r, "N(), t1", "t1");
      std::vector<std::pair<int, FractionalIdeal>> cases;
      for (int n = -4; n <= 4; ++n) cases.emplace_back(n, n % 2 == 0 ? even : odd);
      return expect_shifts(r, cases, jobs);
    }));
  }
  {
    const RingPtr r = make_ring(3, {3, 3}, 1, pick(o, 4, 6));
    out.push_back(run_check("trivial-module shifts, two cyclic factors, n=0,1,2", r, [&] {
      return expect_shifts(
          r,
          {{0, frac_text(r, "tau1, tau2, t1", "1")},
           {1, frac_text(r, "N(), N(1)*t1, N(2)*t1, tau1*t1, tau2*t1, t1^2", "t1")},
           {2, frac_text(r,
                         "tau1^2, tau1*tau2, tau2^2, tau1*N(2), tau2*N(1), tau1*t1, tau2*t1, N(1)*t1, N(2)*t1, t1^2",
                         "1")}},
          jobs);
    }));
    out.push_back(run_check("negative shifts via the norm map and reflection, n=-1,-2,-3", r, [&] {
      return expect_shifts(r,
                           {{-1, frac_text(r, "N(), t1", "t1")},
                            {-2, shift_trivial(r, 0, jobs)},
                            {-3, shift_trivial(r, 1, jobs)}},
                           jobs);
    }));
  }
  {
    const RingPtr r = make_ring(3, {3}, 2, pick(o, 4, 5));
    out.push_back(run_check("trivial-module shifts, two T variables, cyclic group", r, [&] {
      const FractionalIdeal all = frac_text(r, "tau1, N(), t1, t2", "1");
      return expect_shifts(r,
                           {{0, frac_text(r, "tau1, t1, t2", "1")}, {1, all}, {2, all}, {3, all}, {-1, all}, {-2, all}},
                           jobs);
    }));
  }
  {
    const RingPtr r = make_ring(3, {3, 3}, 2, pick(o, 3, 4));
    out.push_back(run_check("second shift, two T variables, two cyclic factors", r, [&] {
      const Ideal a = ideal_from_text(r, "tau1, tau2, t1, t2");
      const Ideal b = ideal_from_text(r, "tau1, tau2, N(1), N(2), t1, t2");
      const Ideal want = ideal_sum(ideal_mul(a, ideal_pow(b, 2)), ideal_from_text(r, "N()^2"));
      return expect_shifts(r, {{2, FractionalIdeal::integral(want)}}, jobs);
    }));
  }
  {
    const RingPtr r = make_ring(3, {3}, 1, pick(o, 4, 6));
    out.push_back(run_check("Fitting ideals separate only over the coefficient ring", r, [&] {
      const RingMatrix hm = RingMatrix::from_rows(
          r, {{parse_element("tau1", r), parse_element("t1", r), r->zero(), r->zero()},
              {r->zero(), r->zero(), parse_element("tau1", r), parse_element("t1", r)}});
      const RingMatrix hn = RingMatrix::from_rows(r, {{parse_element("tau1^2", r), parse_element("tau1*t1", r),
                                                       parse_element("t1^2", r)}});
      const Ideal sq = ideal_pow(ideal_from_text(r, "tau1, t1"), 2);
      std::string bad;
      if (!ideal_equal(fitting_ideal(hm, jobs), sq)) bad += "Fitt(M) ";
      if (!ideal_equal(fitting_ideal(hn, jobs), sq)) bad += "Fitt(N) ";
      const RingPtr lam = r->t_part();
      const Ideal fm = fitting_ideal(restrict_scalars(hm), jobs);
      const Ideal fn = fitting_ideal(restrict_scalars(hn), jobs);
      if (!ideal_equal(fm, ideal_from_text(lam, "t1^2"))) bad += "coefficient Fitt(M) ";
      if (!ideal_equal(fn, ideal_from_text(lam, "3*t1^2, t1^3"))) bad += "coefficient Fitt(N) ";
      if (ideal_equal(fm, fn)) bad += "coefficient ideals coincide ";
      return bad;
    }));
  }
  for (const std::vector<unsigned>& orders : {std::vector<unsigned>{3}, std::vector<unsigned>{3, 3}}) {
    const RingPtr r = make_ring(3, orders, 1, pick(o, 4, 6));
    out.push_back(run_check("second shift equals T^(1-s) Fitt(B_Delta), s=" + std::to_string(orders.size()), r,
                            [&] { return verify_second_shift_identity(r, jobs) ? std::string() : "unequal"; }));
  }
  {
    const RingPtr r = make_ring(3, {3}, 1, pick(o, 4, 6));
    out.push_back(run_check("transpose presentation has the same Fitting ideal", r, [&] {
      const RingMatrix h = RingMatrix::from_rows(
          r, {{parse_element("tau1", r), parse_element("N()", r)}, {r->zero(), parse_element("t1", r)}});
      const Ideal want = ideal_from_text(r, "tau1*t1");
      std::string bad;
      if (!ideal_equal(fitting_ideal(h), want)) bad += "Fitt(h) ";
      if (!ideal_equal(fitting_ideal(h.transpose()), want)) bad += "Fitt(h^T) ";
      return bad;
    }));
  }
  for (const std::vector<unsigned>& orders : {std::vector<unsigned>{3}, std::vector<unsigned>{3, 3}}) {
    const RingPtr r = make_ring(3, orders, 1, pick(o, 4, 6));
    out.push_back(run_check("four-term duality identity on B_Delta, s=" + std::to_string(orders.size()), r, [&] {
      return four_term_identity(b_delta(r).presentation, r->t(0)) ? std::string() : "unequal";
    }));
  }
  {
    const Precision pr = pick(o, 4, 6);
    DecompositionData formal;
    formal.p = 3, formal.k = pr.k, formal.N = pr.N, formal.inertia_orders = {3}, formal.m_v = 1, formal.q = 1;
    formal.delta_exponents = {0}, formal.gamma_exponent = 1;
    const RingPtr r = Ring::make(formal.local_spec());
    out.push_back(run_check("Euler factor, formal q=1 case is the -1 shift", r, [&] {
      return frac_equal(euler_factor_closed(formal), frac_text(r, "N(), t1", "t1")) ? std::string() : "unequal";
    }));
    DecompositionData d;
    d.p = 3, d.k = pr.k, d.N = pr.N, d.inertia_orders = {3}, d.m_v = 2, d.delta_exponents = {1, 1}, d.gamma_exponent = 1;
    const RingPtr r2 = Ring::make(d.local_spec());
    out.push_back(run_check("Euler factor, direct twist route equals closed form, q=2,4,10", r2, [&] {
      std::string bad;
      for (i64 q : {2, 4, 10}) {
        d.q = q;
        if (!frac_equal(euler_factor_direct(d), euler_factor_closed(d))) bad += "q=" + std::to_string(q) + " ";
      }
      return bad;
    }));
  }
  return out;
}

std::string format_suite_report(const std::vector<SuiteCheck>& checks) {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name << " [" << c.stamp << "]";
    if (!c.pass) os << ": " << c.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace fitshift
