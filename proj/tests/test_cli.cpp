#include "fitshift/error.hpp"
#include "fitshift/expr.hpp"
#include "fitshift/reference_suite.hpp"
#include "fitshift/session.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"

using namespace fitshift;

#ifndef FITSHIFT_TEST_DATA
#define FITSHIFT_TEST_DATA "tests/data"
#endif

namespace {

RingPtr ring(u64 p, unsigned k, std::vector<unsigned> orders, unsigned d, unsigned N) {
  return Ring::make(GroupRingSpec{p, k, std::move(orders), d, N});
}

}  // namespace

TEST(Parser, BasicExpressions) {
  const RingPtr R = ring(3, 4, {3, 3}, 1, 4);
  EXPECT_EQ(parse_element("d1 - 1", R), R->tau(0));
  EXPECT_EQ(parse_element("tau_2", R), R->tau(1));
  EXPECT_EQ(parse_element("N()*(t1^2 + 3)", R), R->norm_element() * (R->t(0).pow(2) + R->constant(3)));
  EXPECT_TRUE(parse_element("d1^m1", R).is_one());
  EXPECT_EQ(parse_element("-2*t1^2*d2", R), R->t(0).pow(2) * R->delta(1) * R->constant(-2));
  EXPECT_EQ(parse_element("2^3", R), R->constant(8));
  EXPECT_EQ(parse_element("N(1,2)", R), R->norm_element());
  EXPECT_EQ(parse_element("t1 - t1 - t1", R), -R->t(0));
}

TEST(Parser, ErrorsCarryPositions) {
  const RingPtr R = ring(3, 4, {3}, 1, 4);
  try {
    parse_element("t1 + x9", R);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 6u);
  }
  EXPECT_THROW(parse_element("t2", R), ParseError);
  EXPECT_THROW(parse_element("d1^t1", R), ParseError);
  EXPECT_THROW(parse_element("(t1", R), ParseError);
  EXPECT_THROW(parse_element("t1 t1", R), ParseError);
  EXPECT_THROW(parse_element("", R), ParseError);
}

TEST(Parser, FormatRoundTrip) {
  std::mt19937_64 rng(41);
  for (const RingPtr& R : {ring(3, 4, {3, 3}, 1, 3), ring(2, 5, {2}, 2, 3), ring(5, 2, {}, 1, 4)})
    for (int trial = 0; trial < 30; ++trial) {
      const RingElement x = oracle::random_element(R, rng);
      EXPECT_EQ(parse_element(format_element(x), R), x) << format_element(x);
    }
  EXPECT_EQ(format_element(ring(3, 2, {3}, 1, 3)->zero()), "0");
}

TEST(Session, SpecAndBindings) {
  Session s;
  EXPECT_EQ(s.run_command("spec p=3 k=4 orders=3,3 d=1 N=6").status, Status::ok);
  EXPECT_EQ(s.ring()->basis_size(), 54u);
  EXPECT_EQ(s.run_command("let x = t1 + tau1").status, Status::ok);
  EXPECT_EQ(s.run_command("let I = (x, t1^2)").status, Status::ok);
  EXPECT_EQ(s.run_command("ideal-eq I (t1 + tau1, t1^2)").status, Status::ok);
  EXPECT_EQ(s.run_command("ideal-eq (t1) (t1 + t1^2)").text, "equal [k=4 N=6]");
  EXPECT_EQ(s.run_command("ideal-eq (t1) (t1^2)").status, Status::mismatch);
  EXPECT_EQ(s.run_command("let t1 = 3").status, Status::usage);
  EXPECT_EQ(s.run_command("let N = 3").status, Status::usage);
  EXPECT_EQ(s.run_command("print y").status, Status::usage);
  EXPECT_EQ(s.run_command("frobnicate").status, Status::usage);
  EXPECT_EQ(s.run_command("   # comment only").status, Status::ok);
  EXPECT_EQ(s.provenance().size(), 10u);
}

TEST(Session, PrintedValuesReparse) {
  Session s;
  s.run_command("spec p=3 k=3 orders=3 d=1 N=4");
  s.run_command("let a = 1 + 2*tau1*t1");
  s.run_command("let I = (3*tau1, t1^2 + tau1)");
  s.run_command("let F = (N(), t1)/t1");
  s.run_command("let M = [[tau1, t1], [0, 3]]");
  for (const auto& [name, v] : s.bindings()) {
    const Value back = s.parse_value(format_value(v));
    if (auto* x = std::get_if<RingElement>(&v)) EXPECT_EQ(std::get<RingElement>(back), *x);
    if (auto* x = std::get_if<RingMatrix>(&v)) EXPECT_EQ(std::get<RingMatrix>(back), *x);
    if (auto* x = std::get_if<Ideal>(&v)) {
      const Ideal I = std::holds_alternative<Ideal>(back) ? std::get<Ideal>(back)
                                                         : Ideal::principal(std::get<RingElement>(back));
      EXPECT_TRUE(ideal_equal(I, *x)) << name;
    }
    if (auto* x = std::get_if<FractionalIdeal>(&v)) EXPECT_TRUE(frac_equal(std::get<FractionalIdeal>(back), *x));
  }
}

TEST(Session, ShiftAndFittingCommands) {
  Session s;
  s.run_command("spec p=3 k=4 orders=3 d=1 N=6");
  const CommandOutput sh = s.run_command("shift-trivial 1");
  EXPECT_EQ(sh.status, Status::ok);
  EXPECT_EQ(sh.json["denominator"], "t1");
  EXPECT_EQ(s.run_command("frac-eq shift(1) (N(), t1)/t1").status, Status::ok);
  EXPECT_EQ(s.run_command("frac-eq shift(-3) (N(), t1)/t1").status, Status::ok);
  const CommandOutput f = s.run_command("fitting [[tau1, t1]]");
  EXPECT_EQ(f.status, Status::ok);
  EXPECT_EQ(f.text, "Fitt = (tau1, t1) [k=4 N=6]");
  EXPECT_EQ(s.run_command("ideal-eq fitting([[tau1, 0], [0, t1]]) (tau1*t1)").status, Status::ok);
  EXPECT_EQ(s.run_command("frac-eq (N(), 1)/N() (1)").status, Status::usage);
  const CommandOutput c = s.run_command("canon (tau1, t1)");
  EXPECT_EQ(c.json["howell_rows"][0], "tau1");
}

TEST(Session, AssumeNzdFlag) {
  Session plain;
  plain.run_command("spec p=3 k=4 orders=3 d=1 N=6");
  EXPECT_EQ(plain.run_command("print (1)/N()").status, Status::usage);
  SessionOptions o;
  o.assume_nzd = true;
  Session assumed(o);
  assumed.run_command("spec p=3 k=4 orders=3 d=1 N=6");
  EXPECT_EQ(assumed.run_command("print (1)/N()").status, Status::ok);
}

TEST(Session, JsonDocumentHasFixedKeys) {
  SessionOptions o;
  o.json = true;
  Session s(o);
  for (const char* line : {"spec p=3 k=4 orders=3 d=1 N=6", "shift-trivial 0", "ideal-eq (t1) (t1^2)", "bogus"}) {
    const CommandOutput out = s.run_command(line);
    for (const char* key : {"spec", "command", "verdict", "certified_precision", "canonical_generators"})
      EXPECT_TRUE(out.json.contains(key)) << line << " " << key;
  }
}

TEST(Session, StreamStopsAtUsageError) {
  Session s;
  std::istringstream in("spec p=3 k=2 orders=3 d=1 N=3\nideal-eq (t1) (t1^2)\nlet = 3\nshift-trivial 0\n");
  std::ostringstream out, err;
  EXPECT_EQ(s.run_stream(in, out, err), Status::usage);
  EXPECT_NE(err.str().find("line 3"), std::string::npos);
  EXPECT_EQ(out.str().find("shift("), std::string::npos);
}

TEST(Session, PrecisionOverride) {
  SessionOptions o;
  o.precision = std::make_pair(2u, 3u);
  Session s(o);
  s.run_command("spec p=3 k=4 orders=3 d=1 N=6");
  EXPECT_EQ(s.ring()->spec().k, 2u);
  EXPECT_EQ(s.ring()->spec().N, 3u);
}

TEST(Session, SessionFileAndEulerData) {
  Session s({}, FITSHIFT_TEST_DATA);
  std::ifstream in(std::string(FITSHIFT_TEST_DATA) + "/session_two_factors.fit");
  ASSERT_TRUE(in);
  std::ostringstream out, err;
  EXPECT_EQ(s.run_stream(in, out, err), Status::ok) << err.str();
  const CommandOutput e = s.run_command("euler euler_inertia3_mv2_q10.json");
  EXPECT_EQ(e.status, Status::ok) << e.text;
  EXPECT_EQ(e.json["local_spec"], "p=3 k=4 orders=3,2 d=1 N=6");
}

TEST(ReferenceSuite, DeterministicReport) {
  const auto a = format_suite_report(run_reference_suite());
  EXPECT_EQ(a, format_suite_report(run_reference_suite()));
  EXPECT_EQ(a.find("FAIL"), std::string::npos) << a;
}
