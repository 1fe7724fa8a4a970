#include "fitshift/apps.hpp"
#include "fitshift/error.hpp"
#include "fitshift/expr.hpp"
#include "fitshift/fitting.hpp"
#include "fitshift/reference_suite.hpp"
#include "fitshift/ring_hom.hpp"
#include "fitshift/shifts.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace fitshift;

namespace {

RingPtr ring(u64 p, unsigned k, std::vector<unsigned> orders, unsigned d, unsigned N) {
  return Ring::make(GroupRingSpec{p, k, std::move(orders), d, N});
}

FractionalIdeal frac(const RingPtr& r, const std::string& num, const std::string& den) {
  return FractionalIdeal(ideal_from_text(r, num), parse_element(den, r));
}

}  // namespace

TEST(Shifts, ExponentFormula) {
  EXPECT_EQ(shift_exponent({1, 1, 1}, 0), 0);
  EXPECT_EQ(shift_exponent({1, 1, 1}, 1), -1);
  EXPECT_EQ(shift_exponent({1, 1, 1}, 2), 0);
  EXPECT_EQ(shift_exponent({1, 2, 3, 4}, 3), -1 + 2 - 3);
}

TEST(Shifts, NoGroupIsAPolynomialRing) {
  // Over Z_p[[T]], Z_p = R/(T) has Fitting ideal (T); the first shift of
  // 0 -> 0 -> R/(T) -> Z_p -> 0 is (1)/(T).
  const RingPtr R = ring(3, 3, {}, 1, 4);
  EXPECT_TRUE(frac_equal(shift_trivial(R, 0), frac(R, "t1", "1")));
  EXPECT_TRUE(frac_equal(shift_trivial(R, 1), frac(R, "1", "t1")));
  EXPECT_TRUE(frac_equal(shift_trivial(R, 2), frac(R, "t1", "1")));
}

TEST(Shifts, ParityPeriodicityAboveDMinusOne) {
  for (const RingPtr& R : {ring(3, 3, {3}, 1, 5), ring(5, 2, {5}, 1, 4), ring(3, 3, {3}, 2, 4)}) {
    const int lo = static_cast<int>(R->d()) - 1;
    for (int n = lo; n <= 4; ++n)
      EXPECT_TRUE(frac_equal(shift_trivial(R, n), shift_trivial(R, n + 2))) << R->spec().to_string() << " n=" << n;
  }
  // d = 2: degree 0 is outside the periodic range.
  const RingPtr R = ring(3, 3, {3}, 2, 4);
  EXPECT_FALSE(frac_equal(shift_trivial(R, 0), shift_trivial(R, 2)));
}

TEST(Shifts, UnsupportedNegativeRegime) {
  const RingPtr R = ring(3, 2, {3, 3}, 2, 3);
  EXPECT_THROW(shift_trivial(R, -1), Unsupported);
  EXPECT_THROW(shift_trivial(ring(3, 2, {3}, 0, 1), 0), Unsupported);
}

TEST(Shifts, SmallNIsOutOfRangeForLargeDenominators) {
  // s = 2, n = 3 needs T^2 in the denominator.
  EXPECT_THROW(shift_trivial(ring(3, 2, {3, 3}, 1, 2), 3), OutOfRange);
  EXPECT_NO_THROW(shift_trivial(ring(3, 2, {3, 3}, 1, 4), 3));
}

TEST(Shifts, SequenceEvaluatorAgreesWithDirectComputation) {
  const RingPtr R = ring(3, 3, {3, 3}, 1, 5);
  for (int n = 0; n <= 3; ++n) {
    ShiftRequest req;
    req.ring = R;
    req.n = n;
    const SequenceShift s = shift_from_sequence(trivial_sequence(req));
    EXPECT_TRUE(frac_equal(s.value, shift_trivial(req))) << "n=" << n;
    EXPECT_FALSE(s.provenance.empty());
  }
}

TEST(Shifts, SequenceRejectsWrongGenerator) {
  const RingPtr R = ring(3, 3, {3}, 1, 5);
  ShiftRequest req;
  req.ring = R;
  req.n = 2;
  SequenceData data = trivial_sequence(req);
  data.p_list[0].generator = R->t(0).pow(4);
  EXPECT_THROW(shift_from_sequence(data), OutOfRange);
}

TEST(Shifts, PaddingIsInvisible) {
  const RingPtr R = ring(3, 3, {3}, 1, 6);
  ShiftRequest req;
  req.ring = R;
  req.n = 2;
  const SequenceData base = trivial_sequence(req);
  const RingElement f = parse_element("t1 + 3", R);
  for (std::size_t pos : {0u, 1u}) {
    const SequenceData padded = pad_sequence(base, pos, f);
    EXPECT_TRUE(frac_equal(shift_from_sequence(padded).value, shift_trivial(req)));
  }
  EXPECT_THROW(pad_sequence(base, 2, f), OutOfRange);
}

TEST(Shifts, SecondShiftTwoFactorsTwoVariablesDiscrepancyWitness) {
  // At k = 4 the lifted d_3 for orders (3,3), d = 2 has the maximal minor
  // N_1 N_2^2 T_2^2 = 3 N_Delta T_2^2.  The shift divides by T_2^2, so 3 N_Delta
  // lies in it, but not in (tau,T)(tau,N_1,N_2,T)^2 + (N_Delta)^2: the
  // augmentation of 3 N_Delta is 27, while that ideal augments into (81, T).
  const RingPtr R = ring(3, 4, {3, 3}, 2, 4);
  ShiftRequest req;
  req.ring = R;
  req.n = 2;
  const TrivialResolution res = trivial_resolution(req, 3);
  const PresentedModule nn = lift_presentation(PresentedModule{res.complex.d(3), std::nullopt}, res.lift);
  const RingElement minor = oracle::cofactor_det(nn.presentation.select_columns({0, 3, 4, 8, 11}));
  const RingElement witness = parse_element("3*N()*t2^2", R);
  EXPECT_TRUE(minor == witness || minor == -witness) << format_element(minor);

  const Ideal a = ideal_from_text(R, "tau1, tau2, t1, t2");
  const Ideal b = ideal_from_text(R, "tau1, tau2, N(1), N(2), t1, t2");
  const Ideal displayed = ideal_sum(ideal_mul(a, ideal_pow(b, 2)), ideal_from_text(R, "N()^2"));
  EXPECT_FALSE(displayed.contains(parse_element("3*N()", R)));
  const FractionalIdeal computed = shift_trivial(req);
  EXPECT_EQ(computed.denominator(), R->t(1).pow(2));
  EXPECT_TRUE(computed.numerator().contains(witness));
  EXPECT_FALSE(frac_equal(computed, FractionalIdeal::integral(displayed)));
  EXPECT_TRUE(frac_equal(computed, FractionalIdeal::integral(ideal_sum(displayed, ideal_from_text(R, "3*N()")))));

  // At k = 3 the two agree.
  const RingPtr R3 = R->with_precision(3, 4);
  const Ideal a3 = ideal_from_text(R3, "tau1, tau2, t1, t2");
  const Ideal b3 = ideal_from_text(R3, "tau1, tau2, N(1), N(2), t1, t2");
  EXPECT_TRUE(frac_equal(shift_trivial(R3, 2),
                         FractionalIdeal::integral(ideal_sum(ideal_mul(a3, ideal_pow(b3, 2)),
                                                             ideal_from_text(R3, "N()^2")))));
}

TEST(Shifts, BDeltaFourTermIdentity) {
  for (const RingPtr& R : {ring(3, 3, {3}, 1, 5), ring(3, 3, {3, 3}, 1, 5)})
    EXPECT_TRUE(four_term_identity(b_delta(R).presentation, R->t(0)));
  EXPECT_THROW(verify_second_shift_identity(ring(2, 3, {2}, 1, 4)), OutOfRange);
}

TEST(Apps, DataValidation) {
  DecompositionData d;
  d.p = 3, d.k = 4, d.N = 6, d.inertia_orders = {3}, d.m_v = 2, d.q = 2;
  d.delta_exponents = {1, 1};
  d.gamma_exponent = 1;
  EXPECT_NO_THROW(d.validate());
  EXPECT_EQ(d.local_spec().orders, (std::vector<unsigned>{3, 2}));
  DecompositionData bad = d;
  bad.m_v = 3;  // divisible by p
  EXPECT_THROW(bad.validate(), OutOfRange);
  bad = d;
  bad.q = 3;  // not a unit
  EXPECT_THROW(bad.validate(), OutOfRange);
  bad = d;
  bad.gamma_exponent = 3;
  EXPECT_THROW(bad.validate(), OutOfRange);
  bad = d;
  bad.m_v = 1;
  bad.delta_exponents = {1};  // omega(2) = -1 needs m_v even
  EXPECT_THROW(bad.validate(), OutOfRange);
}

TEST(Apps, KappaSendsFrobeniusToQ) {
  DecompositionData d;
  d.p = 3, d.k = 4, d.N = 6, d.inertia_orders = {3}, d.m_v = 2, d.q = 10;
  d.delta_exponents = {2, 1};
  d.gamma_exponent = 2;
  const RingPtr local = Ring::make(d.local_spec());
  const RingHom tw = kappa_twist(local, d, 1);
  const RingElement sigma = frobenius_lift(local, d);
  // (kappa)^#(sigma) = q * sigma below the exact precision of the twist.
  const RingPtr low = local->with_precision(d.k, tw.exact_t_precision());
  EXPECT_EQ(tw.apply(sigma).reduced_to(low), sigma.scaled(10).reduced_to(low));
}

TEST(Apps, TrivialInertiaGivesInverseOfSigmaMinusQ) {
  // With I_v trivial the numerator is the unit ideal.  sigma - q is not a
  // unit: the character delta_m -> omega(q) sends it into (p, T).
  DecompositionData d;
  d.p = 5, d.k = 3, d.N = 4, d.m_v = 4, d.q = 2;
  d.delta_exponents = {1};
  d.gamma_exponent = 1;
  const FractionalIdeal e = euler_factor_closed(d);
  EXPECT_TRUE(e.numerator().is_unit());
  EXPECT_EQ(e.nzd_status(), NzdStatus::certified);
  EXPECT_FALSE(Ideal::principal(e.denominator()).is_unit());
  EXPECT_TRUE(frac_equal(e, euler_factor_direct(d)));
}

TEST(Apps, TateTwistProperties) {
  std::mt19937_64 rng(31);
  const RingPtr R = ring(3, 3, {3}, 1, 5);
  const std::vector<u64> dv{1}, gv{4};
  const unsigned prec = RingHom::twist(R, dv, gv).exact_t_precision();
  const RingPtr low = R->with_precision(3, prec);
  for (int trial = 0; trial < 8; ++trial) {
    const Ideal I(R, {oracle::random_element(R, rng)});
    const Ideal J(R, {oracle::random_element(R, rng)});
    EXPECT_TRUE(ideal_equal(tate_twist_ideal(0, dv, gv, I), I));
    EXPECT_TRUE(ideal_equal(ideal_reduced(tate_twist_ideal(-1, dv, gv, tate_twist_ideal(1, dv, gv, I)), low),
                            ideal_reduced(I, low)));
    EXPECT_TRUE(ideal_equal(ideal_reduced(tate_twist_ideal(1, dv, gv, ideal_mul(I, J)), low),
                            ideal_reduced(ideal_mul(tate_twist_ideal(1, dv, gv, I), tate_twist_ideal(1, dv, gv, J)),
                                          low)));
    // Twisting the presentation entrywise and recomputing minors.
    const RingMatrix h = oracle::random_matrix(R, 2, 3, rng);
    const RingHom tw = RingHom::twist(R, dv, gv);
    EXPECT_TRUE(ideal_equal(ideal_reduced(fitting_ideal(map_matrix(tw, h)), low),
                            ideal_reduced(tate_twist_ideal(1, dv, gv, fitting_ideal(h)), low)));
  }
  EXPECT_THROW(tate_twist_ideal(1, {1}, {3}, Ideal::unit(R)), OutOfRange);
}
