#include "fitshift/error.hpp"
#include "fitshift/expr.hpp"
#include "fitshift/ideal.hpp"
#include "fitshift/linalg.hpp"
#include "fitshift/reference_suite.hpp"
#include "fitshift/ring_hom.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace fitshift;

namespace {

RingPtr ring(u64 p, unsigned k, std::vector<unsigned> orders, unsigned d, unsigned N) {
  return Ring::make(GroupRingSpec{p, k, std::move(orders), d, N});
}

std::set<std::vector<u64>> span_of(const CoeffMatrix& m) {
  return oracle::enumerate_span(m.rows, m.ncols, m.zmod.modulus());
}

}  // namespace

TEST(Howell, TwoOneOverZ4) {
  // [[2, 1]] over Z/4 spans {0, (2,1), (0,2), (2,3)}; the Howell form must
  // contain the annihilator multiple (0, 2).
  const CoeffMatrix h = howell_form(CoeffMatrix(Zmod(2, 2), 2, {{2, 1}}));
  EXPECT_EQ(h.rows, (std::vector<std::vector<u64>>{{2, 1}, {0, 2}}));
  EXPECT_TRUE(member(std::vector<u64>{0, 2}, h));
  EXPECT_FALSE(member(std::vector<u64>{0, 1}, h));
}

TEST(Howell, SpanMatchesBruteForce) {
  std::mt19937_64 rng(11);
  for (auto [p, k] : {std::pair<u64, unsigned>{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
    const Zmod z(p, k);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t ncols = 1 + rng() % 2, nrows = rng() % 4;
      CoeffMatrix a(z, ncols);
      for (std::size_t i = 0; i < nrows; ++i) {
        std::vector<u64> r(ncols);
        for (auto& x : r) x = rng() % z.modulus();
        a.rows.push_back(r);
      }
      const CoeffMatrix h = howell_form(a);
      EXPECT_EQ(span_of(h), span_of(a));
      EXPECT_EQ(howell_form(h), h);
      for (const auto& v : oracle::enumerate_span({{1, 0}, {0, 1}}, ncols, z.modulus()))
        EXPECT_EQ(member(v, a), span_of(a).count(v) == 1);
    }
  }
}

TEST(Howell, CanonicalFormIgnoresGeneratorOrder) {
  std::mt19937_64 rng(12);
  const Zmod z(3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    CoeffMatrix a(z, 5);
    for (int i = 0; i < 4; ++i) {
      std::vector<u64> r(5);
      for (auto& x : r) x = rng() % 27 * (rng() % 2);
      a.rows.push_back(r);
    }
    CoeffMatrix b = a;
    std::shuffle(b.rows.begin(), b.rows.end(), rng);
    // add a combination of existing rows
    std::vector<u64> extra(5);
    for (std::size_t j = 0; j < 5; ++j) extra[j] = (a.rows[0][j] * 7 + a.rows[1][j] * 3) % 27;
    b.rows.push_back(extra);
    EXPECT_EQ(howell_form(a), howell_form(b));
    EXPECT_TRUE(same_span(a, b));
  }
}

TEST(Ideal, MembershipMatchesEnumeration) {
  std::mt19937_64 rng(13);
  for (const RingPtr& R : {ring(3, 1, {}, 1, 3), ring(2, 2, {2}, 0, 1), ring(2, 1, {2}, 1, 2)}) {
    for (int trial = 0; trial < 10; ++trial) {
      const std::vector<RingElement> gens{oracle::random_element(R, rng), oracle::random_element(R, rng)};
      const Ideal I(R, gens);
      const auto all = oracle::enumerate_ideal(R, gens);
      EXPECT_EQ(all.size(), static_cast<std::size_t>(std::llround(std::pow(R->spec().p, I.length()))));
      for (int probe = 0; probe < 10; ++probe) {
        const RingElement x = oracle::random_element(R, rng, 0.7);
        EXPECT_EQ(I.contains(x), all.count(x.coeffs()) == 1);
      }
    }
  }
}

TEST(Ideal, MonoidLaws) {
  std::mt19937_64 rng(14);
  const RingPtr R = ring(3, 2, {3}, 1, 3);
  for (int trial = 0; trial < 10; ++trial) {
    const Ideal a(R, {oracle::random_element(R, rng)});
    const Ideal b(R, {oracle::random_element(R, rng), oracle::random_element(R, rng)});
    const Ideal c(R, {oracle::random_element(R, rng)});
    EXPECT_TRUE(ideal_equal(ideal_mul(a, b), ideal_mul(b, a)));
    EXPECT_TRUE(ideal_equal(ideal_mul(ideal_mul(a, b), c), ideal_mul(a, ideal_mul(b, c))));
    EXPECT_TRUE(ideal_equal(ideal_mul(a, Ideal::unit(R)), a));
    EXPECT_TRUE(ideal_equal(ideal_sum(a, Ideal::zero(R)), a));
    EXPECT_TRUE(ideal_equal(ideal_mul(a, ideal_sum(b, c)), ideal_sum(ideal_mul(a, b), ideal_mul(a, c))));
    EXPECT_TRUE(ideal_equal(ideal_pow(b, 2), ideal_mul(b, b)));
  }
}

TEST(Ideal, DisplayGeneratorsGenerateTheSameIdeal) {
  std::mt19937_64 rng(15);
  const RingPtr R = ring(3, 3, {3, 3}, 1, 3);
  for (int trial = 0; trial < 10; ++trial) {
    const Ideal I(R, {oracle::random_element(R, rng), oracle::random_element(R, rng)});
    EXPECT_TRUE(ideal_equal(Ideal(R, I.display_generators()), I));
  }
  const Ideal aug = ideal_from_text(R, "d1 - 1, d2 - 1");
  EXPECT_EQ(aug.display_generators().size(), 2u);
  // The augmentation ideal is the kernel of augmentation.
  EXPECT_TRUE(aug.contains(parse_element("d1*d2 - 1", R)));
  EXPECT_FALSE(aug.contains(R->one()));
  EXPECT_TRUE(Ideal::unit(R).is_unit());
}

TEST(Ideal, AugmentationIdealIndexIsPowerOfRank) {
  // R / (tau) = (Z/p^k)[T]/T^N, so the ideal has colength k*N.
  const RingPtr R = ring(3, 2, {3}, 1, 3);
  const Ideal aug = ideal_from_text(R, "tau1");
  EXPECT_EQ(2u * 9u - aug.length(), 2u * 3u);
}

TEST(Ideal, NzdCertificate) {
  const RingPtr R = ring(3, 4, {3}, 1, 6);
  EXPECT_EQ(nzd_certificate(R->t(0)), NzdVerdict::certified);
  EXPECT_EQ(nzd_certificate(parse_element("t1 + 3", R)), NzdVerdict::certified);
  EXPECT_EQ(nzd_certificate(R->norm_element()), NzdVerdict::inconclusive);
  EXPECT_EQ(nzd_certificate(R->tau(0)), NzdVerdict::inconclusive);
  EXPECT_TRUE((R->tau(0) * R->norm_element()).is_zero());
}

TEST(FractionalIdeal, EqualityByCrossMultiplication) {
  const RingPtr R = ring(3, 4, {3}, 1, 6);
  const FractionalIdeal a(ideal_from_text(R, "t1^2, 3*t1"), R->t(0));
  const FractionalIdeal b = FractionalIdeal::integral(ideal_from_text(R, "t1, 3"));
  const FracVerdict v = frac_equal(a, b);
  EXPECT_TRUE(v.equal);
  EXPECT_EQ(v.certified_t_precision, 5);
  EXPECT_FALSE(frac_equal(a, FractionalIdeal::integral(ideal_from_text(R, "t1"))));
  EXPECT_THROW(FractionalIdeal(Ideal::unit(R), R->norm_element()), Unsupported);
  EXPECT_NO_THROW(FractionalIdeal(Ideal::unit(R), R->norm_element(), true));
  EXPECT_THROW(FractionalIdeal(Ideal::unit(R), R->zero(), true), OutOfRange);
  const FractionalIdeal prod = frac_mul(a, a);
  EXPECT_TRUE(frac_equal(prod, FractionalIdeal::integral(ideal_from_text(R, "t1^2, 3*t1, 9"))));
}

TEST(Ideal, ImageUnderQuotient) {
  const RingPtr R = ring(3, 3, {3, 3}, 1, 4);
  const RingHom q = RingHom::quotient(R, {0}, {});
  const Ideal I = ideal_from_text(R, "tau1 + t1, tau2");
  EXPECT_TRUE(ideal_equal(ideal_image(q, I), ideal_from_text(q.target(), "t1, tau1")));
}
