#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "sipq/errors.hpp"
#include "sipq/qseries.hpp"
#include "sipq/series_io.hpp"

using namespace sipq;

namespace {

using P = Pochhammer<AbcdVars>;

Series mono(const ExponentVector& e, long c = 1) { return Series::monomial(c, e, std::max(0, Series::degree(e))); }

const Series kQ = mono(kExpQ);

}  // namespace

TEST(QBinomial, MatchesBoxCounts) {
  for (int n = 0; n <= 9; ++n) {
    for (int m = 0; m <= n; ++m) {
      const auto expected = oracle::gaussian_by_box(n, m);
      const Series& poly = qbinomial_poly(n, m);
      EXPECT_TRUE(poly.complete());
      for (std::size_t k = 0; k < expected.size(); ++k)
        EXPECT_EQ(poly.coeff(static_cast<int>(k) * kExpQ), expected[k]) << n << " " << m << " " << k;
      BigInt total = 0;
      for (const auto& t : poly.terms()) total += t.coeff;
      std::int64_t box = 0;
      for (auto c : expected) box += c;
      EXPECT_EQ(total, box);
    }
  }
}

TEST(QBinomial, OutOfRangeIsZero) {
  EXPECT_TRUE(qbinomial_poly(3, 4).is_zero());
  EXPECT_TRUE(qbinomial_poly(3, -1).is_zero());
  EXPECT_EQ(qbinomial_poly(0, 0), Series::one(0));
}

TEST(QBinomial, Truncated) {
  const auto b = qbinomial(6, 3, 8);
  EXPECT_EQ(b.value.trunc(), 8);
  EXPECT_EQ(b.value.coeff(2 * kExpQ), 2);  // partitions of 2 in a 3 x 3 box
}

TEST(QBinomial, RecurrenceChecks) {
  const auto r = check_qbinomial_recurrences(8);
  EXPECT_TRUE(r.passed()) << r.to_json().dump();
  EXPECT_GT(r.checks(), 0);
}

TEST(Pochhammer, FiniteStepProperty) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> e(0, 2);
  const int t = 14;
  for (int round = 0; round < 30; ++round) {
    ExponentVector arg{e(rng), e(rng), e(rng), e(rng)};
    if (Series::degree(arg) == 0) arg = kExpA;
    for (int n = 0; n <= 4; ++n) {
      const Series lhs = pochhammer_finite(mono(arg), kQ, n + 1, t);
      const Series step = Series::one(t) - Series::monomial(1, arg + n * kExpQ, t);
      const Series rhs = mul(pochhammer_finite(mono(arg), kQ, n, t), step.retruncate(t));
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(Pochhammer, InfiniteStabilizes) {
  const int t = 16;
  const Series inf = pochhammer_infinite(mono(kExpA), kQ, t);
  EXPECT_EQ(inf, pochhammer_finite(mono(kExpA), kQ, t + 1, t));
  EXPECT_EQ(inf, pochhammer_finite(mono(kExpA), kQ, t + 5, t));
}

TEST(Pochhammer, EulerPentagonalSpecialization) {
  // (Q;Q)_inf with a = b = c = d = q has coefficients of (q^4;q^4)_inf.
  const int t = 40;
  const Series e = pochhammer_infinite(kQ, kQ, t);
  oracle::Dense d(t);
  for (int k = 4; k <= t; k += 4) oracle::times_binomial(d, k, -1);
  for (int k = 0; 4 * k <= t; ++k) EXPECT_EQ(e.coeff(k * kExpQ), d.c[static_cast<std::size_t>(4 * k)]);
}

TEST(RationalTerm, Errors) {
  EXPECT_THROW(rational_term<AbcdVars>(1, {}, {}, {P::finite(mono(-1 * kExpC), kQ, 1)}, 4), NotAUnit);
  EXPECT_THROW(rational_term<AbcdVars>(1, {}, {P::infinite(Series::one(0), kQ)}, {}, 4), NonConvergent);
  EXPECT_THROW(rational_term<AbcdVars>(1, {}, {P::finite(mono(kExpA), Series::one(0), 2)}, {}, 4), NonConvergent);
}

TEST(RationalTerm, NegativeNumeratorDegrees) {
  // (-c^-1;Q)_1 = 1 + c^-1, times c: c + 1.
  const Series s = rational_term<AbcdVars>(1, kExpC, {P::finite(mono(-1 * kExpC, -1), kQ, 1)}, {}, 5);
  EXPECT_EQ(to_text(s), "1 + c");
}

TEST(QBinomialTheorem, Instances) {
  for (const Monomial& z : {Monomial{1, kExpB}, Monomial{1, kExpB + kExpQ}, Monomial{1, kExpQ - kExpC},
                            Monomial{1, kExpA + kExpQ}}) {
    for (int n = 0; n <= 5; ++n) {
      const auto r = check_qbinomial_theorem(n, z, 18);
      EXPECT_TRUE(r.passed()) << r.to_json().dump();
    }
  }
}

TEST(QGauss, ProofSpecializations) {
  const auto g1 = check_q_gauss(std::nullopt, {-1, kExpB}, {1, kExpA + kExpB}, 16);
  EXPECT_TRUE(g1.passed()) << g1.to_json().dump();
  const auto g2 = check_q_gauss(std::nullopt, {-1, -1 * kExpC}, {1, kExpA + kExpB}, 16);
  EXPECT_TRUE(g2.passed()) << g2.to_json().dump();
  const auto generic = check_q_gauss(Monomial{1, kExpA}, {1, kExpB}, {1, kExpA + kExpB + kExpQ}, 16);
  EXPECT_TRUE(generic.passed()) << generic.to_json().dump();
}

TEST(QGauss, DomainChecks) {
  EXPECT_THROW(check_q_gauss(Monomial{1, kExpA}, {1, kExpB}, {1, kExpA + kExpB}, 8), DomainError);
  EXPECT_THROW(check_q_gauss(std::nullopt, {1, kExpB}, {1, kExpB}, 8), DomainError);
}
