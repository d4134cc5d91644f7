#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sipq/errors.hpp"
#include "sipq/series_io.hpp"
#include "sipq/sip.hpp"
#include "sipq/weights.hpp"

using namespace sipq;

TEST(Decompose, FigureExample) {
  const auto d = decompose(PartitionClass::kG1, Partition({11, 8, 7, 4}));
  EXPECT_EQ(d.beta, Partition({5, 4, 3, 2}));
  EXPECT_EQ(d.mu, Partition({6, 4, 4, 2}));
  EXPECT_EQ(d.modulus, 2);
}

TEST(Decompose, SmallCases) {
  const auto e = decompose(PartitionClass::kP1, Partition());
  EXPECT_TRUE(e.beta.empty());
  EXPECT_TRUE(e.mu.empty());
  const auto p = decompose(PartitionClass::kP2, Partition({4, 2, 2}));
  EXPECT_EQ(p.beta, Partition({2, 2, 2}));
  EXPECT_EQ(p.mu, Partition({2}));
  EXPECT_TRUE(is_member(PartitionClass::kBasisP2, p.beta));
  EXPECT_EQ(compose(PartitionClass::kP2, p.beta, p.mu), Partition({4, 2, 2}));
}

TEST(Decompose, Errors) {
  EXPECT_THROW(decompose(PartitionClass::kG1, Partition({3, 3})), NotInClass);
  EXPECT_THROW(decompose(PartitionClass::kG1, Partition({3, 1})), NotInClass);
  EXPECT_THROW(decompose(PartitionClass::kStrict, Partition({3, 1})), DomainError);
}

TEST(Compose, Errors) {
  EXPECT_THROW(compose(PartitionClass::kG1, Partition({3}), Partition()), NotInClass);
  EXPECT_THROW(compose(PartitionClass::kG1, Partition({1}), Partition({2, 2})), LengthViolation);
  EXPECT_THROW(compose(PartitionClass::kG1, Partition({3, 2}), Partition({3})), NonEvenMu);
  EXPECT_EQ(compose(PartitionClass::kG1, Partition({3, 2}), Partition({4})), Partition({7, 2}));
}

TEST(SipProperty, AllClasses) {
  for (auto c : kSipClasses) {
    const auto r = verify_sip_property(c, basis_of(c), 2, 12);
    EXPECT_TRUE(r.passed()) << r.to_json().dump();
    EXPECT_GT(r.checks(), 0);
  }
}

TEST(SipProperty, WrongBasisFails) {
  const auto r = verify_sip_property(PartitionClass::kG1, PartitionClass::kBasisG2, 2, 8);
  EXPECT_FALSE(r.passed());
}

TEST(SipGf, SingleVariable) {
  for (auto c : kSipClasses) {
    const auto r = sip_gf_single_variable(c, basis_of(c), 2, 14);
    EXPECT_TRUE(r.passed()) << r.to_json().dump();
  }
}

TEST(SipGf, FourParameterAgainstOracle) {
  const int t = 12;
  const Series gf = sip_gf_four_parameter(PartitionClass::kG2, t);
  std::map<std::array<int, 4>, long> expected;
  for (int w = 0; w <= t; ++w)
    for (const auto& p : oracle::partitions(w))
      if (oracle::in_g2(p)) ++expected[oracle::omega_fill(p)];
  std::size_t seen = 0;
  for (const auto& term : gf.terms()) {
    const std::array<int, 4> e{term.exps[0], term.exps[1], term.exps[2], term.exps[3]};
    ASSERT_TRUE(expected.count(e));
    EXPECT_EQ(term.coeff, expected[e]);
    ++seen;
  }
  EXPECT_EQ(seen, expected.size());
  for (auto c : kSipClasses) EXPECT_TRUE(check_sip_gf_four_parameter(c, 10).passed());
}

TEST(SipGf, BasisLengthPolynomials) {
  const auto b = basis_length_polynomials(PartitionClass::kBasisG1, 6);
  // length 1: (1), (2)
  EXPECT_EQ(to_text(b[1].retruncate(6)), "a + a*b");
  EXPECT_THROW(basis_length_polynomials(PartitionClass::kG1, 4), DomainError);
}
