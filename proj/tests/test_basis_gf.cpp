#include <gtest/gtest.h>

#include <map>

#include "oracle.hpp"
#include "sipq/basis_gf.hpp"
#include "sipq/errors.hpp"
#include "sipq/series_io.hpp"

using namespace sipq;

namespace {

bool oracle_basis(PartitionClass basis, const oracle::Parts& p) {
  const bool strict_gaps = basis == PartitionClass::kBasisG1 || basis == PartitionClass::kBasisG2;
  const int lo = strict_gaps ? 1 : 0;
  if (!p.empty() && p.back() > 2) return false;
  for (std::size_t i = 1; i < p.size(); ++i) {
    const int gap = p[i - 1] - p[i];
    if (gap < lo || gap > lo + 1) return false;
  }
  switch (basis) {
    case PartitionClass::kBasisG1: return oracle::in_g1(p);
    case PartitionClass::kBasisG2: return oracle::in_g2(p);
    case PartitionClass::kBasisP1: return oracle::in_p1(p);
    default: return oracle::in_p2(p);
  }
}

// exps -> coefficient for basis partitions of the given shape.
std::map<std::array<int, 4>, long> oracle_entry(PartitionClass basis, int n, int h) {
  std::map<std::array<int, 4>, long> out;
  for (int w = n; w <= n * h; ++w)
    for (const auto& p : oracle::partitions(w))
      if (static_cast<int>(p.size()) == n && (n == 0 || p[0] == h) && oracle_basis(basis, p))
        ++out[oracle::omega_fill(p)];
  if (n == 0 && h == 0) out[{0, 0, 0, 0}] = 1;
  if (n == 0 && h != 0) out.clear();
  return out;
}

std::map<std::array<int, 4>, long> as_map(const Series& s) {
  std::map<std::array<int, 4>, long> out;
  for (const auto& t : s.terms()) out[{t.exps[0], t.exps[1], t.exps[2], t.exps[3]}] = t.coeff.get_si();
  return out;
}

}  // namespace

TEST(BasisTables, InitialValues) {
  for (auto m : kMethods) {
    EXPECT_EQ(to_text(table_entry(PartitionClass::kBasisG1, m, 0, 0)), "1");
    EXPECT_EQ(to_text(table_entry(PartitionClass::kBasisG1, m, 0, 3)), "0");
    EXPECT_EQ(to_text(table_entry(PartitionClass::kBasisG1, m, 1, 1)), "a");
    EXPECT_EQ(to_text(table_entry(PartitionClass::kBasisG1, m, 1, 2)), "a*b");
    EXPECT_EQ(to_text(table_entry(PartitionClass::kBasisG1, m, 1, 3)), "0");
    EXPECT_EQ(to_text(table_entry(PartitionClass::kBasisG2, m, 1, 1)), "0");
    EXPECT_EQ(to_text(table_entry(PartitionClass::kBasisG2, m, 1, 2)), "a*b");
    EXPECT_EQ(to_text(table_entry(PartitionClass::kBasisP1, m, 1, 1)), "a");
    EXPECT_EQ(to_text(table_entry(PartitionClass::kBasisP1, m, 1, 2)), "a*b");
  }
}

TEST(BasisTables, AllMethodsMatchOracle) {
  for (auto basis : kBases) {
    for (int n = 0; n <= 6; ++n) {
      for (int h = 0; h <= 7; ++h) {
        const auto expected = oracle_entry(basis, n, h);
        for (auto m : kMethods) {
          const Series s = table_entry(basis, m, n, h);
          EXPECT_TRUE(s.complete());
          EXPECT_EQ(as_map(s), expected) << to_string(basis) << " " << to_string(m) << " n=" << n << " h=" << h;
        }
      }
    }
  }
}

TEST(BasisTables, CrossCheck) {
  for (auto basis : kBases) {
    const auto r = cross_check_tables(basis, 10, 10);
    EXPECT_TRUE(r.passed()) << r.to_json().dump();
  }
}

TEST(BasisTables, MethodNames) {
  for (auto m : kMethods) EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_THROW(parse_method("guess"), ParseError);
  EXPECT_EQ(table_entry_trunc(3, 4), 12);
}
