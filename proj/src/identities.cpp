#include "sipq/identities.hpp"

#include <algorithm>

#include "sipq/qseries.hpp"
#include "sipq/series_io.hpp"
#include "sipq/weights.hpp"

namespace sipq {

namespace {

template <class V>
struct Summand {
  BigInt coeff = 1;
  Exponents<V> exps{};
  std::vector<Pochhammer<V>> num;
  std::vector<Pochhammer<V>> den;
};

template <class V>
using Family = std::function<Summand<V>(int n)>;

template <class V>
int summand_min_deg(const Summand<V>& s) {
  int d = LaurentSeries<V>::degree(s.exps);
  for (const auto& f : s.num) d += detail::pochhammer_min_deg(f);
  return d;
}

template <class V>
LaurentSeries<V> expand(const Summand<V>& s, int trunc) {
  return rational_term<V>(s.coeff, s.exps, s.num, s.den, trunc);
}

// Sums each family from n = 0 until a summand provably starts above trunc.
template <class V>
LaurentSeries<V> sum_families(const std::vector<Family<V>>& families, int trunc,
                              std::vector<LaurentSeries<V>>* parts = nullptr) {
  LaurentSeries<V> total(trunc);
  for (const auto& family : families) {
    for (int n = 0;; ++n) {
      if (n > 4 * trunc + 16) throw NonConvergent("series side does not settle");
      const auto s = family(n);
      if (summand_min_deg(s) > trunc) break;
      auto term = expand(s, trunc);
      total = total + term;
      if (parts) parts->push_back(std::move(term));
    }
  }
  return total.retruncate(trunc);
}

// ---- monomial shorthands ----------------------------------------------------

Series m4(const BigInt& c, const ExponentVector& e) { return Series::monomial(c, e, std::max(0, Series::degree(e))); }

XzqSeries m3(const BigInt& c, const XzqExponents& e) {
  return XzqSeries::monomial(c, e, std::max(0, XzqSeries::degree(e)));
}

using P4 = Pochhammer<AbcdVars>;
using P3 = Pochhammer<XzqVars>;

constexpr ExponentVector kAB = kExpA + kExpB;

P4 p4(const BigInt& c, const ExponentVector& arg, int n) { return P4::finite(m4(c, arg), m4(1, kExpQ), n); }
P4 p4inf(const BigInt& c, const ExponentVector& arg) { return P4::infinite(m4(c, arg), m4(1, kExpQ)); }
P3 p3(const BigInt& c, const XzqExponents& arg, int qstep, int n) {
  return P3::finite(m3(c, arg), m3(1, {0, 0, qstep}), n);
}
P3 p3inf(const BigInt& c, const XzqExponents& arg, int qstep) {
  return P3::infinite(m3(c, arg), m3(1, {0, 0, qstep}));
}

constexpr int c2(int k) { return k * (k - 1) / 2; }

// ---- generic spec assembly ------------------------------------------------

Side side4(std::string name, SideKind kind, std::function<Series(int)> f) {
  return {std::move(name), kind, [f = std::move(f)](int t) { return AnySeries(f(t)); }};
}

Side side3(std::string name, SideKind kind, std::function<XzqSeries(int)> f) {
  return {std::move(name), kind, [f = std::move(f)](int t) { return AnySeries(f(t)); }};
}

Side series4(std::vector<Family<AbcdVars>> families) {
  return side4("series", SideKind::kSeries, [families](int t) { return sum_families(families, t); });
}

Side series3(std::vector<Family<XzqVars>> families) {
  return side3("series", SideKind::kSeries, [families](int t) { return sum_families(families, t); });
}

std::function<std::vector<Series>(int)> summands_of(std::vector<Family<AbcdVars>> families) {
  return [families](int t) {
    std::vector<Series> parts;
    sum_families(families, t, &parts);
    return parts;
  };
}

Side product4(std::vector<P4> num, std::vector<P4> den, std::string name = "product") {
  return side4(std::move(name), SideKind::kProduct,
               [num, den](int t) { return rational_term<AbcdVars>(1, {}, num, den, t); });
}

Side product3(std::vector<P3> num, std::vector<P3> den, std::string name = "product",
              SideKind kind = SideKind::kProduct) {
  return side3(std::move(name), kind, [num, den](int t) { return rational_term<XzqVars>(1, {}, num, den, t); });
}

Side combinatorial(PartitionClass c, Statistic stat) {
  return {"combinatorial", SideKind::kCombinatorial, [c, stat](int t) { return combinatorial_side(c, stat, t); }};
}

// Four-parameter product pushed through a substitution map.
Side substituted(Side four_param_product, MapId map) {
  const SubstitutionMap m =
      map == MapId::kXzq ? SubstitutionMap::odd_parts_alternating_sum() : SubstitutionMap::bg_rank();
  auto build = four_param_product.build;
  return side3("substituted", SideKind::kSubstituted,
               [build, m](int t) { return substitute(std::get<Series>(build(t)), m, t); });
}

// ---- the four-parameter identities -----------------------------------------

std::vector<Family<AbcdVars>> g1_families() {
  return {[](int n) {
    return Summand<AbcdVars>{1, n * kExpA + c2(n) * kExpQ, {p4(-1, kExpB, n)}, {p4(1, kAB, n), p4(1, kExpQ, n)}};
  }};
}

std::vector<Family<AbcdVars>> g2_families() {
  return {[](int n) {
    return Summand<AbcdVars>{
        1, -n * kExpD + c2(n + 1) * kExpQ, {p4(-1, -1 * kExpC, n)}, {p4(1, kAB, n), p4(1, kExpQ, n)}};
  }};
}

std::vector<Family<AbcdVars>> p1_families() {
  return {[](int n) {
            return Summand<AbcdVars>{
                1, n * kExpQ, {p4(-1, kExpA - kExpQ, n)}, {p4(1, kAB, n), p4(1, kExpQ, n)}};
          },
          [](int n) {
            return Summand<AbcdVars>{1, kAB + n * kExpQ, {p4(-1, kExpA, n)}, {p4(1, kAB, n + 1), p4(1, kExpQ, n)}};
          }};
}

std::vector<Family<AbcdVars>> p2_families() {
  return {[](int n) {
            return Summand<AbcdVars>{1, n * kExpQ, {p4(-1, -1 * kExpD, n)}, {p4(1, kAB, n), p4(1, kExpQ, n)}};
          },
          [](int n) {
            return Summand<AbcdVars>{
                1, kAB + n * kExpQ, {p4(-1, kExpQ - kExpD, n)}, {p4(1, kAB, n + 1), p4(1, kExpQ, n)}};
          }};
}

Side g1_product() { return product4({p4inf(-1, kExpA)}, {p4inf(1, kAB)}); }
Side g2_product() { return product4({p4inf(-1, kAB + kExpC)}, {p4inf(1, kAB)}); }
Side p1_product() { return product4({p4inf(-1, kExpA)}, {p4inf(1, kAB), p4inf(1, kExpQ)}); }
Side p2_product() { return product4({p4inf(-1, kExpQ - kExpD)}, {p4inf(1, kAB), p4inf(1, kExpQ)}); }
Side boulet_product() {
  return product4({p4inf(-1, kExpA), p4inf(-1, kAB + kExpC)},
                  {p4inf(1, kAB), p4inf(1, kExpA + kExpC), p4inf(1, kExpQ)});
}

TheoremSpec four_param(std::string id, std::string description, PartitionClass c,
                       std::vector<Family<AbcdVars>> families, Side product) {
  TheoremSpec s;
  s.id = std::move(id);
  s.description = std::move(description);
  s.variables = VariableSet::kFourParam;
  s.partition_class = c;
  s.statistic = Statistic::kOmega;
  s.sides = {combinatorial(c, Statistic::kOmega), series4(families), std::move(product)};
  s.summands = summands_of(families);
  return s;
}

TheoremSpec three_var(std::string id, std::string description, PartitionClass c, Statistic stat,
                      std::vector<Side> sides) {
  TheoremSpec s;
  s.id = std::move(id);
  s.description = std::move(description);
  s.variables = VariableSet::kXzq;
  s.partition_class = c;
  s.statistic = stat;
  s.sides = {combinatorial(c, stat)};
  for (auto& side : sides) s.sides.push_back(std::move(side));
  return s;
}

// x^e0 z^e1 q^e2
constexpr XzqExponents xzq(int x, int z, int q) { return {x, z, q}; }

std::vector<TheoremSpec> build_registry() {
  std::vector<TheoremSpec> r;
  r.push_back(four_param("g1-four", "strict partitions, even-indexed parts even; four-parameter weight",
                         PartitionClass::kG1, g1_families(), g1_product()));
  r.push_back(four_param("g2-four", "strict partitions, odd-indexed parts even; four-parameter weight",
                         PartitionClass::kG2, g2_families(), g2_product()));
  r.push_back(four_param("p1-four", "partitions with even-indexed parts even; four-parameter weight",
                         PartitionClass::kP1, p1_families(), p1_product()));
  r.push_back(four_param("p2-four", "partitions with odd-indexed parts even; four-parameter weight",
                         PartitionClass::kP2, p2_families(), p2_product()));

  {
    TheoremSpec s;
    s.id = "boulet-p";
    s.description = "all partitions; four-parameter weight as a product";
    s.variables = VariableSet::kFourParam;
    s.partition_class = PartitionClass::kAll;
    s.statistic = Statistic::kOmega;
    s.sides = {combinatorial(PartitionClass::kAll, Statistic::kOmega), boulet_product()};
    r.push_back(std::move(s));
  }

  r.push_back(three_var(
      "andrews-xzq", "all partitions; odd parts, alternating sum and weight", PartitionClass::kAll, Statistic::kXzq,
      {product3({p3inf(-1, xzq(1, 1, 1), 2)}, {p3inf(1, xzq(2, 0, 2), 4), p3inf(1, xzq(0, 2, 2), 4), p3inf(1, xzq(0, 0, 4), 4)}),
       substituted(boulet_product(), MapId::kXzq)}));

  // Odd parts and weight.
  r.push_back(three_var(
      "savage-sills-g1", "G1 by odd parts and weight", PartitionClass::kG1, Statistic::kOddParts,
      {series3({[](int n) {
         return Summand<XzqVars>{1, xzq(n, 0, c2(2 * n)), {p3(-1, xzq(-1, 0, 1), 4, n)}, {p3(1, xzq(0, 0, 2), 2, 2 * n)}};
       }}),
       product3({p3inf(-1, xzq(1, 0, 1), 4)}, {p3inf(1, xzq(0, 0, 2), 4)})}));
  r.push_back(three_var(
      "savage-sills-g2", "G2 by odd parts and weight", PartitionClass::kG2, Statistic::kOddParts,
      {series3({[](int n) {
         return Summand<XzqVars>{
             1, xzq(n, 0, c2(2 * n + 1)), {p3(-1, xzq(-1, 0, -1), 4, n)}, {p3(1, xzq(0, 0, 2), 2, 2 * n)}};
       }}),
       product3({p3inf(-1, xzq(1, 0, 3), 4)}, {p3inf(1, xzq(0, 0, 2), 4)})}));

  // Alternating sum and weight.
  r.push_back(three_var(
      "altsum-g1", "G1 by alternating sum and weight", PartitionClass::kG1, Statistic::kAltSum,
      {series3({[](int n) {
         return Summand<XzqVars>{1, xzq(0, n, c2(2 * n)), {p3(-1, xzq(0, 1, 1), 4, n)},
                                 {p3(1, xzq(0, 0, 4), 4, n), p3(1, xzq(0, 2, 2), 4, n)}};
       }}),
       product3({p3inf(-1, xzq(0, 1, 1), 4)}, {p3inf(1, xzq(0, 2, 2), 4)}),
       product3({}, {p3inf(1, xzq(0, 1, 1), 4), p3inf(1, xzq(0, 2, 6), 8)}, "product-rewrite", SideKind::kRewrite)}));
  r.push_back(three_var(
      "altsum-g2", "G2 by alternating sum and weight", PartitionClass::kG2, Statistic::kAltSum,
      {series3({[](int n) {
         return Summand<XzqVars>{1, xzq(0, n, c2(2 * n + 1)), {p3(-1, xzq(0, 1, -1), 4, n)},
                                 {p3(1, xzq(0, 0, 4), 4, n), p3(1, xzq(0, 2, 2), 4, n)}};
       }}),
       product3({p3inf(-1, xzq(0, 1, 3), 4)}, {p3inf(1, xzq(0, 2, 2), 4)}),
       product3({}, {p3inf(1, xzq(0, 1, 3), 4), p3inf(1, xzq(0, 2, 2), 8)}, "product-rewrite", SideKind::kRewrite)}));

  // Odd parts, alternating sum and weight.
  const auto xzq_den = [](int n, int ab_len) {
    return std::vector<P3>{p3(1, xzq(0, 2, 2), 4, ab_len), p3(1, xzq(0, 0, 4), 4, n)};
  };
  r.push_back(three_var(
      "xzq-g1", "G1 by odd parts, alternating sum and weight", PartitionClass::kG1, Statistic::kXzq,
      {series3({[xzq_den](int n) {
         return Summand<XzqVars>{1, xzq(n, n, 2 * n * n - n), {p3(-1, xzq(-1, 1, 1), 4, n)}, xzq_den(n, n)};
       }}),
       product3({p3inf(-1, xzq(1, 1, 1), 4)}, {p3inf(1, xzq(0, 2, 2), 4)}),
       substituted(g1_product(), MapId::kXzq)}));
  r.push_back(three_var(
      "xzq-g2", "G2 by odd parts, alternating sum and weight", PartitionClass::kG2, Statistic::kXzq,
      {series3({[xzq_den](int n) {
         return Summand<XzqVars>{1, xzq(n, n, 2 * n * n + n), {p3(-1, xzq(-1, 1, -1), 4, n)}, xzq_den(n, n)};
       }}),
       product3({p3inf(-1, xzq(1, 1, 3), 4)}, {p3inf(1, xzq(0, 2, 2), 4)}),
       substituted(g2_product(), MapId::kXzq)}));
  r.push_back(three_var(
      "xzq-p1", "P1 by odd parts, alternating sum and weight", PartitionClass::kP1, Statistic::kXzq,
      {series3({[xzq_den](int n) {
                  return Summand<XzqVars>{1, xzq(0, 0, 4 * n), {p3(-1, xzq(1, 1, -3), 4, n)}, xzq_den(n, n)};
                },
                [xzq_den](int n) {
                  return Summand<XzqVars>{1, xzq(0, 2, 4 * n + 2), {p3(-1, xzq(1, 1, 1), 4, n)}, xzq_den(n, n + 1)};
                }}),
       product3({p3inf(-1, xzq(1, 1, 1), 4)}, {p3inf(1, xzq(0, 2, 2), 4), p3inf(1, xzq(0, 0, 4), 4)}),
       substituted(p1_product(), MapId::kXzq)}));
  r.push_back(three_var(
      "xzq-p2", "P2 by odd parts, alternating sum and weight", PartitionClass::kP2, Statistic::kXzq,
      {series3({[xzq_den](int n) {
                  return Summand<XzqVars>{1, xzq(0, 0, 4 * n), {p3(-1, xzq(1, 1, -1), 4, n)}, xzq_den(n, n)};
                },
                [xzq_den](int n) {
                  return Summand<XzqVars>{1, xzq(0, 2, 4 * n + 2), {p3(-1, xzq(1, 1, 3), 4, n)}, xzq_den(n, n + 1)};
                }}),
       product3({p3inf(-1, xzq(1, 1, 3), 4)}, {p3inf(1, xzq(0, 2, 2), 4), p3inf(1, xzq(0, 0, 4), 4)}),
       substituted(p2_product(), MapId::kXzq)}));

  // BG-rank and weight.
  const auto q2q2 = [](int len) { return std::vector<P3>{p3(1, xzq(0, 0, 2), 2, len)}; };
  r.push_back(three_var(
      "bg-g1", "G1 by BG-rank and weight", PartitionClass::kG1, Statistic::kBgRank,
      {series3({[q2q2](int n) {
         return Summand<XzqVars>{1, xzq(0, n, 2 * n * n - n), {p3(-1, xzq(0, -1, 1), 4, n)}, q2q2(2 * n)};
       }}),
       product3({p3inf(-1, xzq(0, 1, 1), 4)}, {p3inf(1, xzq(0, 0, 2), 4)}),
       substituted(g1_product(), MapId::kBg)}));
  r.push_back(three_var(
      "bg-g2", "G2 by BG-rank and weight", PartitionClass::kG2, Statistic::kBgRank,
      {series3({[q2q2](int n) {
         return Summand<XzqVars>{1, xzq(0, -n, 2 * n * n + n), {p3(-1, xzq(0, 1, -1), 4, n)}, q2q2(2 * n)};
       }}),
       product3({p3inf(-1, xzq(0, -1, 3), 4)}, {p3inf(1, xzq(0, 0, 2), 4)}),
       substituted(g2_product(), MapId::kBg)}));
  r.push_back(three_var(
      "bg-p1", "P1 by BG-rank and weight", PartitionClass::kP1, Statistic::kBgRank,
      {series3({[q2q2](int n) {
                  return Summand<XzqVars>{1, xzq(0, 0, 4 * n), {p3(-1, xzq(0, 1, -3), 4, n)}, q2q2(2 * n)};
                },
                [q2q2](int n) {
                  return Summand<XzqVars>{1, xzq(0, 0, 4 * n + 2), {p3(-1, xzq(0, 1, 1), 4, n)}, q2q2(2 * n + 1)};
                }}),
       product3({p3inf(-1, xzq(0, 1, 1), 4)}, {p3inf(1, xzq(0, 0, 2), 2)}),
       substituted(p1_product(), MapId::kBg)}));
  r.push_back(three_var(
      "bg-p2", "P2 by BG-rank and weight", PartitionClass::kP2, Statistic::kBgRank,
      {series3({[q2q2](int n) {
                  return Summand<XzqVars>{1, xzq(0, 0, 4 * n), {p3(-1, xzq(0, -1, -1), 4, n)}, q2q2(2 * n)};
                },
                [q2q2](int n) {
                  return Summand<XzqVars>{1, xzq(0, 0, 4 * n + 2), {p3(-1, xzq(0, -1, 3), 4, n)}, q2q2(2 * n + 1)};
                }}),
       product3({p3inf(-1, xzq(0, -1, 3), 4)}, {p3inf(1, xzq(0, 0, 2), 2)}),
       substituted(p2_product(), MapId::kBg)}));
  return r;
}

// ---- comparison -------------------------------------------------------------

template <class V>
nlohmann::json slice_text(const LaurentSeries<V>& s, int degree) {
  return to_text(LaurentSeries<V>::from_terms(s.slice(degree), degree));
}

template <class V>
void compare_sides(CheckReport& report, const std::string& lhs_name, const LaurentSeries<V>& lhs,
                   const std::string& rhs_name, const LaurentSeries<V>& rhs) {
  const auto cmp = equal_to(lhs, rhs);
  report.expect(cmp.equal, [&] {
    const int deg = cmp.first->degree;
    return nlohmann::json{{"check", lhs_name + " = " + rhs_name},
                          {"discrepancy", discrepancy_json(*cmp.first)},
                          {"slices", {{lhs_name, slice_text(lhs, deg)}, {rhs_name, slice_text(rhs, deg)}}}};
  });
}

bool nonnegative_exponents(const Series& s) {
  for (const auto& t : s.terms())
    for (int e : t.exps)
      if (e < 0) return false;
  return true;
}

}  // namespace

std::string to_string(SideKind k) {
  switch (k) {
    case SideKind::kCombinatorial: return "combinatorial";
    case SideKind::kSeries: return "series";
    case SideKind::kProduct: return "product";
    case SideKind::kRewrite: return "rewrite";
    case SideKind::kSubstituted: return "substituted";
  }
  return "unknown";
}

const std::vector<TheoremSpec>& registry() {
  static const std::vector<TheoremSpec> specs = build_registry();
  return specs;
}

const TheoremSpec& find_spec(std::string_view id) {
  for (const auto& s : registry())
    if (s.id == id) return s;
  throw UnknownTheorem("no identity registered as '" + std::string(id) + "'");
}

AnySeries expand_side(const TheoremSpec& spec, std::string_view side, int trunc) {
  for (const auto& s : spec.sides)
    if (s.name == side) return s.build(trunc);
  throw UnknownTheorem("identity '" + spec.id + "' has no side '" + std::string(side) + "'");
}

AnySeries combinatorial_side(PartitionClass c, Statistic stat, int trunc) {
  if (stat == Statistic::kOmega) {
    std::vector<Series::Term> terms;
    for (int w = 0; w <= trunc; ++w)
      for (const auto& p : enumerate(c, w)) terms.push_back({omega_vector(p), 1});
    return Series::from_terms(std::move(terms), trunc).as_incomplete();
  }
  std::vector<XzqSeries::Term> terms;
  for (int w = 0; w <= trunc; ++w) {
    for (const auto& p : enumerate(c, w)) {
      const auto s = stats(p);
      XzqExponents e{};
      switch (stat) {
        case Statistic::kXzq: e = {s.odd_parts, s.alt_sum, s.weight}; break;
        case Statistic::kOddParts: e = {s.odd_parts, 0, s.weight}; break;
        case Statistic::kAltSum: e = {0, s.alt_sum, s.weight}; break;
        case Statistic::kBgRank: e = {0, s.bg_rank, s.weight}; break;
        case Statistic::kOmega: break;
      }
      terms.push_back({e, 1});
    }
  }
  return XzqSeries::from_terms(std::move(terms), trunc).as_incomplete();
}

CheckReport verify(const TheoremSpec& spec, int trunc) {
  CheckReport report(spec.id);
  report.info() = {{"trunc", trunc},
                   {"variables", spec.variables == VariableSet::kFourParam ? "abcd" : "xzq"}};
  std::vector<std::pair<std::string, AnySeries>> built;
  for (const auto& side : spec.sides) {
    try {
      built.emplace_back(side.name, side.build(trunc));
      report.info()["sides"].push_back(side.name);
    } catch (const Error& e) {
      report.fail({{"check", "expand " + side.name}, {"error", e.what()}});
    }
  }
  for (std::size_t i = 0; i < built.size(); ++i) {
    for (std::size_t j = i + 1; j < built.size(); ++j) {
      const auto& [ln, lhs] = built[i];
      const auto& [rn, rhs] = built[j];
      if (lhs.index() != rhs.index()) {
        report.fail({{"check", ln + " = " + rn}, {"error", "sides use different variables"}});
        continue;
      }
      std::visit(
          [&](const auto& l) {
            using S = std::decay_t<decltype(l)>;
            compare_sides(report, ln, l, rn, std::get<S>(rhs));
          },
          lhs);
    }
  }
  if (spec.summands) {
    try {
      const auto parts = spec.summands(trunc);
      for (std::size_t k = 0; k < parts.size(); ++k)
        report.expect(nonnegative_exponents(parts[k]), [&] {
          return nlohmann::json{{"check", "summand has nonnegative exponents"}, {"summand", k},
                                {"value", to_text(parts[k])}};
        });
    } catch (const Error& e) {
      report.fail({{"check", "expand summands"}, {"error", e.what()}});
    }
  }
  return report;
}

CheckReport verify(std::string_view id, int trunc) { return verify(find_spec(id), trunc); }

Series partial_sum_f(PartialSumFamily family, int n, int trunc) {
  const auto families = family == PartialSumFamily::kP1 ? p1_families() : p2_families();
  Series total(trunc);
  for (const auto& f : families)
    for (int k = 0; k <= n; ++k) total = total + expand(f(k), trunc);
  return total.retruncate(trunc);
}

Series partial_sum_t(PartialSumFamily family, int n, int trunc) {
  const ExponentVector arg = family == PartialSumFamily::kP1 ? kExpA : kExpQ - kExpD;
  return rational_term<AbcdVars>(1, {}, {p4(-1, arg, n)}, {p4(1, kAB, n + 1), p4(1, kExpQ, n)}, trunc);
}

CheckReport verify_partial_sums(PartialSumFamily family, int n_max, int trunc) {
  const std::string tag = family == PartialSumFamily::kP1 ? "p1" : "p2";
  CheckReport report("partial-sums-" + tag);
  report.info() = {{"family", tag}, {"n_max", n_max}, {"trunc", trunc}};
  std::vector<Series> f;
  std::vector<Series> t;
  for (int n = 0; n <= n_max + 1; ++n) {
    f.push_back(partial_sum_f(family, n, trunc));
    t.push_back(partial_sum_t(family, n, trunc));
  }
  // F(0) = T(0) = 1 / (1 - ab)
  const Series geometric = rational_term<AbcdVars>(1, {}, {}, {p4(1, kAB, 1)}, trunc);
  compare_sides(report, "F(0)", f[0], "1/(1-ab)", geometric);
  for (int n = 0; n <= n_max; ++n) {
    const auto sn = std::to_string(n);
    compare_sides(report, "F(" + sn + ")", f[static_cast<std::size_t>(n)], "T(" + sn + ")",
                  t[static_cast<std::size_t>(n)]);
    if (n < n_max) {
      const auto i = static_cast<std::size_t>(n);
      compare_sides(report, "F(" + std::to_string(n + 1) + ")-F(" + sn + ")", sub(f[i + 1], f[i]),
                    "T(" + std::to_string(n + 1) + ")-T(" + sn + ")", sub(t[i + 1], t[i]));
    }
  }
  return report;
}

CheckReport verify_substitution_consistency(MapId map, int weight_max) {
  const bool xzq_map = map == MapId::kXzq;
  CheckReport report(xzq_map ? "substitution-xzq" : "substitution-bg");
  report.info() = {{"map", xzq_map ? "xzq" : "bg"}, {"weight_max", weight_max}};
  const SubstitutionMap m = xzq_map ? SubstitutionMap::odd_parts_alternating_sum() : SubstitutionMap::bg_rank();
  for (int w = 0; w <= weight_max; ++w) {
    for (const auto& p : enumerate(PartitionClass::kAll, w)) {
      const ExponentVector omega = omega_vector(p);
      const XzqExponents expected = xzq_map ? xzq_vector(p) : bg_vector(p);
      const XzqSeries image = substitute(Series::monomial(1, omega, w), m, w);
      const bool ok = image.size() == 1 && image.terms().front().exps == expected &&
                      image.terms().front().coeff == 1;
      report.expect(ok, [&] {
        return nlohmann::json{{"check", "monomial image"}, {"partition", to_string(p)},
                              {"image", to_text(image)},
                              {"expected", monomial_text<XzqVars>(expected)}};
      });
    }
  }
  return report;
}

CheckReport check_statistics(int weight_max) {
  CheckReport report("statistics");
  report.info() = {{"weight_max", weight_max}};
  for (int w = 0; w <= weight_max; ++w) {
    for (const auto& p : enumerate(PartitionClass::kAll, w)) {
      const auto s = stats(p);
      const auto o = omega_exponents(p);
      const auto label = to_string(p);
      report.expect(o.a - o.b + o.d - o.c == s.bg_rank,
                    [&] { return nlohmann::json{{"check", "A-B+D-C = BG"}, {"partition", label}}; });
      report.expect((o.a - o.b) + (o.c - o.d) == s.odd_parts,
                    [&] { return nlohmann::json{{"check", "(A-B)+(C-D) = o"}, {"partition", label}}; });
      report.expect(stats(conjugate(p)).odd_parts == s.alt_sum,
                    [&] { return nlohmann::json{{"check", "o(conjugate) = a"}, {"partition", label}}; });
      report.expect(o.a + o.b + o.c + o.d == s.weight,
                    [&] { return nlohmann::json{{"check", "A+B+C+D = weight"}, {"partition", label}}; });
    }
  }
  return report;
}

nlohmann::json series_json(const AnySeries& s) {
  return std::visit([](const auto& x) { return to_json(x); }, s);
}

std::string series_text(const AnySeries& s) {
  return std::visit([](const auto& x) { return to_text(x); }, s);
}

}  // namespace sipq
