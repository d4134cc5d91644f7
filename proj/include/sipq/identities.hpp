#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "sipq/partitions.hpp"
#include "sipq/report.hpp"
#include "sipq/series.hpp"

namespace sipq {

enum class VariableSet { kFourParam, kXzq };

// Weight attached to each partition on a combinatorial side.
enum class Statistic {
  kOmega,       // a^A b^B c^C d^D
  kXzq,         // x^{o(λ)} z^{a(λ)} q^{|λ|}
  kOddParts,    // x^{o(λ)} q^{|λ|}
  kAltSum,      // z^{a(λ)} q^{|λ|}
  kBgRank,      // z^{BG(λ)} q^{|λ|}
};

enum class SideKind { kCombinatorial, kSeries, kProduct, kRewrite, kSubstituted };

std::string to_string(SideKind k);

using AnySeries = std::variant<Series, XzqSeries>;

struct Side {
  std::string name;
  SideKind kind;
  std::function<AnySeries(int trunc)> build;
};

struct TheoremSpec {
  std::string id;
  std::string description;
  VariableSet variables = VariableSet::kFourParam;
  // Combinatorial side, if any: members of the class weighted by the statistic.
  std::optional<PartitionClass> partition_class;
  Statistic statistic = Statistic::kOmega;
  // Every side must agree with every other at the requested truncation.
  std::vector<Side> sides;
  // Four-parameter specs: the individually expanded series summands, each of
  // which must have nonnegative exponents.
  std::function<std::vector<Series>(int trunc)> summands;
};

// All registered identities, in a fixed order.
const std::vector<TheoremSpec>& registry();
// Throws UnknownTheorem.
const TheoremSpec& find_spec(std::string_view id);

// Expands one side by name ("combinatorial", "series", "product", ...).
AnySeries expand_side(const TheoremSpec& spec, std::string_view side, int trunc);

// Sum of the statistic over members of `c` with weight <= trunc.
AnySeries combinatorial_side(PartitionClass c, Statistic stat, int trunc);

CheckReport verify(const TheoremSpec& spec, int trunc);
CheckReport verify(std::string_view id, int trunc);

enum class PartialSumFamily { kP1, kP2 };

// F(N): partial sums of the two series families; T(N): the matching
// Pochhammer ratio. Exposed for tests.
Series partial_sum_f(PartialSumFamily family, int n, int trunc);
Series partial_sum_t(PartialSumFamily family, int n, int trunc);

// F(N) = T(N) for 0 <= N <= n_max and T(N+1) - T(N) = F(N+1) - F(N).
CheckReport verify_partial_sums(PartialSumFamily family, int n_max, int trunc);

enum class MapId { kXzq, kBg };

// ω(λ) under the map equals the directly computed statistic monomial for
// every partition of weight <= weight_max.
CheckReport verify_substitution_consistency(MapId map, int weight_max);

// A - B + D - C = BG(λ), (A - B) + (C - D) = o(λ), o(λ') = a(λ).
CheckReport check_statistics(int weight_max);

nlohmann::json series_json(const AnySeries& s);
std::string series_text(const AnySeries& s);

}  // namespace sipq
