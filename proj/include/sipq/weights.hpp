#pragma once

// Bridges from partitions to monomials.

#include <vector>

#include "sipq/partitions.hpp"
#include "sipq/series.hpp"

namespace sipq {

inline ExponentVector omega_vector(const Partition& p) {
  const auto w = omega_exponents(p);
  return {w.a, w.b, w.c, w.d};
}

// x^{o(λ)} z^{a(λ)} q^{|λ|}
inline XzqExponents xzq_vector(const Partition& p) {
  const auto s = stats(p);
  return {s.odd_parts, s.alt_sum, s.weight};
}

// z^{BG(λ)} q^{|λ|}
inline XzqExponents bg_vector(const Partition& p) {
  const auto s = stats(p);
  return {0, s.bg_rank, s.weight};
}

// Sum of ω(λ) over the given partitions, as a complete polynomial when every
// weight is at most `trunc`.
inline Series omega_sum(const std::vector<Partition>& parts, int trunc) {
  std::vector<Series::Term> terms;
  terms.reserve(parts.size());
  for (const auto& p : parts) terms.push_back({omega_vector(p), 1});
  return Series::from_terms(std::move(terms), trunc);
}

}  // namespace sipq
