#include "sipq/series.hpp"

namespace sipq {

SubstitutionMap SubstitutionMap::odd_parts_alternating_sum() {
  SubstitutionMap m;
  m.images = {XzqExponents{1, 1, 1}, XzqExponents{-1, 1, 1}, XzqExponents{1, -1, 1},
              XzqExponents{-1, -1, 1}};
  return m;
}

SubstitutionMap SubstitutionMap::bg_rank() {
  SubstitutionMap m;
  m.images = {XzqExponents{0, 1, 1}, XzqExponents{0, -1, 1}, XzqExponents{0, -1, 1},
              XzqExponents{0, 1, 1}};
  return m;
}

XzqExponents SubstitutionMap::image(const ExponentVector& e) const {
  XzqExponents out{};
  for (std::size_t v = 0; v < 4; ++v) out = out + e[v] * images[v];
  return out;
}

XzqSeries substitute(const Series& s, const SubstitutionMap& map, int trunc_q) {
  const int g = map.images[0][2];
  for (const auto& img : map.images)
    if (img[2] != g || g <= 0)
      throw DomainError("substitute: every variable must map to the same positive power of q");
  if (!s.complete() && trunc_q > g * s.trunc())
    throw PrecisionLoss("substitute: source exact through degree " + std::to_string(s.trunc()) +
                        ", q-degree " + std::to_string(trunc_q) + " requested");

  std::vector<XzqSeries::Term> terms;
  terms.reserve(s.size());
  for (const auto& t : s.terms()) {
    XzqExponents e = map.image(t.exps);
    if (e[2] > trunc_q) continue;
    if (e[2] < 0)
      throw NegativeQDegree("substitute: term maps to q^" + std::to_string(e[2]));
    terms.push_back({e, t.coeff});
  }
  auto out = XzqSeries::from_terms(std::move(terms), trunc_q);
  const bool dropped = !s.is_zero() && g * s.max_stored_degree() > trunc_q;
  return s.complete() && !dropped ? out : out.as_incomplete();
}

}  // namespace sipq
