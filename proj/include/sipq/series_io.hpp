#pragma once

#include <json.hpp>

#include <string>

#include "sipq/series.hpp"

namespace sipq {

template <class V>
std::string monomial_text(const Exponents<V>& e) {
  std::string out;
  for (std::size_t i = 0; i < V::kCount; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += V::kNames[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

// Canonical text form, e.g. "a^2*b*c*d + 2*a^2*b*c - c^-1". Zero is "0".
template <class V>
std::string to_text(const LaurentSeries<V>& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : s.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    const BigInt magnitude = abs(t.coeff);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_text<V>(t.exps);
    if (mono.empty()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

// Array of {"e<var>": exponent, ..., "coeff": "<decimal>"} records in
// canonical order. Coefficients are strings so no precision is lost.
template <class V>
nlohmann::json to_json(const LaurentSeries<V>& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : s.terms()) {
    nlohmann::json rec = nlohmann::json::object();
    for (std::size_t i = 0; i < V::kCount; ++i) rec["e" + std::string(V::kNames[i])] = t.exps[i];
    rec["coeff"] = t.coeff.get_str();
    terms.push_back(std::move(rec));
  }
  return terms;
}

template <class V>
nlohmann::json discrepancy_json(const Discrepancy<V>& d) {
  nlohmann::json exps = nlohmann::json::object();
  for (std::size_t i = 0; i < V::kCount; ++i) exps["e" + std::string(V::kNames[i])] = d.exps[i];
  return {{"monomial", monomial_text<V>(d.exps).empty() ? "1" : monomial_text<V>(d.exps)},
          {"exponents", exps},
          {"degree", d.degree},
          {"lhs", d.lhs.get_str()},
          {"rhs", d.rhs.get_str()}};
}

}  // namespace sipq
