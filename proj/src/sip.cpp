#include "sipq/sip.hpp"

#include <map>

#include "sipq/qseries.hpp"
#include "sipq/series_io.hpp"
#include "sipq/weights.hpp"

namespace sipq {

namespace {

bool strict_class(PartitionClass c) { return c == PartitionClass::kG1 || c == PartitionClass::kG2; }

void require_sip_class(PartitionClass c) {
  if (c != PartitionClass::kG1 && c != PartitionClass::kG2 && c != PartitionClass::kP1 && c != PartitionClass::kP2)
    throw DomainError("'" + to_string(c) + "' is not one of g1, g2, p1, p2");
}

std::vector<int> row_vector(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

}  // namespace

SipDecomposition decompose(PartitionClass c, const Partition& lambda) {
  require_sip_class(c);
  if (!is_member(c, lambda)) throw NotInClass(to_string(lambda) + " is not in " + to_string(c));
  const std::size_t len = lambda.length();
  // Smallest admissible gap between consecutive basis rows; the other one is
  // gap + 1, so exactly one candidate matches each row's parity.
  const int gap = strict_class(c) ? 1 : 0;
  std::vector<int> beta(len);
  std::vector<int> mu;
  for (std::size_t k = len; k-- > 0;) {
    const int row = lambda.parts()[k];
    const int floor = k + 1 == len ? 1 : beta[k + 1] + gap;
    beta[k] = (row - floor) % 2 == 0 ? floor : floor + 1;
  }
  int previous = 0;
  for (std::size_t k = 0; k < len; ++k) {
    const int rest = lambda.parts()[k] - beta[k];
    if (rest < 0 || rest % 2 != 0 || (k > 0 && rest > previous))
      throw InternalError("remainder of " + to_string(lambda) + " is not a partition into even parts");
    if (rest > 0) mu.push_back(rest);
    previous = rest;
  }
  return {Partition(std::move(beta)), Partition(std::move(mu)), 2};
}

Partition compose(PartitionClass c, const Partition& beta, const Partition& mu) {
  require_sip_class(c);
  if (!is_member(basis_of(c), beta))
    throw NotInClass(to_string(beta) + " is not in " + to_string(basis_of(c)));
  if (mu.length() > beta.length())
    throw LengthViolation("mu " + to_string(mu) + " is longer than beta " + to_string(beta));
  for (int part : mu.parts())
    if (part % 2 != 0) throw NonEvenMu("mu " + to_string(mu) + " has an odd part");
  std::vector<int> rows = row_vector(beta);
  for (std::size_t i = 0; i < mu.length(); ++i) rows[i] += mu.parts()[i];
  Partition lambda(std::move(rows));
  if (!is_member(c, lambda))
    throw InternalError("composition " + to_string(lambda) + " left " + to_string(c));
  return lambda;
}

CheckReport verify_sip_property(PartitionClass c, PartitionClass basis, int modulus, int weight_max) {
  require_sip_class(c);
  if (modulus != 2) throw DomainError("SIP decomposition is implemented for modulus 2 only");
  CheckReport report("sip-property-" + to_string(c));
  report.info() = {{"class", to_string(c)}, {"basis", to_string(basis)}, {"weight_max", weight_max}};

  // Preimage counts: every basis element composed with every μ of even parts.
  std::map<Partition, int> preimages;
  std::vector<std::vector<Partition>> halves(static_cast<std::size_t>(weight_max / 2) + 1);
  for (int r = 0; r <= weight_max / 2; ++r) halves[static_cast<std::size_t>(r)] = enumerate(PartitionClass::kAll, r);
  for (int w = 0; w <= weight_max; ++w) {
    for (const auto& beta : enumerate(basis, w)) {
      for (int r = 0; 2 * r <= weight_max - w; ++r) {
        for (const auto& half : halves[static_cast<std::size_t>(r)]) {
          if (half.length() > beta.length()) continue;
          std::vector<int> rows = row_vector(beta);
          for (std::size_t i = 0; i < half.length(); ++i) rows[i] += 2 * half.parts()[i];
          Partition lambda(std::move(rows));
          report.expect(is_member(c, lambda), [&] {
            return nlohmann::json{{"check", "composition stays in class"}, {"beta", to_string(beta)},
                                  {"lambda", to_string(lambda)}};
          });
          ++preimages[lambda];
        }
      }
    }
  }

  std::size_t members = 0;
  for (int w = 0; w <= weight_max; ++w) {
    for (const auto& lambda : enumerate(c, w)) {
      ++members;
      const auto label = to_string(lambda);
      try {
        const auto d = decompose(c, lambda);
        const bool shape_ok = d.beta.length() == lambda.length() && d.mu.length() <= d.beta.length() &&
                              is_member(basis, d.beta);
        report.expect(shape_ok, [&] {
          return nlohmann::json{{"check", "decomposition shape"}, {"lambda", label},
                                {"beta", to_string(d.beta)}, {"mu", to_string(d.mu)}};
        });
        report.expect(compose(c, d.beta, d.mu) == lambda,
                      [&] { return nlohmann::json{{"check", "round trip"}, {"lambda", label}}; });
      } catch (const Error& e) {
        report.fail({{"check", "decompose"}, {"lambda", label}, {"error", e.what()}});
      }
      auto it = preimages.find(lambda);
      const int count = it == preimages.end() ? 0 : it->second;
      report.expect(count == 1, [&] {
        return nlohmann::json{{"check", "unique preimage"}, {"lambda", label}, {"preimages", count}};
      });
    }
  }
  report.expect(preimages.size() == members, [&] {
    return nlohmann::json{{"check", "no compositions outside the class"},
                          {"composed", preimages.size()}, {"members", members}};
  });
  report.info()["members"] = members;
  return report;
}

std::vector<Series> basis_length_polynomials(PartitionClass basis, int trunc) {
  if (!is_basis(basis)) throw DomainError("'" + to_string(basis) + "' is not a basis tag");
  std::vector<std::vector<Series::Term>> buckets(static_cast<std::size_t>(std::max(trunc, 0)) + 1);
  for (int w = 0; w <= trunc; ++w)
    for (const auto& p : enumerate(basis, w)) buckets[p.length()].push_back({omega_vector(p), 1});
  std::vector<Series> out;
  out.reserve(buckets.size());
  for (auto& terms : buckets) out.push_back(Series::from_terms(std::move(terms), trunc).as_incomplete());
  return out;
}

CheckReport sip_gf_single_variable(PartitionClass c, PartitionClass basis, int modulus, int weight_max) {
  CheckReport report("sip-gf-single-variable-" + to_string(c));
  report.info() = {{"class", to_string(c)}, {"basis", to_string(basis)}, {"modulus", modulus},
                   {"weight_max", weight_max}};
  if (modulus < 1) throw DomainError("modulus must be positive");
  using P = Pochhammer<QVars>;
  const int n_max = std::max(weight_max, 0);
  std::vector<std::vector<QSeries::Term>> b(static_cast<std::size_t>(n_max) + 1);
  for (int w = 0; w <= weight_max; ++w)
    for (const auto& p : enumerate(basis, w)) b[p.length()].push_back({{w}, 1});

  const QSeries qk = QSeries::monomial(1, {modulus}, modulus);
  QSeries total(weight_max);
  for (int n = 0; n <= n_max; ++n) {
    if (b[static_cast<std::size_t>(n)].empty()) continue;
    const QSeries bn = QSeries::from_terms(std::move(b[static_cast<std::size_t>(n)]), weight_max).as_incomplete();
    const QSeries inv = rational_term<QVars>(1, {}, {}, {P::finite(qk, qk, n)}, weight_max);
    total = total + bn * inv;
  }
  total = total.retruncate(weight_max);
  for (int w = 0; w <= weight_max; ++w) {
    const BigInt expected = static_cast<long>(enumerate(c, w).size());
    const BigInt got = total.coeff({w});
    report.expect(expected == got, [&] {
      return nlohmann::json{{"check", "coefficient"}, {"weight", w}, {"enumerated", expected.get_str()},
                            {"assembled", got.get_str()}};
    });
  }
  return report;
}

Series sip_gf_four_parameter(PartitionClass c, int trunc) {
  require_sip_class(c);
  using P = Pochhammer<AbcdVars>;
  const Series ab = Series::monomial(1, kExpA + kExpB, 2);
  const Series q = Series::monomial(1, kExpQ, 4);
  const auto b = basis_length_polynomials(basis_of(c), trunc);
  Series total(trunc);
  for (std::size_t m = 0; m < b.size(); ++m) {
    if (b[m].is_zero()) continue;
    const int n = static_cast<int>(m / 2);
    const int ab_len = m % 2 == 0 ? n : n + 1;
    const Series inv = rational_term<AbcdVars>(1, {}, {}, {P::finite(ab, q, ab_len), P::finite(q, q, n)}, trunc);
    total = total + b[m] * inv;
  }
  return total.retruncate(trunc);
}

CheckReport check_sip_gf_four_parameter(PartitionClass c, int trunc) {
  CheckReport report("sip-gf-four-parameter-" + to_string(c));
  report.info() = {{"class", to_string(c)}, {"trunc", trunc}};
  const Series gf = sip_gf_four_parameter(c, trunc);
  for (int w = 0; w <= trunc; ++w) {
    const Series expected = omega_sum(enumerate(c, w), w);
    const Series got = Series::from_terms(gf.slice(w), w);
    const auto cmp = equal_to(expected, got);
    report.expect(cmp.equal, [&] {
      return nlohmann::json{{"check", "slice"}, {"degree", w}, {"enumerated", to_text(expected)},
                            {"assembled", to_text(got)}};
    });
  }
  return report;
}

}  // namespace sipq
