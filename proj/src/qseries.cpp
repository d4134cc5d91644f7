#include "sipq/qseries.hpp"

#include <map>
#include <mutex>

#include "sipq/series_io.hpp"

namespace sipq {

namespace {

Series q_power(int k) { return Series::monomial(1, k * kExpQ, 4 * k); }

int poly_degree(int n, int m) { return 4 * m * (n - m); }

class QBinomialMemo {
 public:
  const Series& get(int n, int m) {
    std::lock_guard<std::mutex> lock(mutex_);
    return get_locked(n, m);
  }

 private:
  const Series& get_locked(int n, int m) {
    static const Series kZero(0);
    if (m < 0 || m > n) return kZero;
    auto key = std::make_pair(n, m);
    if (auto it = table_.find(key); it != table_.end()) return it->second;
    Series value = Series::one(0);
    if (m != 0 && m != n) {
      // [n, m] = Q^m [n-1, m] + [n-1, m-1]
      value = q_power(m) * get_locked(n - 1, m) + get_locked(n - 1, m - 1);
    }
    return table_.emplace(key, value.retruncate(poly_degree(n, m))).first->second;
  }

  std::mutex mutex_;
  std::map<std::pair<int, int>, Series> table_;
};

QBinomialMemo& memo() {
  static QBinomialMemo instance;
  return instance;
}

// Product formula prod_{i=1}^{m} (1 - Q^{n-m+i}) / (1 - Q^i), expanded through
// `trunc` with invert_unit; independent of the recurrence.
Series qbinomial_by_product(int n, int m, int trunc) {
  Series num = Series::one(trunc);
  Series den = Series::one(trunc);
  for (int i = 1; i <= m; ++i) {
    num = mul(num, (Series::one(trunc) - q_power(n - m + i)).retruncate(trunc));
    den = mul(den, (Series::one(trunc) - q_power(i)).retruncate(trunc));
  }
  return mul(num, invert_unit(den));
}

nlohmann::json mismatch(const std::string& what, const Comparison<AbcdVars>& cmp) {
  nlohmann::json out = {{"check", what}};
  if (cmp.first) out["discrepancy"] = discrepancy_json(*cmp.first);
  return out;
}

std::string pair_label(int n, int m) { return "[" + std::to_string(n) + "," + std::to_string(m) + "]"; }

}  // namespace

const Series& qbinomial_poly(int n, int m) { return memo().get(n, m); }

QBinomial qbinomial(int n, int m, int trunc) {
  return {n, m, qbinomial_poly(n, m).retruncate(trunc)};
}

CheckReport check_qbinomial_recurrences(int n_max) {
  CheckReport report("qbinomial-recurrences");
  report.info()["n_max"] = n_max;
  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= n; ++m) {
      const int top = poly_degree(n, m);
      // One Q-degree of headroom so stray high terms are caught.
      const int bound = top + 4;
      const Series value = qbinomial_poly(n, m).retruncate(bound);
      const std::string label = pair_label(n, m);

      bool nonneg = true;
      for (const auto& t : value.terms()) nonneg = nonneg && t.coeff > 0;
      report.expect(nonneg && value.max_stored_degree() == top && value.complete(),
                    [&] { return nlohmann::json{{"check", "shape " + label}, {"value", to_text(value)}}; });
      if (m == 0 || m == n)
        report.expect(value == Series::one(bound), [&] { return nlohmann::json{{"check", "boundary " + label}}; });

      const auto sym = equal_to(value, qbinomial_poly(n, n - m).retruncate(bound));
      report.expect(sym.equal, [&] { return mismatch("symmetry " + label, sym); });

      if (n >= 1) {
        const Series rec1 =
            (q_power(m) * qbinomial_poly(n - 1, m) + qbinomial_poly(n - 1, m - 1)).retruncate(bound);
        const auto c1 = equal_to(value, rec1);
        report.expect(c1.equal, [&] { return mismatch("first recurrence " + label, c1); });
        const Series rec2 =
            (qbinomial_poly(n - 1, m) + q_power(n - m) * qbinomial_poly(n - 1, m - 1)).retruncate(bound);
        const auto c2 = equal_to(value, rec2);
        report.expect(c2.equal, [&] { return mismatch("second recurrence " + label, c2); });
      }

      const auto cp = equal_to(value, qbinomial_by_product(n, m, bound));
      report.expect(cp.equal, [&] { return mismatch("product formula " + label, cp); });
    }
  }
  return report;
}

CheckReport check_qbinomial_theorem(int n, const Monomial& z, int trunc) {
  CheckReport report("qbinomial-theorem");
  report.info() = {{"n", n}, {"z", to_text(z.series(z.degree()))}, {"trunc", trunc}};
  const Series base = q_power(1);
  const Series lhs = pochhammer_finite(z.series(z.degree()).negated(), base, n, trunc);

  // The right side is a finite sum of complete polynomials.
  Series rhs(trunc);
  for (int k = 0; k <= n; ++k) {
    BigInt coeff;
    mpz_pow_ui(coeff.get_mpz_t(), z.coeff.get_mpz_t(), static_cast<unsigned long>(k));
    const ExponentVector e = k * z.exps + (k * (k - 1) / 2) * kExpQ;
    const Series mono = Series::monomial(coeff, e, std::max(trunc, Series::degree(e)));
    rhs = rhs + mono * qbinomial_poly(n, k);
  }
  const auto cmp = equal_to(lhs, rhs.retruncate(trunc));
  report.expect(cmp.equal, [&] { return mismatch("finite q-binomial theorem", cmp); });
  return report;
}

CheckReport check_q_gauss(const std::optional<Monomial>& a, const Monomial& b, const Monomial& c,
                          int trunc) {
  CheckReport report(a ? "q-gauss" : "q-gauss-a-infinity");
  const Series base = q_power(1);
  const auto mono = [](const Monomial& m) { return m.series(std::max(0, m.degree())); };
  const auto ratio = [](const Monomial& x, const Monomial& y) {
    // x / y for y = +-monomial
    return Monomial{x.coeff * y.coeff, x.exps - y.exps};
  };

  // In the limit, (a;q)_n (c/ab)^n -> (-1)^n q^{n(n-1)/2} (c/b)^n.
  const Monomial step = a ? ratio(ratio(c, *a), b) : ratio(c, b);
  report.info() = {{"a", a ? to_text(mono(*a)) : std::string("infinity")},
                   {"b", to_text(mono(b))},
                   {"c", to_text(mono(c))},
                   {"trunc", trunc}};
  if (c.degree() < 1 || step.degree() < 1 || ratio(c, b).degree() < 1 || (a && ratio(c, *a).degree() < 1))
    throw DomainError("q-Gauss: c, c/b, c/a and the ratio c/ab need positive degree");

  using P = Pochhammer<AbcdVars>;
  Series lhs(trunc);
  for (int n = 0;; ++n) {
    // Lower bound on the degree of the n-th summand.
    int lowest = n * step.degree() + (a ? 0 : 2 * n * (n - 1));
    for (int i = 0; i < n; ++i) {
      lowest += detail::min0(b.degree() + 4 * i);
      if (a) lowest += detail::min0(a->degree() + 4 * i);
    }
    const bool settled = b.degree() + 4 * n >= 0 && (!a || a->degree() + 4 * n >= 0);
    if (lowest > trunc && settled) break;

    BigInt coeff;
    mpz_pow_ui(coeff.get_mpz_t(), step.coeff.get_mpz_t(), static_cast<unsigned long>(n));
    ExponentVector e = n * step.exps;
    if (!a) {
      if (n % 2 == 1) coeff = -coeff;
      e = e + (n * (n - 1) / 2) * kExpQ;
    }
    std::vector<P> num{P::finite(mono(b), base, n)};
    if (a) num.push_back(P::finite(mono(*a), base, n));
    const std::vector<P> den{P::finite(base, base, n), P::finite(mono(c), base, n)};
    lhs = lhs + rational_term<AbcdVars>(coeff, e, num, den, trunc);
  }
  lhs = lhs.retruncate(trunc);

  std::vector<P> num{P::infinite(mono(ratio(c, b)), base)};
  std::vector<P> den{P::infinite(mono(c), base)};
  if (a) {
    num.push_back(P::infinite(mono(ratio(c, *a)), base));
    den.push_back(P::infinite(mono(step), base));
  }
  const Series rhs = rational_term<AbcdVars>(1, {}, num, den, trunc);
  const auto cmp = equal_to(lhs, rhs);
  report.expect(cmp.equal, [&] { return mismatch("q-Gauss summation", cmp); });
  return report;
}

}  // namespace sipq
