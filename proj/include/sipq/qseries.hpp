#pragma once

// q-Pochhammer symbols over any variable set, q-binomial coefficients in
// Q = abcd, and checkers for the classical lemmas.

#include <optional>
#include <vector>

#include "sipq/report.hpp"
#include "sipq/series.hpp"

namespace sipq {

// (arg; base)_n, or (arg; base)_inf when `n` is empty.
template <class V>
struct Pochhammer {
  LaurentSeries<V> arg;
  LaurentSeries<V> base;
  std::optional<int> n;

  static Pochhammer finite(LaurentSeries<V> arg, LaurentSeries<V> base, int n) {
    return {std::move(arg), std::move(base), n};
  }
  static Pochhammer infinite(LaurentSeries<V> arg, LaurentSeries<V> base) {
    return {std::move(arg), std::move(base), std::nullopt};
  }
};

namespace detail {

inline int min0(int x) { return x < 0 ? x : 0; }

// Lower bound on the degree of every term of a finite Pochhammer product.
template <class V>
int pochhammer_min_deg(const Pochhammer<V>& p) {
  if (!p.n) return 0;
  int total = 0;
  for (int i = 0; i < *p.n; ++i) total += min0(sat_add(p.arg.min_deg(), i * p.base.min_deg()));
  return total;
}

template <class V>
void check_base(const Pochhammer<V>& p) {
  if (p.base.min_deg() < 1)
    throw NonConvergent("Pochhammer base must have positive minimum degree");
  if (!p.n && p.arg.min_deg() < 1)
    throw NonConvergent("infinite Pochhammer argument must have positive minimum degree");
}

// The factors x with (1 - x) in the product, as complete series; infinite
// products stop once x cannot reach degree `cap`.
template <class V>
std::vector<LaurentSeries<V>> linear_factors(const Pochhammer<V>& p, int cap, int partner_min) {
  using S = LaurentSeries<V>;
  std::vector<S> out;
  S power = S::one(0);
  for (int i = 0;; ++i) {
    if (p.n ? i >= *p.n : sat_add(sat_add(p.arg.min_deg(), i * p.base.min_deg()), partner_min) > cap) break;
    out.push_back(p.arg * power);
    power = power * p.base;
  }
  return out;
}

}  // namespace detail

// coeff * x^exps * prod(num) / prod(den), exact through degree `trunc`.
// Denominator arguments need minimum degree >= 1 (each factor a unit).
template <class V>
LaurentSeries<V> rational_term(const BigInt& coeff, const Exponents<V>& exps,
                               const std::vector<Pochhammer<V>>& num,
                               const std::vector<Pochhammer<V>>& den, int trunc) {
  using S = LaurentSeries<V>;
  const int p = S::degree(exps);
  int m_num = 0;
  for (const auto& f : num) {
    detail::check_base(f);
    m_num += detail::pochhammer_min_deg(f);
  }
  for (const auto& f : den) {
    detail::check_base(f);
    if (f.arg.min_deg() < 1 && !(f.n && *f.n == 0))
      throw NotAUnit("denominator Pochhammer argument must have positive minimum degree");
  }
  if (coeff == 0) return S::zero(trunc);
  const int lowest = p + m_num;
  if (lowest > trunc) return S::zero(trunc).as_incomplete();

  // Numerator and denominator are computed through W so that their product,
  // whose lowest term may sit at m_num < 0, stays exact through trunc - p.
  const int w = trunc - p - m_num;
  S acc = S::one(w - m_num);
  bool infinite = false;
  for (const auto& f : num) {
    infinite = infinite || !f.n;
    for (const auto& x : detail::linear_factors(f, w - m_num, m_num))
      acc = mul_capped(acc, S::one(0) - x, w - m_num);
  }
  acc = acc.retruncate(w);

  for (const auto& f : den) {
    infinite = infinite || !f.n || *f.n > 0;
    for (const auto& x : detail::linear_factors(f, w, 0)) {
      S inv(w);
      if (x.size() == 1 && x.complete()) {
        // 1/(1 - c*m) = sum (c*m)^k
        std::vector<typename S::Term> terms;
        const auto& t = x.terms().front();
        const int dx = S::degree(t.exps);
        typename S::Exps e{};
        BigInt c = 1;
        for (int k = 0; k * dx <= w; ++k) {
          terms.push_back({e, c});
          e = e + t.exps;
          c *= t.coeff;
        }
        inv = S::from_terms(std::move(terms), w).as_incomplete();
      } else {
        inv = invert_unit((S::one(0) - x).retruncate(w));
      }
      acc = mul_capped(acc, inv, w);
    }
  }
  // Stored terms above trunc - p may miss skipped factors; the final
  // retruncate discards them.
  S out = acc.times_monomial(coeff, exps).retruncate(trunc);
  return infinite ? out.as_incomplete() : out;
}

template <class V>
LaurentSeries<V> pochhammer_finite(const LaurentSeries<V>& arg, const LaurentSeries<V>& base, int n,
                                   int trunc) {
  return rational_term<V>(1, {}, {Pochhammer<V>::finite(arg, base, n)}, {}, trunc);
}

template <class V>
LaurentSeries<V> pochhammer_infinite(const LaurentSeries<V>& arg, const LaurentSeries<V>& base,
                                     int trunc) {
  return rational_term<V>(1, {}, {Pochhammer<V>::infinite(arg, base)}, {}, trunc);
}

// Signed monomial shorthand: coeff * a^e0 b^e1 c^e2 d^e3.
struct Monomial {
  BigInt coeff = 1;
  ExponentVector exps{};

  Series series(int trunc) const { return Series::monomial(coeff, exps, trunc); }
  int degree() const { return Series::degree(exps); }
};

struct QBinomial {
  int n = 0;
  int m = 0;
  Series value;
};

// Gaussian binomial [n, m] in Q = abcd; zero when m < 0 or m > n.
QBinomial qbinomial(int n, int m, int trunc);
// The same coefficient as a complete polynomial.
const Series& qbinomial_poly(int n, int m);

CheckReport check_qbinomial_recurrences(int n_max);
// (-z;Q)_n = sum_k z^k Q^{k(k-1)/2} [n, k].
CheckReport check_qbinomial_theorem(int n, const Monomial& z, int trunc);

// a = nullopt means the a -> infinity limit.
CheckReport check_q_gauss(const std::optional<Monomial>& a, const Monomial& b, const Monomial& c,
                          int trunc);

}  // namespace sipq
