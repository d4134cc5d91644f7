#pragma once

// Sparse truncated Laurent series over arbitrary-precision integers.
//
// A series is graded by a weighted degree (total degree for a,b,c,d; the
// q-exponent for x,z,q). `trunc()` is the largest degree through which the
// stored terms are exact. `min_deg()` is a lower bound on the degree of every
// term of the underlying formal series, stored or not. `complete()` marks a
// series that is known to have no terms above `trunc()`, i.e. a polynomial.
//
// Two multiplication flavours exist:
//   mul(s, t)   - strict: equal truncations required, raises PrecisionLoss if
//                 the product cannot be guaranteed through that bound.
//   s * t       - propagating: the result's trunc() is lowered to the largest
//                 bound the operands guarantee. Callers finish with
//                 retruncate(), which raises PrecisionLoss if the bound they
//                 need was lost.
// Negative-degree operands are where the two differ: with t.min_deg() < 0 an
// incomplete s only determines s*t through s.trunc() + t.min_deg().

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sipq/errors.hpp"

namespace sipq {

using BigInt = mpz_class;

// Variable sets. `kWeights` defines the grading used for truncation.
struct AbcdVars {
  static constexpr std::size_t kCount = 4;
  static constexpr std::array<std::string_view, kCount> kNames{"a", "b", "c", "d"};
  static constexpr std::array<int, kCount> kWeights{1, 1, 1, 1};
};

struct XzqVars {
  static constexpr std::size_t kCount = 3;
  static constexpr std::array<std::string_view, kCount> kNames{"x", "z", "q"};
  static constexpr std::array<int, kCount> kWeights{0, 0, 1};
};

struct QVars {
  static constexpr std::size_t kCount = 1;
  static constexpr std::array<std::string_view, kCount> kNames{"q"};
  static constexpr std::array<int, kCount> kWeights{1};
};

template <class Vars>
using Exponents = std::array<int, Vars::kCount>;

using ExponentVector = Exponents<AbcdVars>;
using XzqExponents = Exponents<XzqVars>;

inline constexpr ExponentVector kExpA{1, 0, 0, 0};
inline constexpr ExponentVector kExpB{0, 1, 0, 0};
inline constexpr ExponentVector kExpC{0, 0, 1, 0};
inline constexpr ExponentVector kExpD{0, 0, 0, 1};
inline constexpr ExponentVector kExpQ{1, 1, 1, 1};  // Q = abcd

template <std::size_t N>
constexpr std::array<int, N> operator+(std::array<int, N> lhs, const std::array<int, N>& rhs) {
  for (std::size_t i = 0; i < N; ++i) lhs[i] += rhs[i];
  return lhs;
}

template <std::size_t N>
constexpr std::array<int, N> operator-(std::array<int, N> lhs, const std::array<int, N>& rhs) {
  for (std::size_t i = 0; i < N; ++i) lhs[i] -= rhs[i];
  return lhs;
}

template <std::size_t N>
constexpr std::array<int, N> operator*(int k, std::array<int, N> e) {
  for (auto& x : e) x *= k;
  return e;
}

namespace detail {

inline constexpr int kNoDegree = std::numeric_limits<int>::max() / 4;

constexpr int sat_add(int a, int b) {
  if (a >= kNoDegree || b >= kNoDegree) return kNoDegree;
  return a + b;
}

template <std::size_t N>
struct ExponentHash {
  std::size_t operator()(const std::array<int, N>& e) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : e) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace detail

template <class Vars>
class LaurentSeries {
 public:
  using Exps = Exponents<Vars>;
  struct Term {
    Exps exps;
    BigInt coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };
  // Degree reported by min_deg() for the exact zero series.
  static constexpr int kNoDegree = detail::kNoDegree;

  // The zero polynomial, exact at every degree.
  explicit LaurentSeries(int trunc = 0) : trunc_(trunc), min_deg_(kNoDegree), complete_(true) {}

  static LaurentSeries zero(int trunc) { return LaurentSeries(trunc); }
  static LaurentSeries one(int trunc) { return monomial(1, Exps{}, trunc); }

  static LaurentSeries monomial(const BigInt& coeff, const Exps& exps, int trunc) {
    LaurentSeries s(trunc);
    if (coeff == 0) return s;
    const int deg = degree(exps);
    s.min_deg_ = deg;
    if (deg > trunc) {
      s.complete_ = false;
    } else {
      s.terms_.push_back({exps, coeff});
    }
    return s;
  }

  // Builds a polynomial from arbitrary (possibly repeated) terms. Terms above
  // `trunc` are dropped and the result is then marked incomplete.
  static LaurentSeries from_terms(std::vector<Term> terms, int trunc) {
    Accumulator acc;
    int lowest = kNoDegree;
    bool dropped = false;
    for (auto& t : terms) {
      if (t.coeff == 0) continue;
      const int deg = degree(t.exps);
      lowest = std::min(lowest, deg);
      if (deg > trunc) {
        dropped = true;
        continue;
      }
      acc[t.exps] += t.coeff;
    }
    LaurentSeries s(trunc);
    s.terms_ = collect(std::move(acc));
    s.complete_ = !dropped;
    s.min_deg_ = lowest;
    if (s.terms_.empty() && !dropped) s.min_deg_ = kNoDegree;
    return s;
  }

  static constexpr int degree(const Exps& e) {
    int d = 0;
    for (std::size_t i = 0; i < Vars::kCount; ++i) d += Vars::kWeights[i] * e[i];
    return d;
  }

  // Canonical order: by degree, then lexicographically on the exponents.
  static bool canonical_less(const Exps& lhs, const Exps& rhs) {
    const int dl = degree(lhs);
    const int dr = degree(rhs);
    if (dl != dr) return dl < dr;
    return lhs < rhs;
  }

  int trunc() const { return trunc_; }
  int min_deg() const { return min_deg_; }
  bool complete() const { return complete_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Largest degree among stored terms (kNoDegree negated when empty).
  int max_stored_degree() const { return terms_.empty() ? -kNoDegree : degree(terms_.back().exps); }

  BigInt coeff(const Exps& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exps& key) { return canonical_less(t.exps, key); });
    if (it != terms_.end() && it->exps == e) return it->coeff;
    return 0;
  }

  BigInt constant_term() const { return coeff(Exps{}); }

  // Terms of exactly the given degree.
  std::vector<Term> slice(int deg) const {
    if (deg > trunc_ && !complete_)
      throw PrecisionLoss("slice at degree " + std::to_string(deg) + " beyond truncation " +
                          std::to_string(trunc_));
    std::vector<Term> out;
    for (const auto& t : terms_)
      if (degree(t.exps) == deg) out.push_back(t);
    return out;
  }

  // Same underlying series known through a lower bound; raising the bound is
  // only possible for complete series.
  LaurentSeries retruncate(int bound) const {
    if (bound > trunc_ && !complete_)
      throw PrecisionLoss("series is exact only through degree " + std::to_string(trunc_) +
                          ", degree " + std::to_string(bound) + " requested");
    LaurentSeries s(bound);
    s.min_deg_ = min_deg_;
    s.complete_ = complete_;
    for (const auto& t : terms_) {
      if (degree(t.exps) > bound) {
        s.complete_ = false;
        break;
      }
      s.terms_.push_back(t);
    }
    return s;
  }

  // Same stored terms, but higher-degree terms of the true series are unknown.
  LaurentSeries as_incomplete() const {
    LaurentSeries s = *this;
    s.complete_ = false;
    if (s.min_deg_ == kNoDegree) s.min_deg_ = trunc_ + 1;
    return s;
  }

  LaurentSeries negated() const {
    LaurentSeries s = *this;
    for (auto& t : s.terms_) t.coeff = -t.coeff;
    return s;
  }

  LaurentSeries scaled(const BigInt& k) const {
    if (k == 0) return LaurentSeries(trunc_);
    LaurentSeries s = *this;
    for (auto& t : s.terms_) t.coeff *= k;
    return s;
  }

  // Multiplies by a single monomial exactly (the monomial is complete).
  LaurentSeries times_monomial(const BigInt& c, const Exps& e) const {
    return multiply(*this, monomial(c, e, std::max(trunc_, degree(e))), kNoDegree);
  }

  // Propagating product, additionally capped at `cap`.
  static LaurentSeries multiply(const LaurentSeries& s, const LaurentSeries& t, int cap) {
    // Exact through the lowest degree an unknown term of either factor can
    // reach; two complete factors keep the nominal truncation.
    int bound = cap;
    if (!s.complete_) bound = std::min(bound, detail::sat_add(s.trunc_, t.lower_bound()));
    if (!t.complete_) bound = std::min(bound, detail::sat_add(t.trunc_, s.lower_bound()));
    if (s.complete_ && t.complete_) {
      int top = nominal_trunc(s, t);
      if (!s.terms_.empty() && !t.terms_.empty()) top = std::max(top, s.max_stored_degree() + t.max_stored_degree());
      bound = std::min(bound, top);
    }

    LaurentSeries r(bound);
    r.min_deg_ = detail::sat_add(s.min_deg_, t.min_deg_);
    r.complete_ = s.complete_ && t.complete_;
    if (s.terms_.empty() || t.terms_.empty()) {
      if (s.is_exact_zero() || t.is_exact_zero()) r = LaurentSeries(bound);
      return r;
    }

    Accumulator acc;
    acc.reserve(s.terms_.size() + t.terms_.size());
    std::vector<int> tdeg(t.terms_.size());
    for (std::size_t j = 0; j < t.terms_.size(); ++j) tdeg[j] = degree(t.terms_[j].exps);
    bool dropped = false;
    for (const auto& st : s.terms_) {
      const int ds = degree(st.exps);
      for (std::size_t j = 0; j < t.terms_.size(); ++j) {
        if (ds + tdeg[j] > bound) {
          dropped = true;
          break;
        }
        auto& slot = acc[st.exps + t.terms_[j].exps];
        mpz_addmul(slot.get_mpz_t(), st.coeff.get_mpz_t(), t.terms_[j].coeff.get_mpz_t());
      }
    }
    r.terms_ = collect(std::move(acc));
    if (dropped) r.complete_ = false;
    if (r.terms_.empty() && r.complete_) r.min_deg_ = kNoDegree;
    return r;
  }

  // Propagating sum.
  static LaurentSeries sum(const LaurentSeries& s, const LaurentSeries& t, bool subtract) {
    const int bound = nominal_trunc(s, t);
    LaurentSeries r(bound);
    r.complete_ = s.complete_ && t.complete_;
    r.min_deg_ = std::min(s.min_deg_, t.min_deg_);
    auto i = s.terms_.begin();
    auto j = t.terms_.begin();
    auto push = [&](const Exps& e, BigInt c) {
      if (c == 0) return;
      if (degree(e) > bound) {
        r.complete_ = false;
        return;
      }
      r.terms_.push_back({e, std::move(c)});
    };
    while (i != s.terms_.end() || j != t.terms_.end()) {
      if (j == t.terms_.end() || (i != s.terms_.end() && canonical_less(i->exps, j->exps))) {
        push(i->exps, i->coeff);
        ++i;
      } else if (i == s.terms_.end() || canonical_less(j->exps, i->exps)) {
        push(j->exps, subtract ? BigInt(-j->coeff) : j->coeff);
        ++j;
      } else {
        push(i->exps, subtract ? BigInt(i->coeff - j->coeff) : BigInt(i->coeff + j->coeff));
        ++i;
        ++j;
      }
    }
    if (r.terms_.empty() && r.complete_) r.min_deg_ = kNoDegree;
    return r;
  }

 private:
  using Accumulator = std::unordered_map<Exps, BigInt, detail::ExponentHash<Vars::kCount>>;

  bool is_exact_zero() const { return terms_.empty() && complete_; }

  // Truncation a combination of s and t is reported at before precision
  // analysis: complete operands never limit it.
  // Lowest degree any term, stored or not, can have.
  int lower_bound() const { return complete_ ? min_deg_ : std::min(min_deg_, trunc_ + 1); }

  static int nominal_trunc(const LaurentSeries& s, const LaurentSeries& t) {
    if (s.complete_ && t.complete_) return std::max(s.trunc_, t.trunc_);
    if (s.complete_) return t.trunc_;
    if (t.complete_) return s.trunc_;
    return std::min(s.trunc_, t.trunc_);
  }

  static std::vector<Term> collect(Accumulator acc) {
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc)
      if (c != 0) out.push_back({e, std::move(c)});
    std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return canonical_less(x.exps, y.exps); });
    return out;
  }

  std::vector<Term> terms_;
  int trunc_;
  int min_deg_;
  bool complete_;
};

using Series = LaurentSeries<AbcdVars>;
using XzqSeries = LaurentSeries<XzqVars>;
using QSeries = LaurentSeries<QVars>;

// ---- propagating arithmetic -------------------------------------------------

template <class V>
LaurentSeries<V> operator+(const LaurentSeries<V>& s, const LaurentSeries<V>& t) {
  return LaurentSeries<V>::sum(s, t, false);
}

template <class V>
LaurentSeries<V> operator-(const LaurentSeries<V>& s, const LaurentSeries<V>& t) {
  return LaurentSeries<V>::sum(s, t, true);
}

template <class V>
LaurentSeries<V> operator-(const LaurentSeries<V>& s) {
  return s.negated();
}

template <class V>
LaurentSeries<V> operator*(const LaurentSeries<V>& s, const LaurentSeries<V>& t) {
  return LaurentSeries<V>::multiply(s, t, LaurentSeries<V>::kNoDegree);
}

// Product kept only through `cap` (or less, if the operands cannot support it).
template <class V>
LaurentSeries<V> mul_capped(const LaurentSeries<V>& s, const LaurentSeries<V>& t, int cap) {
  return LaurentSeries<V>::multiply(s, t, cap);
}

// ---- strict arithmetic ------------------------------------------------------

namespace detail {
template <class V>
void require_same_trunc(const LaurentSeries<V>& s, const LaurentSeries<V>& t, const char* op) {
  if (s.trunc() != t.trunc())
    throw TruncationMismatch(std::string(op) + ": truncations differ (" + std::to_string(s.trunc()) +
                             " vs " + std::to_string(t.trunc()) + ")");
}
}  // namespace detail

template <class V>
LaurentSeries<V> add(const LaurentSeries<V>& s, const LaurentSeries<V>& t) {
  detail::require_same_trunc(s, t, "add");
  return (s + t).retruncate(s.trunc());
}

template <class V>
LaurentSeries<V> sub(const LaurentSeries<V>& s, const LaurentSeries<V>& t) {
  detail::require_same_trunc(s, t, "sub");
  return (s - t).retruncate(s.trunc());
}

template <class V>
LaurentSeries<V> negate(const LaurentSeries<V>& s) {
  return s.negated();
}

template <class V>
LaurentSeries<V> mul(const LaurentSeries<V>& s, const LaurentSeries<V>& t) {
  detail::require_same_trunc(s, t, "mul");
  auto r = mul_capped(s, t, s.trunc());
  if (r.trunc() < s.trunc())
    throw PrecisionLoss("mul: product exact only through degree " + std::to_string(r.trunc()) +
                        ", operands truncated at " + std::to_string(s.trunc()));
  return r.retruncate(s.trunc());
}

template <class V>
LaurentSeries<V> retruncate(const LaurentSeries<V>& s, int bound) {
  return s.retruncate(bound);
}

// Multiplicative inverse of a series whose constant term is +1 or -1 and whose
// other terms all have positive degree. Exact through s.trunc().
template <class V>
LaurentSeries<V> invert_unit(const LaurentSeries<V>& s) {
  using S = LaurentSeries<V>;
  using Exps = typename S::Exps;
  const BigInt c0 = s.constant_term();
  if (c0 != 1 && c0 != -1)
    throw NotAUnit("invert_unit: constant term must be +1 or -1");
  const int trunc = s.trunc();
  if (trunc < 0) return S(trunc);
  // Tail grouped by degree.
  std::vector<std::vector<typename S::Term>> tail(static_cast<std::size_t>(trunc) + 1);
  for (const auto& t : s.terms()) {
    if (t.exps == Exps{}) continue;
    const int deg = S::degree(t.exps);
    if (deg <= 0) throw NonPositiveTail("invert_unit: non-constant term of degree <= 0");
    tail[static_cast<std::size_t>(deg)].push_back(t);
  }
  // Degree-k slice of the inverse: -c0 * sum_{j>=1} tail_j * inv_{k-j}.
  std::vector<std::vector<typename S::Term>> inv(static_cast<std::size_t>(trunc) + 1);
  inv[0].push_back({Exps{}, c0});
  std::vector<typename S::Term> all{{Exps{}, c0}};
  std::unordered_map<Exps, BigInt, detail::ExponentHash<V::kCount>> acc;
  for (int k = 1; k <= trunc; ++k) {
    acc.clear();
    for (int j = 1; j <= k; ++j) {
      for (const auto& a : tail[static_cast<std::size_t>(j)])
        for (const auto& b : inv[static_cast<std::size_t>(k - j)]) {
          auto& slot = acc[a.exps + b.exps];
          mpz_addmul(slot.get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
        }
    }
    for (auto& [e, c] : acc) {
      if (c == 0) continue;
      BigInt v = c0 == 1 ? BigInt(-c) : c;
      inv[static_cast<std::size_t>(k)].push_back({e, v});
      all.push_back({e, std::move(v)});
    }
  }
  auto r = S::from_terms(std::move(all), trunc);
  const bool exact_constant = s.complete() && s.size() == 1;
  return exact_constant ? r : r.as_incomplete();
}

// ---- comparison -------------------------------------------------------------

template <class V>
struct Discrepancy {
  Exponents<V> exps{};
  int degree = 0;
  BigInt lhs;
  BigInt rhs;
};

template <class V>
struct Comparison {
  bool equal = true;
  std::optional<Discrepancy<V>> first;  // lowest-degree differing monomial
};

// Exact comparison of two series at equal truncation.
template <class V>
Comparison<V> equal_to(const LaurentSeries<V>& s, const LaurentSeries<V>& t) {
  using S = LaurentSeries<V>;
  detail::require_same_trunc(s, t, "equal_to");
  auto i = s.terms().begin();
  auto j = t.terms().begin();
  while (i != s.terms().end() || j != t.terms().end()) {
    Discrepancy<V> d;
    if (j == t.terms().end() || (i != s.terms().end() && S::canonical_less(i->exps, j->exps))) {
      d = {i->exps, S::degree(i->exps), i->coeff, 0};
    } else if (i == s.terms().end() || S::canonical_less(j->exps, i->exps)) {
      d = {j->exps, S::degree(j->exps), 0, j->coeff};
    } else if (i->coeff != j->coeff) {
      d = {i->exps, S::degree(i->exps), i->coeff, j->coeff};
    } else {
      ++i;
      ++j;
      continue;
    }
    return {false, std::move(d)};
  }
  return {};
}

template <class V>
bool operator==(const LaurentSeries<V>& s, const LaurentSeries<V>& t) {
  return s.trunc() == t.trunc() && s.terms() == t.terms();
}

// ---- substitution (a,b,c,d) -> (x,z,q) -----------------------------------

// Image exponents (x, z, q) for each of a, b, c, d.
struct SubstitutionMap {
  std::array<XzqExponents, 4> images{};

  // a -> xzq, b -> zq/x, c -> xq/z, d -> q/(xz): monomial w(λ) becomes
  // x^{o(λ)} z^{a(λ)} q^{|λ|}.
  static SubstitutionMap odd_parts_alternating_sum();
  // a -> zq, b -> q/z, c -> q/z, d -> zq: w(λ) becomes z^{BG(λ)} q^{|λ|}.
  static SubstitutionMap bg_rank();

  XzqExponents image(const ExponentVector& e) const;
};

// Applies the map termwise. Every variable must map to the same positive
// q-exponent g (DomainError otherwise); the image is then exact through
// q-degree g * s.trunc(). Raises PrecisionLoss if trunc_q exceeds that and
// NegativeQDegree if a kept term lands below q^0.
XzqSeries substitute(const Series& s, const SubstitutionMap& map, int trunc_q);

}  // namespace sipq
