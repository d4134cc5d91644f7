#include "sipq/basis_gf.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "sipq/qseries.hpp"
#include "sipq/series_io.hpp"
#include "sipq/weights.hpp"

namespace sipq {

namespace {

constexpr int c2(int k) { return k * (k - 1) / 2; }

// Complete monomial coeff * a^e0 b^e1 c^e2 d^e3.
Series mono(const BigInt& coeff, const ExponentVector& e) {
  return Series::monomial(coeff, e, std::max(0, Series::degree(e)));
}

Series mono(const ExponentVector& e) { return mono(1, e); }

ExponentVector abcd(int a, int b, int c, int d) { return {a, b, c, d}; }

Series one_plus(const ExponentVector& e) { return Series::one(0) + mono(e); }

void require_basis(PartitionClass basis) {
  if (!is_basis(basis)) throw DomainError("'" + to_string(basis) + "' is not a basis tag");
}

// Values for lengths 0, 1 and 2, or nullopt for longer partitions.
std::optional<Series> seed(PartitionClass basis, int n, int h) {
  if (n == 0) return h == 0 ? Series::one(0) : Series(0);
  const ExponentVector q = kExpQ;
  if (n == 1) {
    switch (basis) {
      case PartitionClass::kBasisG1:
      case PartitionClass::kBasisP1:
        if (h == 1) return mono(kExpA);
        if (h == 2) return mono(kExpA + kExpB);
        return Series(0);
      default:
        return h == 2 ? mono(kExpA + kExpB) : Series(0);
    }
  }
  if (n == 2) {
    switch (basis) {
      case PartitionClass::kBasisG1:
        if (h == 3) return mono(kExpA + q);  // (3,2)
        if (h == 4) return mono(kExpA + kExpB + q);  // (4,2)
        return Series(0);
      case PartitionClass::kBasisG2:
        if (h == 2) return mono(kExpA + kExpB + kExpC);  // (2,1)
        if (h == 4) return mono(kExpA + kExpB + q);  // (4,2)
        return Series(0);
      case PartitionClass::kBasisP1:
        if (h == 2) return mono(q);  // (2,2)
        if (h == 3) return mono(kExpA + q);  // (3,2)
        return Series(0);
      case PartitionClass::kBasisP2:
        if (h == 2) return mono(q) + mono(kExpA + kExpB + kExpC);  // (2,2), (2,1)
        return Series(0);
      default:
        break;
    }
  }
  return std::nullopt;
}

class RecurrenceMemo {
 public:
  Series get(PartitionClass basis, int n, int h) {
    std::lock_guard<std::mutex> lock(mutex_);
    return get_locked(basis, n, h);
  }

 private:
  Series get_locked(PartitionClass basis, int n, int h) {
    if (n < 0 || h < 0) return Series(0);
    if (auto s = seed(basis, n, h)) return *s;
    auto key = std::make_tuple(basis, n, h);
    if (auto it = table_.find(key); it != table_.end()) return it->second;
    Series value = compute(basis, n, h);
    table_.emplace(key, value);
    return value;
  }

  Series compute(PartitionClass basis, int n, int h) {
    if (h == 0) return Series(0);
    const int big_h = (h + 1) / 2;  // h = 2H or 2H - 1
    const ExponentVector qh1 = (big_h - 1) * kExpQ;
    const ExponentVector qh = big_h * kExpQ;
    auto at = [&](int nn, int hh) { return get_locked(basis, nn, hh); };
    switch (basis) {
      case PartitionClass::kBasisG1:
        if (h % 2 == 0) return mono(kExpB) * at(n, h - 1);
        return mono(kExpA + qh1) * at(n - 2, h - 2) + mono(kExpA + kExpB + qh1) * at(n - 2, h - 4);
      case PartitionClass::kBasisG2:
        if (h % 2 == 1) return Series(0);
        return mono(kExpA + kExpB + kExpC + qh1) * at(n - 2, h - 2) + mono(kExpA + kExpB + qh1) * at(n - 2, h - 4);
      case PartitionClass::kBasisP1:
        if (h % 2 == 1) return mono(kExpA) * at(n, h - 1);
        return mono(qh) * at(n - 2, h) + mono(qh) * at(n - 2, h - 1);
      case PartitionClass::kBasisP2:
        if (h % 2 == 1) return Series(0);
        return mono(qh) * at(n - 2, h) + mono(qh - kExpD) * at(n - 2, h - 2);
      default:
        throw DomainError("'" + to_string(basis) + "' is not a basis tag");
    }
  }

  std::mutex mutex_;
  std::map<std::tuple<PartitionClass, int, int>, Series> table_;
};

RecurrenceMemo& recurrence_memo() {
  static RecurrenceMemo memo;
  return memo;
}

Series closed_form(PartitionClass basis, int len, int largest) {
  if (len == 0 || (basis == PartitionClass::kBasisP1 && len == 1)) return *seed(basis, len, largest);
  if (largest <= 0) return Series(0);
  const bool len_odd = len % 2 == 1;
  const bool top_odd = largest % 2 == 1;
  switch (basis) {
    case PartitionClass::kBasisG1: {
      const int n = len_odd ? (len + 1) / 2 : len / 2;
      const int h = (largest + 1) / 2;
      if (len_odd) {
        // (2n-1, 2h-1) and (2n-1, 2h)
        const int b = top_odd ? h - n : h - n + 1;
        return mono((c2(n) + c2(h - n + 1)) * kExpQ + abcd(n, b, 0, 0)) * qbinomial_poly(n - 1, h - n);
      }
      // (2n, 2h-1) and (2n, 2h)
      const int b = top_odd ? h - n - 1 : h - n;
      return mono((c2(n + 1) + c2(h - n)) * kExpQ + abcd(n, b, 0, 0)) * qbinomial_poly(n - 1, h - n - 1);
    }
    case PartitionClass::kBasisG2: {
      if (top_odd) return Series(0);
      const int h = largest / 2;
      if (len_odd) {
        const int n = (len + 1) / 2;  // (2n-1, 2h)
        return mono((c2(n + 1) + c2(h - n + 1)) * kExpQ + abcd(0, 0, n - h - 1, -n)) *
               qbinomial_poly(n - 1, h - n);
      }
      const int n = len / 2;  // (2n, 2h)
      return mono((c2(n + 1) + c2(h - n + 1)) * kExpQ + abcd(0, 0, n - h, -n)) * qbinomial_poly(n, h - n);
    }
    case PartitionClass::kBasisP1: {
      const int h = (largest + 1) / 2;
      const int n = len / 2;  // (2n, ·) or (2n+1, ·)
      const int qexp = (top_odd ? c2(h - 1) : c2(h)) + n;
      const Series& binom = top_odd ? qbinomial_poly(n - 1, h - 2) : qbinomial_poly(n - 1, h - 1);
      if (len_odd) return one_plus(kExpB) * mono(qexp * kExpQ + abcd(h, 0, 0, 0)) * binom;
      return mono(qexp * kExpQ + abcd(h - 1, 0, 0, 0)) * binom;
    }
    case PartitionClass::kBasisP2: {
      if (top_odd) return Series(0);
      const int h = largest / 2;
      if (len_odd) {
        const int n = (len + 1) / 2;  // (2n-1, 2h)
        return mono((c2(h) + n - 1) * kExpQ + abcd(1, 1, 0, 1 - h)) * qbinomial_poly(n - 1, h - 1);
      }
      const int n = len / 2;  // (2n, 2h)
      return one_plus(-1 * kExpD) * mono((c2(h) + n) * kExpQ + abcd(0, 0, 0, 1 - h)) *
             qbinomial_poly(n - 1, h - 1);
    }
    default:
      throw DomainError("'" + to_string(basis) + "' is not a basis tag");
  }
}

bool nonnegative_exponents(const Series& s) {
  for (const auto& t : s.terms())
    for (int e : t.exps)
      if (e < 0) return false;
  return true;
}

nlohmann::json entry_label(int n, int h) { return {{"n", n}, {"h", h}}; }

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::kEnumerated: return "enumerated";
    case Method::kRecurrence: return "recurrence";
    case Method::kClosedForm: return "closed-form";
  }
  return "unknown";
}

Method parse_method(std::string_view text) {
  for (Method m : kMethods)
    if (to_string(m) == text) return m;
  throw ParseError("unknown table method '" + std::string(text) + "'");
}

int table_entry_trunc(int n, int h) { return std::max(n, 0) * std::max(h, 0); }

Series table_enumerated(PartitionClass basis, int n, int h) {
  require_basis(basis);
  return omega_sum(enumerate_basis_by_shape(basis, n, h), table_entry_trunc(n, h));
}

Series table_recurrence(PartitionClass basis, int n, int h) {
  require_basis(basis);
  return recurrence_memo().get(basis, n, h).retruncate(table_entry_trunc(n, h));
}

Series table_closed_form(PartitionClass basis, int n, int h) {
  require_basis(basis);
  if (n < 0 || h < 0) return Series(0);
  return closed_form(basis, n, h).retruncate(table_entry_trunc(n, h));
}

Series table_entry(PartitionClass basis, Method method, int n, int h) {
  switch (method) {
    case Method::kEnumerated: return table_enumerated(basis, n, h);
    case Method::kRecurrence: return table_recurrence(basis, n, h);
    case Method::kClosedForm: return table_closed_form(basis, n, h);
  }
  throw DomainError("unknown table method");
}

CheckReport cross_check_tables(PartitionClass basis, int n_max, int h_max) {
  require_basis(basis);
  CheckReport report("basis-tables-" + to_string(basis));
  report.info() = {{"basis", to_string(basis)}, {"n_max", n_max}, {"h_max", h_max}};
  const bool even_only = basis == PartitionClass::kBasisG2 || basis == PartitionClass::kBasisP2;

  std::map<std::pair<int, int>, Series> enumerated;
  for (int n = 0; n <= n_max; ++n) {
    for (int h = 0; h <= h_max; ++h) {
      const Series e = table_enumerated(basis, n, h);
      enumerated.emplace(std::make_pair(n, h), e);
      for (Method m : {Method::kRecurrence, Method::kClosedForm}) {
        const Series other = table_entry(basis, m, n, h);
        const auto cmp = equal_to(e, other);
        report.expect(cmp.equal && other.complete(), [&] {
          nlohmann::json j = {{"check", "enumerated = " + to_string(m)}, {"entry", entry_label(n, h)},
                              {"enumerated", to_text(e)}, {"other", to_text(other)},
                              {"complete", other.complete()}};
          if (cmp.first) j["discrepancy"] = discrepancy_json(*cmp.first);
          return j;
        });
        report.expect(nonnegative_exponents(other), [&] {
          return nlohmann::json{{"check", "nonnegative exponents (" + to_string(m) + ")"},
                                {"entry", entry_label(n, h)}, {"value", to_text(other)}};
        });
      }
      report.expect(nonnegative_exponents(e), [&] {
        return nlohmann::json{{"check", "nonnegative exponents (enumerated)"}, {"entry", entry_label(n, h)}};
      });
      const bool outside = (n == 0 && h != 0) || (n > 0 && (h == 0 || h > 2 * n)) || (even_only && h % 2 == 1);
      if (outside)
        report.expect(e.is_zero(), [&] {
          return nlohmann::json{{"check", "zero outside support"}, {"entry", entry_label(n, h)}};
        });
      if (n == 0 && h == 0)
        report.expect(e == Series::one(0), [&] { return nlohmann::json{{"check", "B(0,0) = 1"}}; });
    }
  }

  // The stated recurrences where they hold, applied to the enumerated table.
  auto at = [&](int n, int h) {
    auto it = enumerated.find({n, h});
    return it == enumerated.end() ? Series(0) : it->second;
  };
  auto expect_equal = [&](const char* name, int n, int h, const Series& lhs, const Series& rhs) {
    const int t = table_entry_trunc(n, h);
    const auto cmp = equal_to(lhs.retruncate(t), rhs.retruncate(t));
    report.expect(cmp.equal, [&] {
      return nlohmann::json{{"check", name}, {"entry", entry_label(n, h)}, {"lhs", to_text(lhs)},
                            {"rhs", to_text(rhs)}};
    });
  };
  for (int n = 0; n <= n_max; ++n) {
    for (int h = 2; h <= h_max; h += 2) {
      const int big_h = h / 2;
      if (basis == PartitionClass::kBasisG1) expect_equal("even largest part adds b", n, h, at(n, h), mono(kExpB) * at(n, h - 1));
      if (basis == PartitionClass::kBasisP1 && n >= 4)
        expect_equal("combined recurrence", n, h, at(n, h),
                     mono(big_h * kExpQ) * at(n - 2, h) + mono(kExpA + big_h * kExpQ) * at(n - 2, h - 2));
    }
  }
  return report;
}

}  // namespace sipq
