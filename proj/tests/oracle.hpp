#pragma once

// Independent reference implementations used only by the tests: a plain
// recursive partition generator, class predicates written out from their
// definitions, the Ferrers-diagram fill for the four-parameter weight, and
// dense univariate power series with machine integers.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;

inline void partitions_rec(int rest, int cap, Parts& cur, std::vector<Parts>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(rest, cap); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(rest - p, p, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Parts> partitions(int n) {
  std::vector<Parts> out;
  Parts cur;
  partitions_rec(n, n, cur, out);
  return out;
}

inline bool strict(const Parts& p) {
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] == p[i - 1]) return false;
  return true;
}

// Parts at 1-based positions with the given parity are all even.
inline bool positions_even(const Parts& p, int parity) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (static_cast<int>((i + 1) % 2) == parity && p[i] % 2 != 0) return false;
  return true;
}

inline bool in_g1(const Parts& p) { return strict(p) && positions_even(p, 0); }
inline bool in_g2(const Parts& p) { return strict(p) && positions_even(p, 1); }
inline bool in_p1(const Parts& p) { return positions_even(p, 0); }
inline bool in_p2(const Parts& p) { return positions_even(p, 1); }

// Fill the Ferrers diagram row by row: odd rows read a b a b ..., even rows
// read c d c d ...
inline std::array<int, 4> omega_fill(const Parts& p) {
  std::array<int, 4> e{};
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) ++e[(i % 2 == 0 ? 0 : 2) + (j % 2)];
  return e;
}

inline int odd_parts(const Parts& p) {
  int n = 0;
  for (int x : p) n += x % 2;
  return n;
}

inline int alt_sum(const Parts& p) {
  int s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += i % 2 == 0 ? p[i] : -p[i];
  return s;
}

inline int bg_rank(const Parts& p) {
  int s = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] % 2 != 0) s += i % 2 == 0 ? 1 : -1;
  return s;
}

// Dense series in q through degree N.
struct Dense {
  std::vector<std::int64_t> c;
  explicit Dense(int n, std::int64_t c0 = 1) : c(static_cast<std::size_t>(n) + 1, 0) { c[0] = c0; }
  int n() const { return static_cast<int>(c.size()) - 1; }
};

inline Dense times(const Dense& x, const Dense& y) {
  Dense r(x.n(), 0);
  for (int i = 0; i <= x.n(); ++i)
    for (int j = 0; i + j <= x.n(); ++j) r.c[static_cast<std::size_t>(i + j)] += x.c[i] * y.c[j];
  return r;
}

// Multiply by (1 + s q^k), s = +-1.
inline void times_binomial(Dense& x, int k, int s) {
  for (int i = x.n(); i >= k; --i) x.c[static_cast<std::size_t>(i)] += s * x.c[static_cast<std::size_t>(i - k)];
}

// Divide by (1 - q^k).
inline void divide_geometric(Dense& x, int k) {
  for (int i = k; i <= x.n(); ++i) x.c[static_cast<std::size_t>(i)] += x.c[static_cast<std::size_t>(i - k)];
}

// Number of partitions of each weight <= n satisfying `keep`.
inline std::vector<std::int64_t> count_by_weight(int n, const std::function<bool(const Parts&)>& keep) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(n) + 1, 0);
  for (int w = 0; w <= n; ++w)
    for (const auto& p : partitions(w))
      if (keep(p)) ++out[static_cast<std::size_t>(w)];
  return out;
}

// Gaussian binomial [n, m]_q as coefficient list: partitions in an m x (n-m) box.
inline std::vector<std::int64_t> gaussian_by_box(int n, int m) {
  if (m < 0 || m > n) return {};
  const int width = n - m;
  std::vector<std::int64_t> out(static_cast<std::size_t>(m * width) + 1, 0);
  for (int w = 0; w <= m * width; ++w)
    for (const auto& p : partitions(w))
      if (static_cast<int>(p.size()) <= m && (p.empty() || p[0] <= width)) ++out[static_cast<std::size_t>(w)];
  return out;
}

}  // namespace oracle
