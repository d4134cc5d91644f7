// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sipq/basis_gf.hpp"
#include "sipq/identities.hpp"
#include "sipq/qseries.hpp"
#include "sipq/series_io.hpp"
#include "sipq/sip.hpp"

#ifndef SIPQ_BIN
#error "SIPQ_BIN must name the sipq executable"
#endif

using namespace sipq;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Accumulates sub-checks for one criterion.
struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(const CheckReport& r) {
    if (!r.passed()) {
      ok = false;
      detail << " [" << r.name() << ": " << r.failure_count() << " failures; first "
             << (r.failures().empty() ? std::string("-") : r.failures().front().dump()) << "]";
    }
  }
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [" << what << "]";
    }
  }
};

CheckReport guarded(const std::function<CheckReport()>& f, const std::string& name) {
  try {
    return f();
  } catch (const std::exception& e) {
    CheckReport r(name);
    r.fail({{"error", e.what()}});
    return r;
  }
}

Outcome ac1() {
  Outcome o;
  const auto start = Clock::now();
  for (const char* id : {"g1-four", "g2-four", "p1-four", "p2-four"})
    o.require(guarded([&] { return verify(id, 24); }, id));
  const double t = seconds_since(start);
  o.require(t < 60.0, "took " + std::to_string(t) + " s");
  o.detail << " degree 24, " << t << " s";
  return o;
}

Outcome ac2() {
  Outcome o;
  o.require(guarded([] { return verify("boulet-p", 20); }, "boulet-p"));
  o.require(guarded([] { return verify("andrews-xzq", 20); }, "andrews-xzq"));
  try {
    const auto s = std::get<Series>(expand_side(find_spec("boulet-p"), "product", 20));
    const Series slice = Series::from_terms(s.slice(4), 4);
    const Series expected = Series::from_terms({{2 * kExpA + 2 * kExpB, 1},
                                                {2 * kExpA + kExpB + kExpC, 2},
                                                {2 * kExpA + 2 * kExpC, 1},
                                                {kExpQ, 1}},
                                               4);
    o.require(slice == expected, "degree-4 slice is " + to_text(slice));
    const auto c = std::get<Series>(expand_side(find_spec("boulet-p"), "combinatorial", 4));
    o.require(Series::from_terms(c.slice(4), 4) == expected, "combinatorial degree-4 slice");
  } catch (const std::exception& e) {
    o.require(false, e.what());
  }
  return o;
}

Outcome ac3() {
  Outcome o;
  for (const char* id : {"savage-sills-g1", "savage-sills-g2", "altsum-g1", "altsum-g2", "xzq-g1", "xzq-g2", "xzq-p1",
                         "xzq-p2", "bg-g1", "bg-g2", "bg-p1", "bg-p2"}) {
    o.require(guarded([&] { return verify(id, 24); }, id));
  }
  for (const char* id : {"altsum-g1", "altsum-g2"}) {
    bool has_rewrite = false;
    for (const auto& side : find_spec(id).sides) has_rewrite = has_rewrite || side.kind == SideKind::kRewrite;
    o.require(has_rewrite, std::string(id) + " lacks the product rewrite");
  }
  return o;
}

Outcome ac4() {
  Outcome o;
  for (auto basis : kBases) o.require(guarded([&] { return cross_check_tables(basis, 20, 20); }, to_string(basis)));
  return o;
}

Outcome ac5() {
  Outcome o;
  for (auto c : kSipClasses)
    o.require(guarded([&] { return verify_sip_property(c, basis_of(c), 2, 18); }, to_string(c)));
  return o;
}

Outcome ac6() {
  Outcome o;
  for (auto c : kSipClasses) {
    o.require(guarded([&] { return sip_gf_single_variable(c, basis_of(c), 2, 20); }, to_string(c)));
    o.require(guarded([&] { return check_sip_gf_four_parameter(c, 18); }, to_string(c)));
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  o.require(guarded([] { return verify_partial_sums(PartialSumFamily::kP1, 8, 32); }, "p1"));
  o.require(guarded([] { return verify_partial_sums(PartialSumFamily::kP2, 8, 32); }, "p2"));
  return o;
}

Outcome ac8() {
  Outcome o;
  o.require(guarded([] { return check_qbinomial_recurrences(12); }, "q-binomial"));
  for (const Monomial& z : {Monomial{1, kExpB + kExpQ}, Monomial{1, kExpQ - kExpC}, Monomial{1, kExpA + kExpQ}})
    for (int n = 0; n <= 8; ++n) o.require(guarded([&] { return check_qbinomial_theorem(n, z, 24); }, "theorem"));
  o.require(guarded([] { return check_q_gauss(std::nullopt, {-1, kExpB}, {1, kExpA + kExpB}, 24); }, "gauss-1"));
  o.require(
      guarded([] { return check_q_gauss(std::nullopt, {-1, -1 * kExpC}, {1, kExpA + kExpB}, 24); }, "gauss-2"));
  o.require(guarded([] { return check_q_gauss(Monomial{1, kExpA}, {1, kExpB}, {1, kExpA + kExpB + kExpQ}, 24); },
                    "gauss-generic"));
  return o;
}

Outcome ac9() {
  Outcome o;
  o.require(guarded([] { return check_statistics(20); }, "statistics"));
  o.require(guarded([] { return verify_substitution_consistency(MapId::kXzq, 20); }, "xzq-map"));
  o.require(guarded([] { return verify_substitution_consistency(MapId::kBg, 20); }, "bg-map"));
  return o;
}

std::pair<int, std::string> capture(const std::string& args) {
  const std::string cmd = std::string(SIPQ_BIN) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, out};
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome ac10() {
  Outcome o;
  const auto start = Clock::now();
  const auto [code_a, out_a] = capture("verify --all --trunc 16");
  const auto [code_b, out_b] = capture("verify --all --trunc 16");
  const double t = seconds_since(start);
  o.require(code_a == 0 && code_b == 0, "exit codes " + std::to_string(code_a) + ", " + std::to_string(code_b));
  o.require(!out_a.empty() && out_a == out_b, "reports differ");
  o.require(t < 300.0, "took " + std::to_string(t) + " s");
  o.detail << " two runs, " << out_a.size() << " bytes each, " << t << " s";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 four-parameter identities to degree 24", ac1},
      {"AC2 Boulet and Andrews to degree 20, degree-4 slice", ac2},
      {"AC3 two-variable and three-variable identities to q-degree 24", ac3},
      {"AC4 basis tables agree for n, h <= 20", ac4},
      {"AC5 SIP property for weight <= 18", ac5},
      {"AC6 SIP generating functions", ac6},
      {"AC7 telescoping partial sums", ac7},
      {"AC8 q-binomial and q-Gauss lemmas", ac8},
      {"AC9 statistics layer for weight <= 20", ac9},
      {"AC10 deterministic verify --all", ac10},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = Clock::now();
    Outcome o = run();
    failed += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << " (" << seconds_since(start) << " s)" << o.detail.str()
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
