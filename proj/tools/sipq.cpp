// sipq: command-line front end for the partition and q-series library.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "sipq/basis_gf.hpp"
#include "sipq/errors.hpp"
#include "sipq/identities.hpp"
#include "sipq/partitions.hpp"
#include "sipq/qseries.hpp"
#include "sipq/series_io.hpp"
#include "sipq/sip.hpp"
#include "sipq/weights.hpp"

namespace {

using nlohmann::json;
using namespace sipq;

constexpr int kSchemaVersion = 1;
constexpr int kDefaultTrunc = 16;

int default_trunc() {
  if (const char* env = std::getenv("SIPQ_TRUNC")) {
    try {
      const int t = std::stoi(env);
      if (t >= 0) return t;
    } catch (const std::exception&) {
    }
    std::cerr << "sipq: ignoring invalid SIPQ_TRUNC='" << env << "'\n";
  }
  return kDefaultTrunc;
}

json envelope(const std::string& command, json params, json results) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"params", std::move(params)},
          {"results", std::move(results)}};
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

json partition_record(const Partition& p) {
  const auto s = stats(p);
  const auto o = omega_exponents(p);
  return {{"partition", p.parts()},
          {"weight", s.weight},
          {"length", s.length},
          {"alt_sum", s.alt_sum},
          {"odd_parts", s.odd_parts},
          {"bg_rank", s.bg_rank},
          {"omega", {{"ea", o.a}, {"eb", o.b}, {"ec", o.c}, {"ed", o.d}}}};
}

// A named unit of `verify --all` work.
struct Task {
  std::string group;
  std::function<CheckReport()> run;
};

std::vector<Task> full_suite(int trunc) {
  std::vector<Task> tasks;
  for (const auto& spec : registry())
    tasks.push_back({"identity", [id = spec.id, trunc] { return verify(id, trunc); }});

  const int table_max = std::min(trunc, 20);
  const int weight_max = std::min(trunc, 18);
  for (auto basis : {PartitionClass::kBasisG1, PartitionClass::kBasisG2, PartitionClass::kBasisP1,
                     PartitionClass::kBasisP2})
    tasks.push_back({"tables", [=] { return cross_check_tables(basis, table_max, table_max); }});
  for (auto c : {PartitionClass::kG1, PartitionClass::kG2, PartitionClass::kP1, PartitionClass::kP2}) {
    tasks.push_back({"sip", [=] { return verify_sip_property(c, basis_of(c), 2, weight_max); }});
    tasks.push_back({"sip", [=] { return sip_gf_single_variable(c, basis_of(c), 2, trunc); }});
    tasks.push_back({"sip", [=] { return check_sip_gf_four_parameter(c, weight_max); }});
  }

  tasks.push_back({"lemma", [] { return check_qbinomial_recurrences(12); }});
  for (const Monomial& z : {Monomial{1, kExpB}, Monomial{1, kExpB + kExpQ}, Monomial{1, kExpQ - kExpC}}) {
    tasks.push_back({"lemma", [=] {
                       CheckReport r("q-binomial-theorem");
                       for (int n = 0; n <= 8; ++n) r.merge(check_qbinomial_theorem(n, z, trunc));
                       return r;
                     }});
  }
  tasks.push_back({"lemma", [=] { return check_q_gauss(std::nullopt, {-1, kExpB}, {1, kExpA + kExpB}, trunc); }});
  tasks.push_back(
      {"lemma", [=] { return check_q_gauss(std::nullopt, {-1, -1 * kExpC}, {1, kExpA + kExpB}, trunc); }});
  tasks.push_back({"lemma", [=] {
                     return check_q_gauss(Monomial{1, kExpA}, {1, kExpB}, {1, kExpA + kExpB + kExpQ}, trunc);
                   }});

  tasks.push_back({"telescoping", [=] { return verify_partial_sums(PartialSumFamily::kP1, 8, trunc); }});
  tasks.push_back({"telescoping", [=] { return verify_partial_sums(PartialSumFamily::kP2, 8, trunc); }});
  tasks.push_back({"statistics", [=] { return verify_substitution_consistency(MapId::kXzq, trunc); }});
  tasks.push_back({"statistics", [=] { return verify_substitution_consistency(MapId::kBg, trunc); }});
  tasks.push_back({"statistics", [=] { return check_statistics(trunc); }});
  return tasks;
}

// Runs the tasks concurrently; results keep the task order.
std::vector<json> run_tasks(const std::vector<Task>& tasks, bool timing, bool& all_passed) {
  using clock = std::chrono::steady_clock;
  std::vector<std::future<json>> futures;
  futures.reserve(tasks.size());
  for (const auto& task : tasks) {
    futures.push_back(std::async(std::launch::async, [&task, timing] {
      const auto start = clock::now();
      json out;
      try {
        const CheckReport r = task.run();
        out = r.to_json();
      } catch (const Error& e) {
        out = {{"status", "fail"}, {"error", e.what()}};
      }
      out["group"] = task.group;
      if (timing)
        out["seconds"] = std::chrono::duration<double>(clock::now() - start).count();
      return out;
    }));
  }
  std::vector<json> results;
  all_passed = true;
  for (auto& f : futures) {
    results.push_back(f.get());
    all_passed = all_passed && results.back().value("status", "fail") == "pass";
  }
  return results;
}

struct Options {
  std::string format = "json";
  // enumerate / decompose
  std::string cls;
  int weight = 0;
  std::string partition;
  // series
  std::string spec;
  std::string side;
  int trunc = 0;
  // table
  std::string basis;
  std::string method;
  int n_max = 0;
  int h_max = 0;
  // verify
  std::string id;
  bool all = false;
  bool timing = false;
};

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_enumerate(const Options& o) {
  const auto c = parse_partition_class(o.cls);
  const auto parts = enumerate(c, o.weight);
  if (o.format == "csv") {
    std::cout << "partition,weight,length,alt_sum,odd_parts,bg_rank,ea,eb,ec,ed\n";
    for (const auto& p : parts) {
      const auto s = stats(p);
      const auto w = omega_exponents(p);
      std::cout << csv_quote(to_string(p)) << ',' << s.weight << ',' << s.length << ',' << s.alt_sum << ','
                << s.odd_parts << ',' << s.bg_rank << ',' << w.a << ',' << w.b << ',' << w.c << ',' << w.d
                << '\n';
    }
    return 0;
  }
  json results = json::array();
  for (const auto& p : parts) results.push_back(partition_record(p));
  print_json(envelope("enumerate", {{"class", to_string(c)}, {"weight", o.weight}}, std::move(results)));
  return 0;
}

int cmd_decompose(const Options& o) {
  const auto c = parse_partition_class(o.cls);
  const auto lambda = parse_partition(o.partition);
  const auto d = decompose(c, lambda);
  if (o.format == "csv") {
    std::cout << "lambda,beta,mu\n"
              << csv_quote(to_string(lambda)) << ',' << csv_quote(to_string(d.beta)) << ','
              << csv_quote(to_string(d.mu)) << '\n';
    return 0;
  }
  print_json(envelope("decompose", {{"class", to_string(c)}, {"partition", lambda.parts()}},
                      {{"lambda", lambda.parts()}, {"beta", d.beta.parts()}, {"mu", d.mu.parts()}}));
  return 0;
}

int cmd_series(const Options& o) {
  const auto& spec = find_spec(o.spec);
  const auto s = expand_side(spec, o.side, o.trunc);
  if (o.format == "csv") {
    std::cout << "spec,side,trunc,series\n"
              << spec.id << ',' << o.side << ',' << o.trunc << ',' << csv_quote(series_text(s)) << '\n';
    return 0;
  }
  print_json(envelope("series", {{"spec", spec.id}, {"side", o.side}, {"trunc", o.trunc}},
                      {{"text", series_text(s)}, {"terms", series_json(s)}}));
  return 0;
}

int cmd_table(const Options& o) {
  auto basis = parse_partition_class(o.basis);
  if (!is_basis(basis)) basis = basis_of(basis);
  const auto method = parse_method(o.method);
  const bool csv = o.format == "csv";
  json results = json::array();
  if (csv) std::cout << "class,method,n,h,polynomial\n";
  for (int n = 0; n <= o.n_max; ++n) {
    for (int h = 0; h <= o.h_max; ++h) {
      const Series s = table_entry(basis, method, n, h);
      if (csv) {
        std::cout << to_string(basis) << ',' << to_string(method) << ',' << n << ',' << h << ','
                  << csv_quote(to_text(s)) << '\n';
      } else {
        results.push_back({{"n", n}, {"h", h}, {"text", to_text(s)}, {"terms", to_json(s)}});
      }
    }
  }
  if (!csv)
    print_json(envelope("table",
                        {{"basis", to_string(basis)}, {"method", to_string(method)}, {"n_max", o.n_max},
                         {"h_max", o.h_max}},
                        std::move(results)));
  return 0;
}

int cmd_verify(const Options& o) {
  std::vector<Task> tasks;
  if (o.all) {
    tasks = full_suite(o.trunc);
  } else {
    const std::string id = find_spec(o.id).id;
    tasks.push_back({"identity", [id, t = o.trunc] { return verify(id, t); }});
  }
  bool ok = false;
  auto results = run_tasks(tasks, o.timing, ok);
  if (o.format == "csv") {
    std::cout << "group,name,status,checks,failure_count\n";
    for (const auto& r : results)
      std::cout << r.value("group", "") << ',' << r.value("name", "") << ',' << r.value("status", "fail") << ','
                << r.value("checks", 0) << ',' << r.value("failure_count", 0) << '\n';
  } else {
    json params = {{"trunc", o.trunc}};
    params[o.all ? "all" : "id"] = o.all ? json(true) : json(o.id);
    print_json(envelope("verify", std::move(params), std::move(results)));
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition classes, four-parameter weights and q-series identity checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  o.trunc = default_trunc();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List members of a class with a given weight");
  enumerate_cmd->add_option("--class", o.cls, "Class tag (all, strict, g1, g2, p1, p2, basis-g1, ...)")->required();
  enumerate_cmd->add_option("--weight", o.weight, "Weight")->required()->check(CLI::NonNegativeNumber);

  auto* decompose_cmd = app.add_subcommand("decompose", "Split a class member into basis and even parts");
  decompose_cmd->add_option("--class", o.cls, "g1, g2, p1 or p2")->required();
  decompose_cmd->add_option("--partition", o.partition, "Comma-separated parts, e.g. 11,8,7,4")->required();

  auto* series_cmd = app.add_subcommand("series", "Expand one side of a registered identity");
  series_cmd->add_option("--spec", o.spec, "Identity id")->required();
  series_cmd->add_option("--side", o.side, "Side name")->required();
  series_cmd->add_option("--trunc", o.trunc, "Truncation degree")->check(CLI::NonNegativeNumber);

  auto* table_cmd = app.add_subcommand("table", "Basis generating polynomials B(n, h)");
  table_cmd->add_option("--basis", o.basis, "g1, g2, p1, p2 or basis-*")->required();
  table_cmd->add_option("--method", o.method, "enumerated, recurrence or closed-form")->required();
  table_cmd->add_option("--n-max", o.n_max, "Largest length")->required()->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--h-max", o.h_max, "Largest part")->required()->check(CLI::NonNegativeNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Verify identities");
  auto* id_opt = verify_cmd->add_option("id", o.id, "Identity id");
  auto* all_flag = verify_cmd->add_flag("--all", o.all, "Every identity plus the supporting checks");
  id_opt->excludes(all_flag);
  verify_cmd->add_option("--trunc", o.trunc, "Truncation degree")->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--timing", o.timing, "Include wall time per report (not reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (verify_cmd->parsed() && !o.all && o.id.empty()) {
    std::cerr << "sipq: verify needs an identity id or --all\n";
    return 2;
  }

  try {
    if (enumerate_cmd->parsed()) return cmd_enumerate(o);
    if (decompose_cmd->parsed()) return cmd_decompose(o);
    if (series_cmd->parsed()) return cmd_series(o);
    if (table_cmd->parsed()) return cmd_table(o);
    if (verify_cmd->parsed()) return cmd_verify(o);
  } catch (const ParseError& e) {
    std::cerr << "sipq: " << e.what() << '\n';
    return 2;
  } catch (const UnknownTheorem& e) {
    std::cerr << "sipq: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "sipq: " << e.what() << '\n';
    return 2;
  } catch (const NotInClass& e) {
    std::cerr << "sipq: " << e.what() << '\n';
    return 2;
  } catch (const InvalidPartition& e) {
    std::cerr << "sipq: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "sipq: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
