#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace sipq {

// Outcome of a verification routine: a pass/fail verdict, the number of
// individual assertions evaluated, and a bounded list of failure records.
class CheckReport {
 public:
  static constexpr std::size_t kMaxRecordedFailures = 20;

  explicit CheckReport(std::string name = {}) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  bool passed() const { return failure_count_ == 0; }
  std::int64_t checks() const { return checks_; }
  std::int64_t failure_count() const { return failure_count_; }
  const std::vector<nlohmann::json>& failures() const { return failures_; }
  nlohmann::json& info() { return info_; }
  const nlohmann::json& info() const { return info_; }

  void pass() { ++checks_; }
  void fail(nlohmann::json detail);
  // Counts one assertion; records `detail()` only when `ok` is false.
  template <class Describe>
  bool expect(bool ok, Describe&& detail) {
    if (ok) {
      pass();
    } else {
      fail(detail());
    }
    return ok;
  }

  // Folds another report's counts and failures into this one. Failure
  // records are tagged with the sub-report's name.
  void merge(const CheckReport& other);

  nlohmann::json to_json() const;

 private:
  std::string name_;
  std::int64_t checks_ = 0;
  std::int64_t failure_count_ = 0;
  std::vector<nlohmann::json> failures_;
  nlohmann::json info_ = nlohmann::json::object();
};

}  // namespace sipq
