#include "sipq/report.hpp"

namespace sipq {

void CheckReport::fail(nlohmann::json detail) {
  ++checks_;
  ++failure_count_;
  if (failures_.size() < kMaxRecordedFailures) failures_.push_back(std::move(detail));
}

void CheckReport::merge(const CheckReport& other) {
  checks_ += other.checks_;
  failure_count_ += other.failure_count_;
  for (const auto& f : other.failures_) {
    if (failures_.size() >= kMaxRecordedFailures) break;
    failures_.push_back({{"check", other.name_}, {"detail", f}});
  }
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json out = {{"name", name_},
                        {"status", passed() ? "pass" : "fail"},
                        {"checks", checks_},
                        {"failure_count", failure_count_}};
  if (!info_.empty()) out["info"] = info_;
  if (!failures_.empty()) out["failures"] = failures_;
  return out;
}

}  // namespace sipq
