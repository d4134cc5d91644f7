#include "sipq/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "sipq/errors.hpp"

namespace sipq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidPartition("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidPartition("partition parts must be weakly decreasing");
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition{};
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    int value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size())
      throw ParseError("malformed partition literal '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const InvalidPartition& e) {
    throw ParseError("malformed partition literal '" + std::string(text) + "': " + e.what());
  }
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out + ")";
}

namespace {

struct NamedClass {
  PartitionClass tag;
  std::string_view name;
};

constexpr NamedClass kNames[] = {
    {PartitionClass::kAll, "all"},           {PartitionClass::kStrict, "strict"},
    {PartitionClass::kG1, "g1"},             {PartitionClass::kG2, "g2"},
    {PartitionClass::kP1, "p1"},             {PartitionClass::kP2, "p2"},
    {PartitionClass::kBasisG1, "basis-g1"}, {PartitionClass::kBasisG2, "basis-g2"},
    {PartitionClass::kBasisP1, "basis-p1"}, {PartitionClass::kBasisP2, "basis-p2"},
};

enum class Parity { kFree, kEvenIndexedEven, kOddIndexedEven };

// The constraints that define each class, applied part by part from the top.
struct Rules {
  bool strict = false;
  Parity parity = Parity::kFree;
  bool basis = false;
  int gap_lo = 0;  // basis only: gap_lo <= λi - λi+1 <= gap_hi
  int gap_hi = 0;
};

Rules rules_for(PartitionClass c) {
  switch (c) {
    case PartitionClass::kAll: return {};
    case PartitionClass::kStrict: return {.strict = true};
    case PartitionClass::kG1: return {.strict = true, .parity = Parity::kEvenIndexedEven};
    case PartitionClass::kG2: return {.strict = true, .parity = Parity::kOddIndexedEven};
    case PartitionClass::kP1: return {.parity = Parity::kEvenIndexedEven};
    case PartitionClass::kP2: return {.parity = Parity::kOddIndexedEven};
    case PartitionClass::kBasisG1:
      return {.strict = true, .parity = Parity::kEvenIndexedEven, .basis = true, .gap_lo = 1, .gap_hi = 2};
    case PartitionClass::kBasisG2:
      return {.strict = true, .parity = Parity::kOddIndexedEven, .basis = true, .gap_lo = 1, .gap_hi = 2};
    case PartitionClass::kBasisP1:
      return {.parity = Parity::kEvenIndexedEven, .basis = true, .gap_lo = 0, .gap_hi = 1};
    case PartitionClass::kBasisP2:
      return {.parity = Parity::kOddIndexedEven, .basis = true, .gap_lo = 0, .gap_hi = 1};
  }
  return {};
}

// `index` is 1-based.
bool parity_ok(Parity parity, std::size_t index, int part) {
  switch (parity) {
    case Parity::kFree: return true;
    case Parity::kEvenIndexedEven: return index % 2 == 1 || part % 2 == 0;
    case Parity::kOddIndexedEven: return index % 2 == 0 || part % 2 == 0;
  }
  return true;
}

bool last_part_ok(const Rules& rules, int last) { return !rules.basis || last == 1 || last == 2; }

// Depth-first generation of parts in decreasing order; yields partitions in
// lexicographically decreasing order.
class Generator {
 public:
  Generator(const Rules& rules, std::vector<Partition>& out) : rules_(rules), out_(out) {}

  void by_weight(int weight) {
    if (weight == 0) {
      out_.emplace_back();
      return;
    }
    weight_step(weight, weight, 1);
  }

  void by_shape(int length, int largest) {
    if (length == 0) {
      if (largest == 0) out_.emplace_back();
      return;
    }
    if (largest <= 0 || !parity_ok(rules_.parity, 1, largest)) return;
    parts_.push_back(largest);
    shape_step(length);
    parts_.pop_back();
  }

 private:
  void weight_step(int remaining, int max_part, std::size_t index) {
    if (remaining == 0) {
      if (last_part_ok(rules_, parts_.back())) out_.emplace_back(parts_);
      return;
    }
    int hi = std::min(remaining, max_part);
    int lo = 1;
    if (rules_.basis && !parts_.empty()) {
      hi = std::min(hi, parts_.back() - rules_.gap_lo);
      lo = std::max(lo, parts_.back() - rules_.gap_hi);
    }
    for (int part = hi; part >= lo; --part) {
      if (!parity_ok(rules_.parity, index, part)) continue;
      parts_.push_back(part);
      weight_step(remaining - part, rules_.strict ? part - 1 : part, index + 1);
      parts_.pop_back();
    }
  }

  void shape_step(int length) {
    std::size_t index = parts_.size() + 1;
    int prev = parts_.back();
    if (parts_.size() == static_cast<std::size_t>(length)) {
      if (last_part_ok(rules_, prev)) out_.emplace_back(parts_);
      return;
    }
    // Every remaining row can shrink by at most gap_hi and must end at <= 2.
    int rows_left = length - static_cast<int>(parts_.size());
    for (int gap = rules_.gap_lo; gap <= rules_.gap_hi; ++gap) {
      int part = prev - gap;
      if (part <= 0) break;
      if (part - (rows_left - 1) * rules_.gap_hi > 2) continue;
      if (!parity_ok(rules_.parity, index, part)) continue;
      parts_.push_back(part);
      shape_step(length);
      parts_.pop_back();
    }
  }

  const Rules& rules_;
  std::vector<Partition>& out_;
  std::vector<int> parts_;
};

}  // namespace

std::string to_string(PartitionClass c) {
  for (const auto& [tag, name] : kNames)
    if (tag == c) return std::string(name);
  return "unknown";
}

PartitionClass parse_partition_class(std::string_view text) {
  for (const auto& [tag, name] : kNames)
    if (name == text) return tag;
  throw ParseError("unknown partition class '" + std::string(text) + "'");
}

bool is_basis(PartitionClass c) { return rules_for(c).basis; }

PartitionClass basis_of(PartitionClass c) {
  switch (c) {
    case PartitionClass::kG1: return PartitionClass::kBasisG1;
    case PartitionClass::kG2: return PartitionClass::kBasisG2;
    case PartitionClass::kP1: return PartitionClass::kBasisP1;
    case PartitionClass::kP2: return PartitionClass::kBasisP2;
    default: throw DomainError("class '" + to_string(c) + "' has no SIP basis");
  }
}

PartitionClass parent_of(PartitionClass basis) {
  switch (basis) {
    case PartitionClass::kBasisG1: return PartitionClass::kG1;
    case PartitionClass::kBasisG2: return PartitionClass::kG2;
    case PartitionClass::kBasisP1: return PartitionClass::kP1;
    case PartitionClass::kBasisP2: return PartitionClass::kP2;
    default: throw DomainError("'" + to_string(basis) + "' is not a basis tag");
  }
}

PartitionStats stats(const Partition& p) {
  PartitionStats s;
  s.length = static_cast<int>(p.length());
  for (std::size_t i = 1; i <= p.length(); ++i) {
    int part = p.part(i);
    bool odd_index = i % 2 == 1;
    s.weight += part;
    s.alt_sum += odd_index ? part : -part;
    if (part % 2 == 1) {
      ++s.odd_parts;
      s.bg_rank += odd_index ? 1 : -1;
    }
  }
  return s;
}

OmegaExponents omega_exponents(const Partition& p) {
  OmegaExponents w;
  for (std::size_t i = 1; i <= p.length(); ++i) {
    int part = p.part(i);
    int ceil_half = (part + 1) / 2;
    int floor_half = part / 2;
    if (i % 2 == 1) {
      w.a += ceil_half;
      w.b += floor_half;
    } else {
      w.c += ceil_half;
      w.d += floor_half;
    }
  }
  return w;
}

Partition conjugate(const Partition& p) {
  std::vector<int> columns(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++columns[static_cast<std::size_t>(j)];
  return Partition(std::move(columns));
}

bool is_member(PartitionClass c, const Partition& p) {
  const Rules rules = rules_for(c);
  for (std::size_t i = 1; i <= p.length(); ++i) {
    int part = p.part(i);
    if (!parity_ok(rules.parity, i, part)) return false;
    if (i < p.length()) {
      int gap = part - p.part(i + 1);
      if (rules.strict && gap == 0) return false;
      if (rules.basis && (gap < rules.gap_lo || gap > rules.gap_hi)) return false;
    }
  }
  return p.empty() || last_part_ok(rules, p.parts().back());
}

std::vector<Partition> enumerate(PartitionClass c, int weight) {
  std::vector<Partition> out;
  if (weight < 0) return out;
  const Rules rules = rules_for(c);
  Generator(rules, out).by_weight(weight);
  return out;
}

std::vector<Partition> enumerate_by_filter(PartitionClass c, int weight) {
  std::vector<Partition> out;
  if (weight < 0) return out;
  for (auto& p : enumerate(PartitionClass::kAll, weight))
    if (is_member(c, p)) out.push_back(std::move(p));
  return out;
}

std::vector<Partition> enumerate_basis_by_shape(PartitionClass basis, int length, int largest) {
  if (!is_basis(basis)) throw DomainError("'" + to_string(basis) + "' is not a basis tag");
  std::vector<Partition> out;
  if (length < 0 || largest < 0) return out;
  const Rules rules = rules_for(basis);
  Generator(rules, out).by_shape(length, largest);
  return out;
}

std::vector<Partition> enumerate_basis_by_length(PartitionClass basis, int length) {
  std::vector<Partition> out;
  for (int largest = 2 * length; largest >= 0; --largest) {
    auto shape = enumerate_basis_by_shape(basis, length, largest);
    std::move(shape.begin(), shape.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace sipq
