#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sipq {

// A weakly decreasing sequence of positive integers. The empty partition is
// allowed and belongs to every class.
class Partition {
 public:
  Partition() = default;
  // Throws InvalidPartition unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  std::span<const int> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int weight() const;
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  // 1-based part access; returns 0 past the length.
  int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// "5,3,2" (empty string is the empty partition). Throws ParseError on
// anything else, including non-decreasing input.
Partition parse_partition(std::string_view text);
std::string to_string(const Partition& p);

struct PartitionStats {
  int weight = 0;
  int length = 0;
  int alt_sum = 0;    // λ1 - λ2 + λ3 - ...
  int odd_parts = 0;  // number of odd parts
  int bg_rank = 0;    // odd parts at odd index minus odd parts at even index

  friend bool operator==(const PartitionStats&, const PartitionStats&) = default;
};

// Exponents of a, b, c, d in the four-parameter weight: odd-indexed rows are
// filled a,b,a,b,... and even-indexed rows c,d,c,d,...
struct OmegaExponents {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;

  friend bool operator==(const OmegaExponents&, const OmegaExponents&) = default;
};

enum class PartitionClass {
  kAll,
  kStrict,
  kG1,  // strict, even-indexed parts even
  kG2,  // strict, odd-indexed parts even
  kP1,  // even-indexed parts even
  kP2,  // odd-indexed parts even
  kBasisG1,
  kBasisG2,
  kBasisP1,
  kBasisP2,
};

inline constexpr PartitionClass kAllClasses[] = {
    PartitionClass::kAll,     PartitionClass::kStrict,  PartitionClass::kG1,
    PartitionClass::kG2,      PartitionClass::kP1,      PartitionClass::kP2,
    PartitionClass::kBasisG1, PartitionClass::kBasisG2, PartitionClass::kBasisP1,
    PartitionClass::kBasisP2};

inline constexpr PartitionClass kSipClasses[] = {PartitionClass::kG1, PartitionClass::kG2,
                                                 PartitionClass::kP1, PartitionClass::kP2};

inline constexpr PartitionClass kBases[] = {PartitionClass::kBasisG1, PartitionClass::kBasisG2,
                                            PartitionClass::kBasisP1, PartitionClass::kBasisP2};

// "all", "strict", "g1", ..., "basis-g1", ...
std::string to_string(PartitionClass c);
PartitionClass parse_partition_class(std::string_view text);

bool is_basis(PartitionClass c);
// G1 -> BASIS_G1 etc. Throws DomainError for classes without a basis.
PartitionClass basis_of(PartitionClass c);
// BASIS_G1 -> G1 etc. Throws DomainError for non-basis tags.
PartitionClass parent_of(PartitionClass basis);

PartitionStats stats(const Partition& p);
OmegaExponents omega_exponents(const Partition& p);
Partition conjugate(const Partition& p);
bool is_member(PartitionClass c, const Partition& p);

// Members of `c` with the given weight, in lexicographically decreasing order.
// Generated directly from the class constraints.
std::vector<Partition> enumerate(PartitionClass c, int weight);

// Reference enumerator: every partition of `weight`, filtered by is_member.
std::vector<Partition> enumerate_by_filter(PartitionClass c, int weight);

// Basis members with exactly `length` parts and largest part `largest`.
std::vector<Partition> enumerate_basis_by_shape(PartitionClass basis, int length, int largest);

// All basis members of the given length (largest part <= 2 * length).
std::vector<Partition> enumerate_basis_by_length(PartitionClass basis, int length);

}  // namespace sipq
