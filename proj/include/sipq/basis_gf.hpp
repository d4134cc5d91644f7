#pragma once

// B(n, h): the four-parameter generating polynomial of basis partitions with
// length n and largest part h, computed three independent ways.

#include <string>
#include <string_view>

#include "sipq/partitions.hpp"
#include "sipq/report.hpp"
#include "sipq/series.hpp"

namespace sipq {

enum class Method { kEnumerated, kRecurrence, kClosedForm };

inline constexpr Method kMethods[] = {Method::kEnumerated, Method::kRecurrence, Method::kClosedForm};

// "enumerated", "recurrence", "closed-form"
std::string to_string(Method m);
Method parse_method(std::string_view text);

// Every entry is returned as a complete polynomial truncated at n * h, the
// largest weight a partition of that shape can have.
int table_entry_trunc(int n, int h);

Series table_enumerated(PartitionClass basis, int n, int h);
// Initial values for lengths 0 and 1, hand-checked values for length 2, and
// the class recurrence from length 3 on.
Series table_recurrence(PartitionClass basis, int n, int h);
Series table_closed_form(PartitionClass basis, int n, int h);
Series table_entry(PartitionClass basis, Method method, int n, int h);

// ENUMERATED = RECURRENCE = CLOSED_FORM on 0 <= n <= n_max, 0 <= h <= h_max,
// plus nonnegative exponents, the support conditions, and the stated
// recurrences applied to the enumerated table.
CheckReport cross_check_tables(PartitionClass basis, int n_max, int h_max);

}  // namespace sipq
