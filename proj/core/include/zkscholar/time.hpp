#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace zks {

// Injected logical clock (seconds since the Unix epoch). Wall clocks never
// drive protocol decisions; callers pass the time explicitly.
using LogicalTime = std::int64_t;

std::string iso8601_utc(LogicalTime t);    // 2025-06-26T16:02:50Z
std::string iso8601_date(LogicalTime t);   // 2025-06-26
LogicalTime parse_iso8601_utc(std::string_view text);

}  // namespace zks
