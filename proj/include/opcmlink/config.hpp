#pragma once

#include <cstddef>

namespace opcmlink {

/// Default cap on carrier sizes for exhaustive enumeration (law checks,
/// powerset constructions, completion carriers). Overridable per call or
/// globally via the OPCMLINK_MAX_CARRIER environment variable.
inline constexpr std::size_t kDefaultMaxCarrier = 64;

/// Effective cap: OPCMLINK_MAX_CARRIER if set and positive, else the default.
std::size_t max_carrier();

}  // namespace opcmlink
