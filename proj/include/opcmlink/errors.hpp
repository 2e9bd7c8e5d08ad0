#pragma once

#include <stdexcept>
#include <string>

namespace opcmlink {

/// Base class for all errors raised by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown element, carrier mismatch, inconsistent table.
/// Distinct from a law violation, which is reported, not thrown.
struct structural_error : error {
  using error::error;
};

/// A stated precondition of an operation does not hold.
struct precondition_error : error {
  using error::error;
};

/// An enumeration would exceed the configured carrier cap.
struct resource_error : error {
  using error::error;
};

}  // namespace opcmlink
