#pragma once

#include <stdexcept>
#include <string>

namespace dyck {

/// Thrown when an adaptive enumeration region keeps touching its boundary
/// instead of stabilizing.
struct RegionOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a computed Hilbert series acquires a negative coefficient.
/// The series of a simple module is a dimension count, so a negative entry
/// signals an enumeration or inversion bug rather than bad input.
struct NegativeCoefficient : std::logic_error {
  using std::logic_error::logic_error;
};

/// Thrown by general_ideal_terms when two of the given partitions are
/// comparable in the containment order.
struct ComparablePair : std::invalid_argument {
  ComparablePair(int i, int j, const std::string& what)
      : std::invalid_argument(what), first(i), second(j) {}
  int first;
  int second;
};

}  // namespace dyck
