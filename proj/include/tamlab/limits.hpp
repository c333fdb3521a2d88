#pragma once

#include <cstddef>

namespace tamlab {

/// Resource caps shared by every enumerating operation.
struct Limits {
  /// Largest group order accepted by element and subgroup enumeration.
  std::size_t max_order = 120;
  /// Largest point count of an explicitly enumerated function or coinduced G-set.
  std::size_t max_points = 20'000'000;
  /// Largest materialized action table (group order times point count).
  std::size_t max_table_entries = 100'000'000;
};

} // namespace tamlab
