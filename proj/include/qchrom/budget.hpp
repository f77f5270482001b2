#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qchrom {

/// Raised when an enumeration would exceed its configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Work limits for the exhaustive routines.
struct Budget {
  int max_vertices = 12;
  /// Largest n accepted by the brute-force colouring oracle.
  int max_colors = 8;
  /// Edge subsets (inclusion-exclusion) and flats.
  std::uint64_t max_edge_subsets = std::uint64_t{1} << 20;
  /// Largest total weight accepted by reduce_to_unit_weights and interpolation.
  int max_total_weight = 24;
};

}  // namespace qchrom
