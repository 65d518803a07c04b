#pragma once

#include <optional>
#include <vector>

#include "fairmatch/types.hpp"

namespace fairmatch {

struct AssignmentSolution {
  std::vector<int> carrier_of;  // per row, assigned column
  double value = 0.0;
};

/// Maximum-weight assignment of every row to a distinct column (rows <= cols)
/// by the potentials form of the Kuhn-Munkres algorithm. `forbidden` masks
/// pairs that must not be used; returns nullopt when no complete assignment
/// avoids them.
std::optional<AssignmentSolution> hungarian_max(
    const Matrix& weight,
    const std::vector<std::vector<bool>>* forbidden = nullptr);

}  // namespace fairmatch
