#pragma once

#include <string>
#include <vector>

#include "fairmatch/types.hpp"

namespace fairmatch::rsdat {

/// Adjacent-importance comparison scales for k targets ordered best-first:
/// scales[a] compares target a with target a+1 and lies in (0,1). Values
/// >= 0.5 respect the declared order; smaller ones are accepted but flagged.
struct AdjacencyScales {
  std::vector<std::string> order;  // optional labels, size k or empty
  std::vector<double> scales;     // size k-1

  std::size_t target_count() const { return scales.size() + 1; }
};

/// Throws validation_error on scales outside (0,1) or label/size mismatch.
/// Returns true when every scale respects the declared order (>= 0.5).
bool validate(const AdjacencyScales& s);

/// Full k-by-k comparison matrix: diagonal 0.5, upper triangle by the
/// recursion I[a][b] = I[a][b-1] + 2*(1 - I[a][b-1])*(I[b-1][b] - 0.5),
/// lower triangle complementary.
Matrix rsdat_matrix(const AdjacencyScales& s);

/// Row sums of the comparison matrix excluding the diagonal, normalized to 1.
std::vector<double> rsdat_weights(const AdjacencyScales& s);

}  // namespace fairmatch::rsdat
