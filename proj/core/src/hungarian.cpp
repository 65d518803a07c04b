#include "fairmatch/hungarian.hpp"

#include <cassert>
#include <cmath>
#include <limits>

namespace fairmatch {

std::optional<AssignmentSolution> hungarian_max(
    const Matrix& weight, const std::vector<std::vector<bool>>* forbidden) {
  const int r = int(weight.rows()), c = int(weight.cols());
  assert(r <= c);
  if (r == 0) return AssignmentSolution{{}, 0.0};

  // minimization on negated weights; forbidden edges get a dominating penalty
  double max_abs = 1.0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) max_abs = std::max(max_abs, std::abs(weight(i, j)));
  const double kForbidden = 16.0 * max_abs * (r + 1);

  auto cost = [&](int i, int j) {
    if (forbidden && (*forbidden)[i][j]) return kForbidden;
    return -weight(i, j);
  };

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(r + 1, 0.0), v(c + 1, 0.0);
  std::vector<int> p(c + 1, 0), way(c + 1, 0);
  for (int i = 1; i <= r; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(c + 1, inf);
    std::vector<char> used(c + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = 0;
      double delta = inf;
      for (int j = 1; j <= c; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= c; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }

  AssignmentSolution out;
  out.carrier_of.assign(r, -1);
  for (int j = 1; j <= c; ++j) {
    if (p[j]) out.carrier_of[p[j] - 1] = j - 1;
  }
  for (int i = 0; i < r; ++i) {
    const int j = out.carrier_of[i];
    if (j < 0) return std::nullopt;
    if (forbidden && (*forbidden)[i][j]) return std::nullopt;
    out.value += weight(i, j);
  }
  return out;
}

}  // namespace fairmatch
