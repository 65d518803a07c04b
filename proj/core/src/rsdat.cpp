#include "fairmatch/rsdat.hpp"

namespace fairmatch::rsdat {

bool validate(const AdjacencyScales& s) {
  if (!s.order.empty() && s.order.size() != s.target_count()) {
    throw validation_error("rsdat: order has " + std::to_string(s.order.size()) +
                           " labels for " + std::to_string(s.target_count()) +
                           " targets");
  }
  bool ordered = true;
  for (std::size_t a = 0; a < s.scales.size(); ++a) {
    const double v = s.scales[a];
    if (!(v > 0.0 && v < 1.0)) {
      throw validation_error("rsdat: scales[" + std::to_string(a + 1) +
                             "] = " + std::to_string(v) + " outside (0,1)");
    }
    if (v < 0.5) ordered = false;
  }
  return ordered;
}

Matrix rsdat_matrix(const AdjacencyScales& s) {
  validate(s);
  const std::size_t k = s.target_count();
  Matrix m(k, k, 0.5);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const double prev = (b == a + 1) ? 0.5 : m(a, b - 1);
      // adjacent entries come straight from the scales; longer spans by the
      // recursion with the constant 1
      const double v = (b == a + 1)
                           ? s.scales[a]
                           : prev + 2.0 * (1.0 - prev) * (s.scales[b - 1] - 0.5);
      m(a, b) = v;
      m(b, a) = 1.0 - v;
    }
  }
  return m;
}

std::vector<double> rsdat_weights(const AdjacencyScales& s) {
  const std::size_t k = s.target_count();
  if (k == 1) return {1.0};
  const Matrix m = rsdat_matrix(s);
  std::vector<double> w(k, 0.0);
  double total = 0.0;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (b != a) w[a] += m(a, b);
    }
    total += w[a];
  }
  for (double& x : w) x /= total;
  return w;
}

}  // namespace fairmatch::rsdat
