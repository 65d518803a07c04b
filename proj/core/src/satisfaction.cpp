#include "fairmatch/satisfaction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fairmatch::satisfaction {

namespace {

// 0 * log2(0/q) = 0; terms with a zero denominator are dropped.
double xlog2_ratio(double p, double q) {
  if (p <= 0.0 || q <= 0.0) return 0.0;
  return p * std::log2(p / q);
}

// one-sided cross-entropy H(u, v)
double cross_entropy(double u, double v) {
  const double mid = 0.5 * (u + v);
  return xlog2_ratio(u, mid) + xlog2_ratio(1.0 - u, 1.0 - mid);
}

double numeric_value(const Indicator& ind) {
  if (const auto* a = std::get_if<NumericAttribute>(&ind)) return a->value;
  if (const auto* c = std::get_if<CostExpectation>(&ind)) return c->value;
  if (const auto* b = std::get_if<BenefitExpectation>(&ind)) return b->value;
  throw validation_error("indicator is not numeric");
}

const std::string& code_value(const Indicator& ind) {
  if (const auto* a = std::get_if<CodeAttribute>(&ind)) return a->code;
  if (const auto* f = std::get_if<FixedExpectation>(&ind)) return f->code;
  throw validation_error("indicator is not categorical");
}

const Indicator& require(const std::optional<Indicator>& slot, const char* side,
                         std::size_t who, std::size_t f) {
  if (!slot) {
    throw validation_error(std::string(side) + "[" + std::to_string(who + 1) +
                           "].indicators[" + std::to_string(f + 1) +
                           "]: missing value needed for aggregation");
  }
  return *slot;
}

}  // namespace

double interval_satisfaction(double b, double lo, double hi, double theta,
                             bool tolerable, double big_m,
                             const QuantifierConfig& cfg) {
  if (b >= lo && b <= hi) {
    if (hi == lo) return 1.0;  // degenerate interval: ratio at its supremum
    return theta + (1.0 - theta) * (hi - b) / (hi - lo);
  }
  if (!tolerable) return -big_m;
  if (b < lo) {
    const double denom = cfg.eq1_verbatim ? (hi - b) : (hi - lo);
    return -theta * (lo - b) / denom;
  }
  const double denom = cfg.eq1_verbatim ? (b - lo) : (hi - lo);
  return -theta * (b - hi) / denom;
}

double cost_satisfaction(double b, double a, double bmin, double bmax,
                         double omega, bool tolerable, double big_m) {
  if (b >= bmin && b <= a) {
    if (a == bmin) return omega;  // single admissible price, ratio -> 0
    return omega + (1.0 - omega) * (a - b) / (a - bmin);
  }
  if (b > a) {
    if (!tolerable) return -big_m;
    return -omega * (b - a) / (bmax - a);
  }
  // b < bmin can only happen on inconsistent inputs; treat as the cheapest
  return 1.0;
}

double fixed_satisfaction(const std::string& b, const std::string& a,
                          double phi, bool tolerable, double big_m) {
  if (b == a) return 1.0;
  return tolerable ? -phi : -big_m;
}

double benefit_satisfaction(double a, double b, double amax, double amin,
                            double omega, bool tolerable, double big_m,
                            const QuantifierConfig& cfg) {
  if (a >= b && a <= amax) {
    if (amax == b) return 1.0;  // ratio saturates
    const double denom = cfg.eq4_verbatim ? (amax - b) : (amax - amin);
    return omega + (1.0 - omega) * (a - b) / denom;
  }
  if (a < b) {
    if (!tolerable) return -big_m;
    if (b == amin) return -omega;
    return -omega * (b - a) / (b - amin);
  }
  // a > amax cannot occur when amax is the population maximum
  return 1.0;
}

double preference_satisfaction(const std::string& a,
                               const std::vector<std::string>& prefs,
                               double tau, double big_m) {
  for (std::size_t r = 0; r < prefs.size(); ++r) {
    if (prefs[r] == a) return std::pow(double(r + 1), -tau);
  }
  return -big_m;
}

double ifs_score(const IFNumber& x) {
  const double pi = x.hesitation();
  const double diff = x.mu - x.nu;
  double hi = 0.0;
  if (diff > 0.0) {
    hi = 0.5 * (cross_entropy(x.mu, x.nu) + cross_entropy(x.nu, x.mu));
  } else if (diff < 0.0) {
    hi = -0.5 * (cross_entropy(x.mu, x.nu) + cross_entropy(x.nu, x.mu));
  }
  return std::exp(diff + hi * pi) / (1.0 + pi * pi);
}

std::vector<double> criteria_weights(const Matrix& v) {
  std::vector<double> colsum(v.cols(), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < v.rows(); ++i) {
    for (std::size_t j = 0; j < v.cols(); ++j) {
      if (v(i, j) < 0.0) {
        throw validation_error("criteria matrix entry (" + std::to_string(i + 1) +
                               "," + std::to_string(j + 1) + ") is negative");
      }
      colsum[j] += v(i, j);
      total += v(i, j);
    }
  }
  if (total <= 0.0) throw validation_error("degenerate criteria matrix");
  for (double& w : colsum) w /= total;
  return colsum;
}

namespace {

// Per-pair indicator satisfaction for one shipper-side slot f.
double shipper_indicator(const MatchingInstance& inst, std::size_t i,
                         std::size_t j, std::size_t f,
                         const QuantifierConfig& cfg) {
  const auto& sh = inst.shippers[i];
  const auto& ca = inst.carriers[j];
  switch (kShipperIndicatorKinds[f]) {
    case IndicatorKind::interval_expectation: {
      const auto& want = std::get<IntervalExpectation>(
          require(sh.indicators[f], "shippers", i, f));
      const double b = numeric_value(require(ca.indicators[f], "carriers", j, f));
      return interval_satisfaction(b, want.lo, want.hi, want.theta,
                                   want.tolerable, inst.big_m, cfg);
    }
    case IndicatorKind::cost_expectation: {
      const auto& want = std::get<CostExpectation>(
          require(sh.indicators[f], "shippers", i, f));
      const double b = numeric_value(require(ca.indicators[f], "carriers", j, f));
      double bmin = b, bmax = b;
      for (std::size_t k = 0; k < inst.carriers.size(); ++k) {
        const double ob = numeric_value(
            require(inst.carriers[k].indicators[f], "carriers", k, f));
        bmin = std::min(bmin, ob);
        bmax = std::max(bmax, ob);
      }
      return cost_satisfaction(b, want.value, bmin, bmax, want.omega,
                               want.tolerable, inst.big_m);
    }
    case IndicatorKind::fixed_expectation: {
      const auto& want = std::get<FixedExpectation>(
          require(sh.indicators[f], "shippers", i, f));
      const std::string& b = code_value(require(ca.indicators[f], "carriers", j, f));
      return fixed_satisfaction(b, want.code, want.phi, want.tolerable,
                                inst.big_m);
    }
    case IndicatorKind::reliability: {
      if (inst.reliability_shipper_ifn)
        return ifs_score((*inst.reliability_shipper_ifn)[i][j]);
      if (inst.reliability_shipper_score)
        return (*inst.reliability_shipper_score)(i, j);
      throw validation_error("reliability_shipper: missing for aggregation");
    }
    default:
      return 0.0;  // attributes carry weight 0 and are screened separately
  }
}

// Carrier-side slot f: theta_ij^f, the satisfaction of carrier j with shipper i.
double carrier_indicator(const MatchingInstance& inst, std::size_t i,
                         std::size_t j, std::size_t f,
                         const QuantifierConfig& cfg) {
  const auto& sh = inst.shippers[i];
  const auto& ca = inst.carriers[j];
  switch (kCarrierIndicatorKinds[f]) {
    case IndicatorKind::benefit_expectation: {
      const auto& want = std::get<BenefitExpectation>(
          require(ca.indicators[f], "carriers", j, f));
      const double a = numeric_value(require(sh.indicators[f], "shippers", i, f));
      double amin = a, amax = a;
      for (std::size_t k = 0; k < inst.shippers.size(); ++k) {
        const double oa = numeric_value(
            require(inst.shippers[k].indicators[f], "shippers", k, f));
        amin = std::min(amin, oa);
        amax = std::max(amax, oa);
      }
      return benefit_satisfaction(a, want.value, amax, amin, want.omega,
                                  want.tolerable, inst.big_m, cfg);
    }
    case IndicatorKind::preference_expectation: {
      const auto& want = std::get<PreferenceExpectation>(
          require(ca.indicators[f], "carriers", j, f));
      const std::string& a = code_value(require(sh.indicators[f], "shippers", i, f));
      return preference_satisfaction(a, want.sequence, want.tau, inst.big_m);
    }
    case IndicatorKind::reliability: {
      if (inst.reliability_carrier_ifn)
        return ifs_score((*inst.reliability_carrier_ifn)[j][i]);
      if (inst.reliability_carrier_score)
        return (*inst.reliability_carrier_score)(j, i);
      throw validation_error("reliability_carrier: missing for aggregation");
    }
    default:
      return 0.0;
  }
}

}  // namespace

std::pair<Matrix, Matrix> aggregate(const MatchingInstance& inst,
                                    const QuantifierConfig& cfg) {
  const std::size_t m = inst.num_shippers(), n = inst.num_carriers();
  Matrix alpha(m, n), beta(n, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double a = 0.0, b = 0.0;
      for (std::size_t f = 0; f < kIndicatorCount; ++f) {
        const double ws = inst.weights_shipper[i][f];
        if (ws != 0.0) a += ws * shipper_indicator(inst, i, j, f, cfg);
        const double wc = inst.weights_carrier[j][f];
        if (wc != 0.0) b += wc * carrier_indicator(inst, i, j, f, cfg);
      }
      alpha(i, j) = a;
      beta(j, i) = b;
    }
  }
  return {std::move(alpha), std::move(beta)};
}

std::vector<std::vector<bool>> feasibility_screen(const MatchingInstance& inst,
                                                  const QuantifierConfig& cfg) {
  const std::size_t m = inst.num_shippers(), n = inst.num_carriers();
  std::vector<std::vector<bool>> ok(m, std::vector<bool>(n, true));
  if (inst.has_matrices()) return ok;  // pre-screened input

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool feasible = true;
      // capacity attributes A4..A6 against B4..B6
      for (std::size_t f = 3; f <= 5 && feasible; ++f) {
        const auto& as = inst.shippers[i].indicators[f];
        const auto& bs = inst.carriers[j].indicators[f];
        if (as && bs && numeric_value(*as) > numeric_value(*bs) + kValidationTol)
          feasible = false;
      }
      // departure codes A7 = B7
      const auto& a7 = inst.shippers[i].indicators[6];
      const auto& b7 = inst.carriers[j].indicators[6];
      if (feasible && a7 && b7 && code_value(*a7) != code_value(*b7))
        feasible = false;
      // any intolerable expectation violated shows up as -big_m; legitimate
      // values stay within [-1, 1]
      const double floor = -0.5 * inst.big_m;
      for (std::size_t f = 0; f < kIndicatorCount && feasible; ++f) {
        if (kShipperIndicatorKinds[f] != IndicatorKind::attribute &&
            kShipperIndicatorKinds[f] != IndicatorKind::reliability &&
            inst.shippers[i].indicators[f] &&
            shipper_indicator(inst, i, j, f, cfg) <= floor)
          feasible = false;
        if (kCarrierIndicatorKinds[f] != IndicatorKind::attribute &&
            kCarrierIndicatorKinds[f] != IndicatorKind::reliability &&
            inst.carriers[j].indicators[f] &&
            carrier_indicator(inst, i, j, f, cfg) <= floor)
          feasible = false;
      }
      ok[i][j] = feasible;
    }
  }
  return ok;
}

}  // namespace fairmatch::satisfaction
