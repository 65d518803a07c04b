#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fairmatch {

inline constexpr double kValidationTol = 1e-9;
inline constexpr double kDefaultBigM = 1e6;

/// Thrown on schema or invariant violations; message names the offending
/// field and index.
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Intuitionistic fuzzy number. Hesitation is derived, never stored.
struct IFNumber {
  double mu = 0.0;  // membership degree
  double nu = 0.0;  // non-membership degree

  double hesitation() const { return 1.0 - mu - nu; }
};

void validate_ifn(const IFNumber& x, const std::string& where);

enum class IndicatorKind {
  interval_expectation,
  cost_expectation,
  fixed_expectation,
  benefit_expectation,
  preference_expectation,
  attribute,
  reliability,
};

inline constexpr std::size_t kIndicatorCount = 9;

// Indicator slot kinds, shipper side A1..A9 and carrier side B1..B9.
// Attribute slots never carry weight; reliability enters via the scored
// matrices.
constexpr std::array<IndicatorKind, kIndicatorCount> kShipperIndicatorKinds = {
    IndicatorKind::interval_expectation,  // A1 delivery date
    IndicatorKind::cost_expectation,      // A2 delivery price
    IndicatorKind::fixed_expectation,     // A3 vehicle type
    IndicatorKind::attribute,             // A4 cargo weight
    IndicatorKind::attribute,             // A5 cargo length
    IndicatorKind::attribute,             // A6 cargo size
    IndicatorKind::attribute,             // A7 place of departure
    IndicatorKind::attribute,             // A8 place of delivery
    IndicatorKind::reliability,           // A9
};

constexpr std::array<IndicatorKind, kIndicatorCount> kCarrierIndicatorKinds = {
    IndicatorKind::attribute,               // B1 delivery date
    IndicatorKind::benefit_expectation,     // B2 delivery price
    IndicatorKind::attribute,               // B3 vehicle type
    IndicatorKind::attribute,               // B4 vehicle deadweight
    IndicatorKind::attribute,               // B5 vehicle length
    IndicatorKind::attribute,               // B6 vehicle volume
    IndicatorKind::attribute,               // B7 place of departure
    IndicatorKind::preference_expectation,  // B8 place of delivery
    IndicatorKind::reliability,             // B9
};

// Per-slot indicator payloads.
struct IntervalExpectation {
  double lo = 0.0, hi = 0.0;
  double theta = 1.0;
  bool tolerable = false;
};
struct CostExpectation {
  double value = 0.0;
  double omega = 1.0;
  bool tolerable = false;
};
struct FixedExpectation {
  std::string code;
  double phi = 1.0;
  bool tolerable = false;
};
struct BenefitExpectation {
  double value = 0.0;
  double omega = 1.0;
  bool tolerable = false;
};
struct PreferenceExpectation {
  std::vector<std::string> sequence;  // best first, no duplicates
  double tau = 1.0;
  bool tolerable = false;
};
struct NumericAttribute {
  double value = 0.0;
};
struct CodeAttribute {
  std::string code;
};

using Indicator =
    std::variant<IntervalExpectation, CostExpectation, FixedExpectation,
                 BenefitExpectation, PreferenceExpectation, NumericAttribute,
                 CodeAttribute>;

struct ShipperProfile {
  int id = 0;  // 1-based, as it appears in I/O
  std::array<std::optional<Indicator>, kIndicatorCount> indicators;
};

struct CarrierProfile {
  int id = 0;
  std::array<std::optional<Indicator>, kIndicatorCount> indicators;
};

/// Dense row-major matrix, just enough for m-by-n satisfaction tables.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  bool empty() const { return data_.empty(); }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

/// A full matching problem: profiles, weights, and the derived (or supplied)
/// comprehensive satisfaction matrices. Immutable after load; safe to share
/// across threads read-only.
struct MatchingInstance {
  std::vector<ShipperProfile> shippers;
  std::vector<CarrierProfile> carriers;

  // one weight vector of length 9 per shipper / per carrier
  std::vector<std::array<double, kIndicatorCount>> weights_shipper;
  std::vector<std::array<double, kIndicatorCount>> weights_carrier;

  double big_m = kDefaultBigM;
  double gamma = 0.2;            // dissatisfaction interval limitation, (0,1)
  double eta_lo = 0.0, eta_hi = 0.0;  // fairness interval [eta_L, eta_H]

  // reliability evaluations: either raw IFNs (scored on aggregation) or
  // already-scored reals
  std::optional<std::vector<std::vector<IFNumber>>> reliability_shipper_ifn;
  std::optional<Matrix> reliability_shipper_score;  // m x n
  std::optional<std::vector<std::vector<IFNumber>>> reliability_carrier_ifn;
  std::optional<Matrix> reliability_carrier_score;  // n x m

  // comprehensive satisfactions; absent means "compute via aggregate()"
  std::optional<Matrix> alpha;  // m x n, shipper -> carrier
  std::optional<Matrix> beta;   // n x m, carrier -> shipper

  std::size_t num_shippers() const { return shippers.size(); }
  std::size_t num_carriers() const { return carriers.size(); }
  bool has_matrices() const { return alpha.has_value() && beta.has_value(); }
};

/// Validates every type invariant; throws validation_error naming the field.
void validate(const MatchingInstance& inst);

/// A 0-1 assignment together with its objective values and fuzzy metrics.
/// Pair indices are 0-based internally; I/O shifts to 1-based.
struct MatchingScheme {
  std::vector<std::pair<int, int>> pairs;  // (shipper, carrier), sorted by shipper
  double f1 = 0.0, f2 = 0.0;
  double u1 = 0.0, v1 = 0.0, s1 = 0.0;
  double u2 = 0.0, v2 = 0.0, s2 = 0.0;
  double eta = 0.0;  // s1/s2; equals u1/u2 at LP3 optima where v vanishes
};

}  // namespace fairmatch
