#pragma once

#include <utility>
#include <vector>

#include "fairmatch/types.hpp"

namespace fairmatch::satisfaction {

/// Switches between the printed piecewise formulas and the symmetric
/// denominators the accompanying figures suggest. Defaults keep the printed
/// form.
struct QuantifierConfig {
  bool eq1_verbatim = true;  // out-of-interval branches use (aU - b) / (b - aL)
  bool eq4_verbatim = true;  // benefit branch 1 uses (amax - b)
};

/// Interval-type expectation. Value 1 at the left endpoint, theta at the
/// right, negative outside when tolerable, -big_m otherwise.
double interval_satisfaction(double b, double lo, double hi, double theta,
                             bool tolerable, double big_m,
                             const QuantifierConfig& cfg = {});

/// Cost-type expectation (buyer view: cheaper is better).
double cost_satisfaction(double b, double a, double bmin, double bmax,
                         double omega, bool tolerable, double big_m);

/// Fixed expectation: exact categorical match or a flat penalty.
double fixed_satisfaction(const std::string& b, const std::string& a,
                          double phi, bool tolerable, double big_m);

/// Benefit-type expectation (seller view: higher offer is better).
double benefit_satisfaction(double a, double b, double amax, double amin,
                            double omega, bool tolerable, double big_m,
                            const QuantifierConfig& cfg = {});

/// Preference-sequence expectation: rank^(-tau) for the 1-based rank of `a`
/// in `prefs`, -big_m when absent.
double preference_satisfaction(const std::string& a,
                               const std::vector<std::string>& prefs,
                               double tau, double big_m);

/// Score of an intuitionistic fuzzy number,
///   S = exp(mu - nu + H_I * pi) / (1 + pi^2),
/// where H_I is the symmetrized cross-entropy signed by the comparison of mu
/// and nu, with the 0*log2(0/q) = 0 convention.
double ifs_score(const IFNumber& x);

/// Criteria weights from a p-by-q evaluation matrix: column sums normalized
/// to 1. Throws validation_error on an all-zero matrix.
std::vector<double> criteria_weights(const Matrix& v);

/// Comprehensive satisfaction matrices: alpha(i,j) = sum_f w_i^f eps_ij^f and
/// beta(j,i) = sum_f w_j^f theta_ij^f. Reliability slots take the scored
/// matrices (IFNs go through ifs_score). Requires raw indicator profiles;
/// instances that carry alpha/beta directly skip this.
std::pair<Matrix, Matrix> aggregate(const MatchingInstance& inst,
                                    const QuantifierConfig& cfg = {});

/// Hard screening: capacity fits, departure codes match, and no indicator
/// satisfaction at -big_m. All-true when the instance supplies matrices
/// directly.
std::vector<std::vector<bool>> feasibility_screen(
    const MatchingInstance& inst, const QuantifierConfig& cfg = {});

}  // namespace fairmatch::satisfaction
