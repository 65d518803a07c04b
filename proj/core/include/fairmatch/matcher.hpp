#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairmatch/types.hpp"

namespace fairmatch::matcher {

/// Structural solver failures (empty feasible region and the like).
class solve_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Objective extremes over the feasible region plus the dissatisfaction
/// limits f^UL = f^U - gamma * (f^U - f^L).
struct FuzzyBounds {
  double f1_lo = 0, f1_hi = 0;
  double f2_lo = 0, f2_hi = 0;
  double f1_ul = 0, f2_ul = 0;
};

enum class Method { fuzzy_interactive, max_min, ideal_point, linear_weighted };

/// Space the benchmark methods optimize in: the raw objectives f1/f2 or
/// their membership images u1/u2.
enum class ObjectiveSpace { raw, membership };

struct SolverConfig {
  Method method = Method::fuzzy_interactive;
  double theta_step = 0.02;  // membership raise per fairness iteration
  int max_iterations = 50;
  double lambda1 = 0.5, lambda2 = 0.5;  // linear-weighted coefficients
  ObjectiveSpace benchmark_space = ObjectiveSpace::raw;
  bool match_all_shippers = true;
};

enum class SolveStatus { optimal, infeasible };

/// Raw result of one exact 0-1 solve.
struct AssignmentOutcome {
  SolveStatus status = SolveStatus::infeasible;
  std::vector<int> carrier_of;  // per shipper; -1 = unmatched
  double f1 = 0, f2 = 0;
  double objective = 0;
  std::string message;
};

/// Satisfaction matrices plus the feasibility mask, ready for solving.
struct PreparedProblem {
  Matrix alpha;  // m x n
  Matrix beta;   // n x m
  std::vector<std::vector<bool>> feasible;
};

/// Aggregates (or forwards) the instance's matrices and screening mask.
PreparedProblem prepare(const MatchingInstance& inst);

/// Exact optimum of  max c1*f1(x) + c2*f2(x)  over 0-1 matchings restricted
/// to feasible pairs, with optional side constraints f1 >= L1, f2 >= L2.
/// Branch and bound over shippers with a Kuhn-Munkres relaxation bound; ties
/// broken by the lexicographically smallest sorted pair list.
AssignmentOutcome solve_assignment(
    const Matrix& alpha, const Matrix& beta, double c1, double c2,
    const std::vector<std::vector<bool>>& feasible,
    std::optional<std::pair<double, double>> lower_bounds = std::nullopt,
    bool match_all_shippers = true);

/// Four extreme solves plus the UL formulas. Throws solve_error when the
/// feasible region is empty.
FuzzyBounds compute_bounds(const PreparedProblem& prob, double gamma,
                           bool match_all_shippers = true);

struct MembershipValue {
  double u = 0, v = 0, s = 0;
};

/// Clamped piecewise-linear membership/non-membership of objective `which`
/// (1 or 2) at value f, with s = u - v.
MembershipValue membership(double f, const FuzzyBounds& b, int which);

/// Fills u/v/s/eta on a scheme from its f1/f2 and the bounds.
void annotate(MatchingScheme& scheme, const FuzzyBounds& b);

struct Lp3Result {
  SolveStatus status = SolveStatus::infeasible;
  MatchingScheme scheme;
  std::string message;
};

/// max u1 + u2 subject to f_h >= f_h^UL (affine objective above f^L), plus
/// optional raised membership floors theta_bar from the interactive loop.
Lp3Result solve_lp3(const PreparedProblem& prob, const FuzzyBounds& bounds,
                    std::optional<double> theta_bar1 = std::nullopt,
                    std::optional<double> theta_bar2 = std::nullopt,
                    bool match_all_shippers = true);

struct InteractiveIteration {
  int iteration = 0;
  std::optional<double> theta_bar1, theta_bar2;  // active added constraints
  MatchingScheme scheme;
  double eta = 0;
  SolveStatus status = SolveStatus::optimal;
};

struct InteractiveResult {
  bool fairness_met = false;
  SolveStatus status = SolveStatus::infeasible;
  MatchingScheme scheme;  // final (or least-violating on failure)
  FuzzyBounds bounds;
  std::vector<InteractiveIteration> log;
  std::string message;
};

/// Fairness-adjusted interactive loop: solve LP3, raise the lagging side's
/// membership floor by theta_step until eta lands in [eta_lo, eta_hi], the
/// iteration budget runs out, or the floors become infeasible.
InteractiveResult interactive_solve(const MatchingInstance& inst,
                                    const SolverConfig& cfg = {});

enum class Side { shipper, carrier };

struct GammaSweepRow {
  double gamma = 0;
  double swept_ul = 0;        // the recomputed side's f^UL
  SolveStatus status = SolveStatus::infeasible;
  MatchingScheme scheme;
  double overall = 0;         // s1 + s2
  bool meets_fairness = false;
};

struct GammaSweepOptions {
  /// The fixed side keeps its UL from the instance's gamma. Published
  /// reference tables carry that constant at 2 decimals, and the published
  /// per-gamma schemes are only feasible against the rounded value, so it is
  /// rounded by default.
  bool round_reference_ul = true;
  bool match_all_shippers = true;
};

/// Re-solves LP3 for each gamma with only `side`'s UL recomputed; reports
/// each scheme and whether its eta meets the fairness interval. No fairness
/// adjustment is applied inside the sweep.
std::vector<GammaSweepRow> gamma_sweep(const MatchingInstance& inst,
                                       const std::vector<double>& gammas,
                                       Side side,
                                       const GammaSweepOptions& opts = {});

struct BenchmarkResult {
  SolveStatus status = SolveStatus::infeasible;
  MatchingScheme scheme;
  std::string message;
};

/// max-min, ideal-point, or linear-weighted solve over the full feasible
/// region, reported through the same fuzzy metrics as LP3 results.
BenchmarkResult benchmark_solve(const MatchingInstance& inst, Method method,
                                const SolverConfig& cfg = {});

struct CompareRow {
  std::string method;
  SolveStatus status = SolveStatus::infeasible;
  MatchingScheme scheme;
};

/// The three benchmarks plus the interactive method, in table order.
std::vector<CompareRow> compare_methods(const MatchingInstance& inst,
                                        const SolverConfig& cfg = {});

}  // namespace fairmatch::matcher
