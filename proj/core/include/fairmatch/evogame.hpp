#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fairmatch/types.hpp"

namespace fairmatch::evogame {

/// Payoff, probability, and cost parameters of the shipper-carrier-platform
/// game under the waiting-response-time-cost sharing mechanism.
struct GameParams {
  double C_I = 0;      // shipper's waiting response time cost
  double C_P = 0;      // carrier's waiting response time cost
  double sigma1 = 0;   // share of C_I borne by the carrier
  double sigma2 = 0;   // share of C_P borne by the shipper
  double h = 0;        // shipper-side commission rate
  double f = 0;        // carrier-side commission rate
  double W_I = 0;      // shipper order value
  double W_P = 0;      // carrier order value
  double Q_I = 0;      // shipper re-search cost
  double Q_P = 0;      // carrier re-search cost
  double q1 = 0, q2 = 0;  // shipper self-search outcome probabilities
  double p1 = 0, p2 = 0;  // carrier self-search outcome probabilities
  double R_I_hi = 0, R_I_lo = 0, R_I = 0;  // shipper returns
  double R_P_hi = 0, R_P_lo = 0, R_P = 0;  // carrier returns
  double u_I = 0;      // shipper service level
  double u_P = 0;      // carrier service level
  double alpha_s = 0;  // subsidy intensity toward the shipper
  double beta_s = 0;   // subsidy intensity toward the carrier
  double S_I = 0;      // maximum shipper subsidy
  double S_P = 0;      // maximum carrier subsidy
  double D_G = 0;      // subsidy management cost
  double F_G_I = 0;    // reputation revenue from subsidizing the shipper
  double F_G_P = 0;    // reputation revenue from subsidizing the carrier
  double eta = 0;      // fairness factor
};

void validate(const GameParams& p);

/// Built-in scenarios: under array 1 the system settles at (1,1,0), under
/// array 2 (which only lowers D_G to 0.5) at (1,1,1).
GameParams array1();
GameParams array2();

struct GameState {
  double x = 0, y = 0, z = 0;  // accept/accept/subsidize probabilities
};

/// Right-hand side of the three replicator equations.
std::array<double, 3> replicator_rhs(const GameState& s, const GameParams& p);

/// Analytic 3x3 Jacobian of the replicator system, rows d(Fx,Fy,Fz), columns
/// d/dx, d/dy, d/dz.
std::array<std::array<double, 3>, 3> jacobian(const GameState& s,
                                              const GameParams& p);

struct VertexEigenvalues {
  GameState vertex;
  std::array<double, 3> lambda;  // closed forms; vertex Jacobians are diagonal
};

/// The eight pure-strategy equilibria E1..E8 with their eigenvalue closed
/// forms.
std::array<VertexEigenvalues, 8> vertex_eigenvalues(const GameParams& p);

enum class Stability { stable, unstable, saddle, nonhyperbolic };

std::string to_string(Stability s);

struct EquilibriumClass {
  GameState vertex;
  std::array<double, 3> lambda;
  Stability classification;
};

/// Lyapunov first method with eigenvalue tolerance 1e-9: all negative ->
/// stable, all positive -> unstable, any within tolerance of zero ->
/// nonhyperbolic, otherwise saddle.
std::array<EquilibriumClass, 8> classify_equilibria(const GameParams& p);

enum class StableTarget { E7, E8 };  // (1,1,0) and (1,1,1)

struct ConditionReport {
  std::string description;
  double lhs = 0, rhs = 0;
  bool holds = false;
};

struct ConditionsResult {
  bool holds = false;
  std::vector<ConditionReport> conditions;
};

/// Checks the printed unique-stability conditions for the requested target,
/// tolerance 1e-9.
ConditionsResult check_conditions(const GameParams& p, StableTarget target);

struct TrajectoryPoint {
  double t = 0;
  GameState state;
};

struct IntegrateOptions {
  double t_max = 200.0;
  double dt = 0.01;
  double settle_tol = 1e-8;  // stop early when the inf-norm of the RHS drops below
  int sample_stride = 1;     // record every k-th step
};

/// Fixed-step RK4 with coordinates clamped to [0,1] after every step.
std::vector<TrajectoryPoint> integrate(const GameState& start,
                                       const GameParams& p,
                                       const IntegrateOptions& opts = {});

/// Terminal state only (no trajectory storage).
GameState integrate_terminal(const GameState& start, const GameParams& p,
                             const IntegrateOptions& opts = {});

enum class SweepParameter { alpha_s, beta_s, u_I, u_P, eta };

std::string to_string(SweepParameter p);

struct SweepRow {
  double value = 0;
  GameState terminal;
  std::optional<GameState> vertex;  // nearest vertex within the snap tolerance
  double settle_time = 0;           // first time within the snap tolerance of it
};

struct SweepOptions {
  IntegrateOptions integrate;
  /// Snap distance for calling a terminal state a vertex. When a sharing
  /// fraction equals 1 the x-direction eigenvalue at the relevant vertices is
  /// exactly 0 and trajectories freeze a small offset away, so this is much
  /// looser than the integration tolerance.
  double vertex_tol = 0.05;
  GameState start{0.6, 0.6, 0.6};
};

struct SweepResult {
  SweepParameter parameter;
  std::vector<SweepRow> rows;
  /// (lo, hi) pairs of adjacent swept values whose terminal vertices differ.
  std::vector<std::pair<double, double>> critical_intervals;
};

SweepResult parameter_sweep(const GameParams& base, SweepParameter name,
                            const std::vector<double>& values,
                            const SweepOptions& opts = {});

}  // namespace fairmatch::evogame
