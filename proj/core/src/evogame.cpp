#include "fairmatch/evogame.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fairmatch::evogame {

namespace {

constexpr double kEigTol = 1e-9;

void check_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw validation_error(std::string("game params: ") + name +
                           " must lie in [0,1]");
  }
}

void check_nonneg(double v, const char* name) {
  if (!(v >= 0.0)) {
    throw validation_error(std::string("game params: ") + name +
                           " must be nonnegative");
  }
}

// bracket coefficients of the three replicator equations:
//   Fx = x(1-x) * (cx + ay*y + az*z)
//   Fy = y(1-y) * (cy + bx*x + bz*z)
//   Fz = z(1-z) * (cz + dx*x + dy*y)
struct Brackets {
  double cx, ay, az;
  double cy, bx, bz;
  double cz, dx, dy;
};

Brackets brackets(const GameParams& p) {
  Brackets b;
  b.cx = -p.C_I + p.C_I * p.sigma1;
  b.ay = p.C_I - p.h * p.W_I + p.Q_I - p.q2 * p.R_I_lo - p.q1 * p.R_I_hi +
         p.R_I * p.u_I - p.C_I * p.sigma1 + p.C_P * p.sigma2;
  b.az = p.alpha_s * p.S_I;
  b.cy = -p.C_P + p.C_P * p.sigma2;
  b.bx = p.C_P - p.f * p.W_P + p.Q_P - p.p2 * p.R_P_lo - p.p1 * p.R_P_hi +
         p.R_P * p.u_P + p.C_I * p.sigma1 - p.C_P * p.sigma2;
  b.bz = p.beta_s * p.S_P;
  b.cz = -p.D_G;
  b.dx = p.eta * p.F_G_I - p.alpha_s * p.S_I;
  b.dy = p.eta * p.F_G_P - p.beta_s * p.S_P;
  return b;
}

GameState clamp01(const GameState& s) {
  return {std::clamp(s.x, 0.0, 1.0), std::clamp(s.y, 0.0, 1.0),
          std::clamp(s.z, 0.0, 1.0)};
}

double inf_norm(const std::array<double, 3>& v) {
  return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}

}  // namespace

void validate(const GameParams& p) {
  check_unit(p.sigma1, "sigma1");
  check_unit(p.sigma2, "sigma2");
  check_unit(p.h, "h");
  check_unit(p.f, "f");
  check_unit(p.q1, "q1");
  check_unit(p.q2, "q2");
  check_unit(p.p1, "p1");
  check_unit(p.p2, "p2");
  check_unit(p.u_I, "u_I");
  check_unit(p.u_P, "u_P");
  check_unit(p.alpha_s, "alpha_s");
  check_unit(p.beta_s, "beta_s");
  check_unit(p.eta, "eta");
  if (std::abs(p.q1 + p.q2 - 1.0) > kValidationTol) {
    throw validation_error("game params: q1 + q2 must equal 1");
  }
  if (std::abs(p.p1 + p.p2 - 1.0) > kValidationTol) {
    throw validation_error("game params: p1 + p2 must equal 1");
  }
  check_nonneg(p.C_I, "C_I");
  check_nonneg(p.C_P, "C_P");
  check_nonneg(p.W_I, "W_I");
  check_nonneg(p.W_P, "W_P");
  check_nonneg(p.Q_I, "Q_I");
  check_nonneg(p.Q_P, "Q_P");
  check_nonneg(p.R_I_hi, "R_I_hi");
  check_nonneg(p.R_I_lo, "R_I_lo");
  check_nonneg(p.R_I, "R_I");
  check_nonneg(p.R_P_hi, "R_P_hi");
  check_nonneg(p.R_P_lo, "R_P_lo");
  check_nonneg(p.R_P, "R_P");
  check_nonneg(p.S_I, "S_I");
  check_nonneg(p.S_P, "S_P");
  check_nonneg(p.D_G, "D_G");
  check_nonneg(p.F_G_I, "F_G_I");
  check_nonneg(p.F_G_P, "F_G_P");
}

GameParams array1() {
  GameParams p;
  p.C_I = 5;
  p.sigma1 = 1.0;
  p.h = 0.1;
  p.W_I = 20;
  p.Q_I = 10;
  p.q2 = 0.6;
  p.R_I_lo = 25;
  p.q1 = 0.4;
  p.R_I_hi = 35;
  p.R_I = 30;
  p.u_I = 0.7;
  p.C_P = 5;
  p.sigma2 = 0.2;
  p.alpha_s = 0.6;
  p.S_I = 10;
  p.f = 0.1;
  p.W_P = 20;
  p.Q_P = 10;
  p.p2 = 0.6;
  p.R_P_lo = 25;
  p.p1 = 0.4;
  p.R_P_hi = 35;
  p.R_P = 30;
  p.u_P = 0.7;
  p.beta_s = 0.6;
  p.S_P = 10;
  p.D_G = 3;
  p.eta = 0.7;
  p.F_G_I = 10;
  p.F_G_P = 10;
  return p;
}

GameParams array2() {
  GameParams p = array1();
  p.D_G = 0.5;
  return p;
}

std::array<double, 3> replicator_rhs(const GameState& s, const GameParams& p) {
  const Brackets b = brackets(p);
  return {
      s.x * (1.0 - s.x) * (b.cx + b.ay * s.y + b.az * s.z),
      s.y * (1.0 - s.y) * (b.cy + b.bx * s.x + b.bz * s.z),
      s.z * (1.0 - s.z) * (b.cz + b.dx * s.x + b.dy * s.y),
  };
}

std::array<std::array<double, 3>, 3> jacobian(const GameState& s,
                                              const GameParams& p) {
  const Brackets b = brackets(p);
  const double gx = b.cx + b.ay * s.y + b.az * s.z;
  const double gy = b.cy + b.bx * s.x + b.bz * s.z;
  const double gz = b.cz + b.dx * s.x + b.dy * s.y;
  const double px = s.x * (1.0 - s.x);
  const double py = s.y * (1.0 - s.y);
  const double pz = s.z * (1.0 - s.z);
  return {{
      {(1.0 - 2.0 * s.x) * gx, px * b.ay, px * b.az},
      {py * b.bx, (1.0 - 2.0 * s.y) * gy, py * b.bz},
      {pz * b.dx, pz * b.dy, (1.0 - 2.0 * s.z) * gz},
  }};
}

std::array<VertexEigenvalues, 8> vertex_eigenvalues(const GameParams& p) {
  // closed forms as printed, row by row
  const double e3_1 = -p.h * p.W_I + p.Q_I - p.q2 * p.R_I_lo -
                      p.q1 * p.R_I_hi + p.R_I * p.u_I + p.C_P * p.sigma2;
  const double e5_2 = -p.f * p.W_P + p.Q_P - p.p2 * p.R_P_lo -
                      p.p1 * p.R_P_hi + p.R_P * p.u_P + p.C_I * p.sigma1;
  const double gain = p.eta * p.F_G_I + p.eta * p.F_G_P - p.alpha_s * p.S_I -
                      p.beta_s * p.S_P;

  std::array<VertexEigenvalues, 8> out;
  out[0] = {{0, 0, 0},
            {-p.C_I + p.C_I * p.sigma1, -p.C_P + p.C_P * p.sigma2, -p.D_G}};
  out[1] = {{0, 0, 1},
            {-p.C_I + p.C_I * p.sigma1 + p.alpha_s * p.S_I,
             -p.C_P + p.C_P * p.sigma2 + p.beta_s * p.S_P, p.D_G}};
  out[2] = {{0, 1, 0},
            {e3_1, p.C_P - p.C_P * p.sigma2,
             -p.D_G + p.eta * p.F_G_P - p.beta_s * p.S_P}};
  out[3] = {{0, 1, 1},
            {e3_1 + p.alpha_s * p.S_I,
             p.C_P - p.C_P * p.sigma2 - p.beta_s * p.S_P,
             p.D_G - p.eta * p.F_G_P + p.beta_s * p.S_P}};
  out[4] = {{1, 0, 0},
            {p.C_I - p.C_I * p.sigma1, e5_2,
             -p.D_G + p.eta * p.F_G_I - p.alpha_s * p.S_I}};
  out[5] = {{1, 0, 1},
            {p.C_I - p.C_I * p.sigma1 - p.alpha_s * p.S_I,
             e5_2 + p.beta_s * p.S_P,
             p.D_G - p.eta * p.F_G_I + p.alpha_s * p.S_I}};
  out[6] = {{1, 1, 0}, {-e3_1, -e5_2, -p.D_G + gain}};
  out[7] = {{1, 1, 1},
            {-e3_1 - p.alpha_s * p.S_I, -e5_2 - p.beta_s * p.S_P,
             p.D_G - gain}};
  return out;
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::stable: return "stable";
    case Stability::unstable: return "unstable";
    case Stability::saddle: return "saddle";
    case Stability::nonhyperbolic: return "nonhyperbolic";
  }
  return "?";
}

std::array<EquilibriumClass, 8> classify_equilibria(const GameParams& p) {
  const auto eigs = vertex_eigenvalues(p);
  std::array<EquilibriumClass, 8> out;
  for (std::size_t k = 0; k < 8; ++k) {
    const auto& l = eigs[k].lambda;
    Stability cls;
    if (std::any_of(l.begin(), l.end(),
                    [](double v) { return std::abs(v) <= kEigTol; })) {
      cls = Stability::nonhyperbolic;
    } else if (std::all_of(l.begin(), l.end(),
                           [](double v) { return v < -kEigTol; })) {
      cls = Stability::stable;
    } else if (std::all_of(l.begin(), l.end(),
                           [](double v) { return v > kEigTol; })) {
      cls = Stability::unstable;
    } else {
      cls = Stability::saddle;
    }
    out[k] = {eigs[k].vertex, l, cls};
  }
  return out;
}

ConditionsResult check_conditions(const GameParams& p, StableTarget target) {
  ConditionsResult res;
  const double sub_I = p.alpha_s * p.S_I;
  const double sub_P = p.beta_s * p.S_P;
  const double lhs_I = p.Q_I;
  const double lhs_P = p.Q_P;
  double rhs_I = p.h * p.W_I + p.q2 * p.R_I_lo + p.q1 * p.R_I_hi -
                 p.R_I * p.u_I - p.C_P * p.sigma2;
  double rhs_P = p.f * p.W_P + p.p2 * p.R_P_lo + p.p1 * p.R_P_hi -
                 p.R_P * p.u_P - p.C_I * p.sigma1;
  const double gain = p.eta * p.F_G_I + p.eta * p.F_G_P - sub_I - sub_P;
  if (target == StableTarget::E8) {
    rhs_I -= sub_I;
    rhs_P -= sub_P;
  }

  auto add = [&](std::string desc, double lhs, double rhs, bool holds) {
    res.conditions.push_back({std::move(desc), lhs, rhs, holds});
  };
  add("Q_I exceeds the shipper's net self-search advantage", lhs_I, rhs_I,
      lhs_I - rhs_I > kEigTol);
  add("Q_P exceeds the carrier's net self-search advantage", lhs_P, rhs_P,
      lhs_P - rhs_P > kEigTol);
  if (target == StableTarget::E7) {
    add("D_G exceeds the net reputation gain of subsidizing", p.D_G, gain,
        p.D_G - gain > kEigTol);
  } else {
    add("D_G is below the net reputation gain of subsidizing", p.D_G, gain,
        gain - p.D_G > kEigTol);
  }
  const double r1 = p.C_I - p.C_I * p.sigma1;
  const double r2 = p.C_P - p.C_P * p.sigma2;
  add("one side bears the full waiting cost (sigma1 = 1 or sigma2 = 1)",
      std::min(std::abs(r1), std::abs(r2)), 0.0,
      std::abs(r1) <= kEigTol || std::abs(r2) <= kEigTol);

  res.holds = std::all_of(res.conditions.begin(), res.conditions.end(),
                          [](const ConditionReport& c) { return c.holds; });
  return res;
}

std::vector<TrajectoryPoint> integrate(const GameState& start,
                                       const GameParams& p,
                                       const IntegrateOptions& opts) {
  if (!(opts.dt > 0)) throw validation_error("integrate: dt must be > 0");
  if (opts.sample_stride < 1)
    throw validation_error("integrate: sample stride must be >= 1");
  std::vector<TrajectoryPoint> traj;
  GameState s = clamp01(start);
  double t = 0.0;
  traj.push_back({t, s});
  const long steps = long(std::ceil(opts.t_max / opts.dt - 1e-12));
  for (long k = 0; k < steps; ++k) {
    const auto k1 = replicator_rhs(s, p);
    const GameState s2{s.x + 0.5 * opts.dt * k1[0], s.y + 0.5 * opts.dt * k1[1],
                       s.z + 0.5 * opts.dt * k1[2]};
    const auto k2 = replicator_rhs(s2, p);
    const GameState s3{s.x + 0.5 * opts.dt * k2[0], s.y + 0.5 * opts.dt * k2[1],
                       s.z + 0.5 * opts.dt * k2[2]};
    const auto k3 = replicator_rhs(s3, p);
    const GameState s4{s.x + opts.dt * k3[0], s.y + opts.dt * k3[1],
                       s.z + opts.dt * k3[2]};
    const auto k4 = replicator_rhs(s4, p);
    s = clamp01({s.x + opts.dt / 6.0 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]),
                 s.y + opts.dt / 6.0 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]),
                 s.z + opts.dt / 6.0 * (k1[2] + 2 * k2[2] + 2 * k3[2] + k4[2])});
    t = (k + 1) * opts.dt;
    if ((k + 1) % opts.sample_stride == 0 || k + 1 == steps) {
      traj.push_back({t, s});
    }
    if (inf_norm(replicator_rhs(s, p)) < opts.settle_tol) {
      if (traj.back().t != t) traj.push_back({t, s});
      break;
    }
  }
  return traj;
}

GameState integrate_terminal(const GameState& start, const GameParams& p,
                             const IntegrateOptions& opts) {
  IntegrateOptions o = opts;
  o.sample_stride = std::numeric_limits<int>::max();
  return integrate(start, p, o).back().state;
}

std::string to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::alpha_s: return "alpha";
    case SweepParameter::beta_s: return "beta";
    case SweepParameter::u_I: return "u_I";
    case SweepParameter::u_P: return "u_P";
    case SweepParameter::eta: return "eta";
  }
  return "?";
}

SweepResult parameter_sweep(const GameParams& base, SweepParameter name,
                            const std::vector<double>& values,
                            const SweepOptions& opts) {
  SweepResult res;
  res.parameter = name;
  for (const double v : values) {
    GameParams p = base;
    switch (name) {
      case SweepParameter::alpha_s: p.alpha_s = v; break;
      case SweepParameter::beta_s: p.beta_s = v; break;
      case SweepParameter::u_I: p.u_I = v; break;
      case SweepParameter::u_P: p.u_P = v; break;
      case SweepParameter::eta: p.eta = v; break;
    }
    validate(p);

    const auto traj = integrate(opts.start, p, opts.integrate);
    SweepRow row;
    row.value = v;
    row.terminal = traj.back().state;

    const GameState snap{std::round(row.terminal.x), std::round(row.terminal.y),
                         std::round(row.terminal.z)};
    const double dist = std::max(
        {std::abs(row.terminal.x - snap.x), std::abs(row.terminal.y - snap.y),
         std::abs(row.terminal.z - snap.z)});
    if (dist <= opts.vertex_tol) {
      row.vertex = snap;
      row.settle_time = traj.back().t;
      for (auto it = traj.rbegin(); it != traj.rend(); ++it) {
        const double d = std::max({std::abs(it->state.x - snap.x),
                                   std::abs(it->state.y - snap.y),
                                   std::abs(it->state.z - snap.z)});
        if (d > opts.vertex_tol) break;
        row.settle_time = it->t;
      }
    }
    res.rows.push_back(row);
  }

  for (std::size_t k = 1; k < res.rows.size(); ++k) {
    const auto& a = res.rows[k - 1].vertex;
    const auto& b = res.rows[k].vertex;
    const bool differ =
        a.has_value() != b.has_value() ||
        (a && b && (a->x != b->x || a->y != b->y || a->z != b->z));
    if (differ) {
      res.critical_intervals.emplace_back(res.rows[k - 1].value,
                                          res.rows[k].value);
    }
  }
  return res;
}

}  // namespace fairmatch::evogame
