#include "fairmatch/matcher.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fairmatch/hungarian.hpp"
#include "fairmatch/satisfaction.hpp"

namespace fairmatch::matcher {

namespace {

constexpr double kObjTol = 1e-9;
constexpr double kNoBound = -1e300;
const double kInf = std::numeric_limits<double>::infinity();

double round2(double x) { return std::round(x * 100.0) / 100.0; }

// Depth-first exact search over shippers, carriers tried in ascending index
// so the first incumbent among value ties is the lexicographically smallest
// sorted pair list. Upper bounds: per-row maxima, refined by a Kuhn-Munkres
// relaxation on the remaining block.
class BranchAndBound {
 public:
  BranchAndBound(const Matrix& alpha, const Matrix& beta, double c1, double c2,
                 const std::vector<std::vector<bool>>& feasible, double lb1,
                 double lb2, bool match_all)
      : alpha_(alpha),
        beta_(beta),
        feasible_(feasible),
        m_(int(alpha.rows())),
        n_(int(alpha.cols())),
        c1_(c1),
        c2_(c2),
        lb1_(lb1),
        lb2_(lb2),
        match_all_(match_all) {
    cur_.assign(m_, -1);
    used_.assign(n_, 0);
  }

  AssignmentOutcome run() {
    dfs(0, 0.0, 0.0, 0.0);
    AssignmentOutcome out;
    if (!found_) {
      out.status = SolveStatus::infeasible;
      out.message = (lb1_ > kNoBound || lb2_ > kNoBound)
                        ? "no matching satisfies the objective lower bounds"
                        : "no complete matching exists over the feasible pairs";
      return out;
    }
    out.status = SolveStatus::optimal;
    out.carrier_of = best_;
    out.objective = best_obj_;
    for (int i = 0; i < m_; ++i) {
      if (best_[i] >= 0) {
        out.f1 += alpha_(i, best_[i]);
        out.f2 += beta_(best_[i], i);
      }
    }
    return out;
  }

 private:
  double w(int i, int j) const { return c1_ * alpha_(i, j) + c2_ * beta_(j, i); }

  void dfs(int i, double obj, double f1, double f2) {
    if (i == m_) {
      if (f1 < lb1_ - kObjTol || f2 < lb2_ - kObjTol) return;
      if (!found_ || obj > best_obj_ + kObjTol) {
        found_ = true;
        best_obj_ = obj;
        best_ = cur_;
      }
      return;
    }

    // per-row optimistic remainders for the objective and both side sums
    double opt_w = 0.0, opt_f1 = 0.0, opt_f2 = 0.0;
    for (int r = i; r < m_; ++r) {
      double rw = -kInf, r1 = -kInf, r2 = -kInf;
      for (int j = 0; j < n_; ++j) {
        if (used_[j] || !feasible_[r][j]) continue;
        rw = std::max(rw, w(r, j));
        r1 = std::max(r1, alpha_(r, j));
        r2 = std::max(r2, beta_(j, r));
      }
      if (rw == -kInf) {
        if (match_all_) return;  // this shipper cannot be completed
        rw = r1 = r2 = 0.0;
      } else if (!match_all_) {
        rw = std::max(rw, 0.0);
        r1 = std::max(r1, 0.0);
        r2 = std::max(r2, 0.0);
      }
      opt_w += rw;
      opt_f1 += r1;
      opt_f2 += r2;
    }
    if (f1 + opt_f1 < lb1_ - kObjTol || f2 + opt_f2 < lb2_ - kObjTol) return;
    if (found_ && obj + opt_w <= best_obj_ + kObjTol) return;

    // tighter bound from the assignment relaxation of the remaining block
    if (match_all_ && m_ - i > 1) {
      const int rem = m_ - i;
      std::vector<int> cols;
      for (int j = 0; j < n_; ++j)
        if (!used_[j]) cols.push_back(j);
      if (int(cols.size()) < rem) return;
      Matrix sub(rem, cols.size());
      std::vector<std::vector<bool>> forbid(rem,
                                            std::vector<bool>(cols.size()));
      for (int r = 0; r < rem; ++r) {
        for (std::size_t k = 0; k < cols.size(); ++k) {
          sub(r, k) = w(i + r, cols[k]);
          forbid[r][k] = !feasible_[i + r][cols[k]];
        }
      }
      const auto relax = hungarian_max(sub, &forbid);
      if (!relax) return;
      if (found_ && obj + relax->value <= best_obj_ + kObjTol) return;
    }

    for (int j = 0; j < n_; ++j) {
      if (used_[j] || !feasible_[i][j]) continue;
      used_[j] = 1;
      cur_[i] = j;
      dfs(i + 1, obj + w(i, j), f1 + alpha_(i, j), f2 + beta_(j, i));
      used_[j] = 0;
      cur_[i] = -1;
    }
    if (!match_all_) dfs(i + 1, obj, f1, f2);
  }

  const Matrix& alpha_;
  const Matrix& beta_;
  const std::vector<std::vector<bool>>& feasible_;
  int m_, n_;
  double c1_, c2_, lb1_, lb2_;
  bool match_all_;

  std::vector<int> cur_, best_;
  std::vector<char> used_;
  double best_obj_ = -kInf;
  bool found_ = false;
};

MatchingScheme scheme_from(const AssignmentOutcome& o) {
  MatchingScheme s;
  for (int i = 0; i < int(o.carrier_of.size()); ++i) {
    if (o.carrier_of[i] >= 0) s.pairs.emplace_back(i, o.carrier_of[i]);
  }
  s.f1 = o.f1;
  s.f2 = o.f2;
  return s;
}

double span1(const FuzzyBounds& b) { return b.f1_hi - b.f1_lo; }
double span2(const FuzzyBounds& b) { return b.f2_hi - b.f2_lo; }

}  // namespace

PreparedProblem prepare(const MatchingInstance& inst) {
  PreparedProblem p;
  if (inst.has_matrices()) {
    p.alpha = *inst.alpha;
    p.beta = *inst.beta;
    p.feasible.assign(p.alpha.rows(),
                      std::vector<bool>(p.alpha.cols(), true));
  } else {
    auto [a, b] = satisfaction::aggregate(inst);
    p.alpha = std::move(a);
    p.beta = std::move(b);
    p.feasible = satisfaction::feasibility_screen(inst);
  }
  return p;
}

AssignmentOutcome solve_assignment(
    const Matrix& alpha, const Matrix& beta, double c1, double c2,
    const std::vector<std::vector<bool>>& feasible,
    std::optional<std::pair<double, double>> lower_bounds,
    bool match_all_shippers) {
  const double lb1 = lower_bounds ? lower_bounds->first : kNoBound;
  const double lb2 = lower_bounds ? lower_bounds->second : kNoBound;
  BranchAndBound bnb(alpha, beta, c1, c2, feasible, lb1, lb2,
                     match_all_shippers);
  return bnb.run();
}

FuzzyBounds compute_bounds(const PreparedProblem& prob, double gamma,
                           bool match_all_shippers) {
  const auto max1 = solve_assignment(prob.alpha, prob.beta, 1, 0, prob.feasible,
                                     std::nullopt, match_all_shippers);
  const auto min1 = solve_assignment(prob.alpha, prob.beta, -1, 0, prob.feasible,
                                     std::nullopt, match_all_shippers);
  const auto max2 = solve_assignment(prob.alpha, prob.beta, 0, 1, prob.feasible,
                                     std::nullopt, match_all_shippers);
  const auto min2 = solve_assignment(prob.alpha, prob.beta, 0, -1, prob.feasible,
                                     std::nullopt, match_all_shippers);
  if (max1.status != SolveStatus::optimal || min1.status != SolveStatus::optimal ||
      max2.status != SolveStatus::optimal || min2.status != SolveStatus::optimal) {
    throw solve_error("empty feasible region: no admissible matching exists");
  }
  FuzzyBounds b;
  b.f1_hi = max1.f1;
  b.f1_lo = min1.f1;
  b.f2_hi = max2.f2;
  b.f2_lo = min2.f2;
  b.f1_ul = b.f1_hi - gamma * (b.f1_hi - b.f1_lo);
  b.f2_ul = b.f2_hi - gamma * (b.f2_hi - b.f2_lo);
  return b;
}

MembershipValue membership(double f, const FuzzyBounds& b, int which) {
  const double lo = which == 1 ? b.f1_lo : b.f2_lo;
  const double hi = which == 1 ? b.f1_hi : b.f2_hi;
  const double ul = which == 1 ? b.f1_ul : b.f2_ul;
  MembershipValue r;
  if (hi == lo) {
    r.u = 1.0;
    r.v = 0.0;
  } else {
    r.u = std::clamp((f - lo) / (hi - lo), 0.0, 1.0);
    if (f >= ul) {
      r.v = 0.0;
    } else if (f <= lo) {
      r.v = 1.0;
    } else {
      r.v = (ul - f) / (ul - lo);
    }
  }
  r.s = r.u - r.v;
  return r;
}

void annotate(MatchingScheme& s, const FuzzyBounds& b) {
  const auto m1 = membership(s.f1, b, 1);
  const auto m2 = membership(s.f2, b, 2);
  s.u1 = m1.u;
  s.v1 = m1.v;
  s.s1 = m1.s;
  s.u2 = m2.u;
  s.v2 = m2.v;
  s.s2 = m2.s;
  if (std::abs(s.s2) > 1e-15) {
    s.eta = s.s1 / s.s2;
  } else if (s.u2 > 1e-15) {
    s.eta = s.u1 / s.u2;
  } else {
    s.eta = std::numeric_limits<double>::quiet_NaN();
  }
}

Lp3Result solve_lp3(const PreparedProblem& prob, const FuzzyBounds& bounds,
                    std::optional<double> theta_bar1,
                    std::optional<double> theta_bar2,
                    bool match_all_shippers) {
  const double sp1 = span1(bounds), sp2 = span2(bounds);
  const double c1 = sp1 > 0 ? 1.0 / sp1 : 0.0;
  const double c2 = sp2 > 0 ? 1.0 / sp2 : 0.0;
  double lb1 = bounds.f1_ul, lb2 = bounds.f2_ul;
  if (theta_bar1 && sp1 > 0) lb1 = std::max(lb1, bounds.f1_lo + *theta_bar1 * sp1);
  if (theta_bar2 && sp2 > 0) lb2 = std::max(lb2, bounds.f2_lo + *theta_bar2 * sp2);

  Lp3Result res;
  const auto o = solve_assignment(prob.alpha, prob.beta, c1, c2, prob.feasible,
                                  std::make_pair(lb1, lb2), match_all_shippers);
  if (o.status != SolveStatus::optimal) {
    res.status = SolveStatus::infeasible;
    res.message =
        "no matching satisfies the dissatisfaction limits; a larger gamma "
        "loosens f^UL";
    return res;
  }
  res.status = SolveStatus::optimal;
  res.scheme = scheme_from(o);
  annotate(res.scheme, bounds);
  // case-2 structure: the optimum sits above both limits, so v vanishes
  if (res.scheme.v1 > kObjTol || res.scheme.v2 > kObjTol) {
    throw std::logic_error("LP3 optimum returned nonzero non-membership");
  }
  return res;
}

InteractiveResult interactive_solve(const MatchingInstance& inst,
                                    const SolverConfig& cfg) {
  if (cfg.theta_step <= 0) throw validation_error("theta_step must be > 0");
  if (cfg.max_iterations < 1)
    throw validation_error("max_iterations must be >= 1");

  const PreparedProblem prob = prepare(inst);
  InteractiveResult res;
  res.bounds = compute_bounds(prob, inst.gamma, cfg.match_all_shippers);

  std::optional<double> th1, th2;
  double best_violation = kInf;
  for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
    const auto lp3 = solve_lp3(prob, res.bounds, th1, th2, cfg.match_all_shippers);
    InteractiveIteration entry;
    entry.iteration = iter;
    entry.theta_bar1 = th1;
    entry.theta_bar2 = th2;
    entry.status = lp3.status;
    if (lp3.status != SolveStatus::optimal) {
      res.log.push_back(entry);
      res.message = iter == 1 ? lp3.message
                              : "fairness floors became infeasible before eta "
                                "reached the interval";
      res.status = iter == 1 ? SolveStatus::infeasible : SolveStatus::optimal;
      return res;
    }
    const double eta = lp3.scheme.eta;
    entry.scheme = lp3.scheme;
    entry.eta = eta;
    res.log.push_back(entry);
    res.status = SolveStatus::optimal;

    if (eta >= inst.eta_lo - kObjTol && eta <= inst.eta_hi + kObjTol) {
      res.fairness_met = true;
      res.scheme = lp3.scheme;
      return res;
    }
    const double violation =
        eta < inst.eta_lo ? inst.eta_lo - eta : eta - inst.eta_hi;
    if (violation < best_violation) {
      best_violation = violation;
      res.scheme = lp3.scheme;
    }
    if (eta < inst.eta_lo) {
      th1 = lp3.scheme.u1 + cfg.theta_step;
    } else {
      th2 = lp3.scheme.u2 + cfg.theta_step;
    }
  }
  res.message = "iteration budget exhausted before eta reached the interval";
  return res;
}

std::vector<GammaSweepRow> gamma_sweep(const MatchingInstance& inst,
                                       const std::vector<double>& gammas,
                                       Side side,
                                       const GammaSweepOptions& opts) {
  const PreparedProblem prob = prepare(inst);
  const FuzzyBounds base = compute_bounds(prob, inst.gamma, opts.match_all_shippers);
  const double ref1 = opts.round_reference_ul ? round2(base.f1_ul) : base.f1_ul;
  const double ref2 = opts.round_reference_ul ? round2(base.f2_ul) : base.f2_ul;

  std::vector<GammaSweepRow> rows;
  rows.reserve(gammas.size());
  for (const double g : gammas) {
    if (!(g > 0.0 && g <= 1.0)) {
      throw validation_error("gamma_sweep: gamma = " + std::to_string(g) +
                             " outside (0,1]");
    }
    FuzzyBounds bg = base;
    GammaSweepRow row;
    row.gamma = g;
    if (side == Side::shipper) {
      bg.f1_ul = base.f1_hi - g * (base.f1_hi - base.f1_lo);
      bg.f2_ul = ref2;
      row.swept_ul = bg.f1_ul;
    } else {
      bg.f2_ul = base.f2_hi - g * (base.f2_hi - base.f2_lo);
      bg.f1_ul = ref1;
      row.swept_ul = bg.f2_ul;
    }
    const auto lp3 = solve_lp3(prob, bg, std::nullopt, std::nullopt,
                               opts.match_all_shippers);
    row.status = lp3.status;
    if (lp3.status == SolveStatus::optimal) {
      row.scheme = lp3.scheme;
      row.overall = lp3.scheme.s1 + lp3.scheme.s2;
      row.meets_fairness = lp3.scheme.eta >= inst.eta_lo - kObjTol &&
                           lp3.scheme.eta <= inst.eta_hi + kObjTol;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

// lower bounds realizing "both objectives at guaranteed level t"
std::pair<double, double> level_bounds(double t, const FuzzyBounds& b,
                                       ObjectiveSpace space) {
  if (space == ObjectiveSpace::raw) return {t, t};
  const double sp1 = span1(b), sp2 = span2(b);
  return {sp1 > 0 ? b.f1_lo + t * sp1 : kNoBound,
          sp2 > 0 ? b.f2_lo + t * sp2 : kNoBound};
}

BenchmarkResult max_min_solve(const PreparedProblem& prob,
                              const FuzzyBounds& bounds,
                              const SolverConfig& cfg) {
  const ObjectiveSpace space = cfg.benchmark_space;
  double t_lo, t_hi;
  if (space == ObjectiveSpace::raw) {
    t_lo = std::min(bounds.f1_lo, bounds.f2_lo);
    t_hi = std::min(bounds.f1_hi, bounds.f2_hi);
  } else {
    t_lo = 0.0;
    t_hi = 1.0;
  }
  const double w1 = space == ObjectiveSpace::raw
                        ? 1.0
                        : (span1(bounds) > 0 ? 1.0 / span1(bounds) : 0.0);
  const double w2 = space == ObjectiveSpace::raw
                        ? 1.0
                        : (span2(bounds) > 0 ? 1.0 / span2(bounds) : 0.0);

  auto feasible_at = [&](double t) {
    const auto lb = level_bounds(t, bounds, space);
    const auto o = solve_assignment(prob.alpha, prob.beta, w1, w2,
                                    prob.feasible, lb, cfg.match_all_shippers);
    return o.status == SolveStatus::optimal;
  };

  BenchmarkResult res;
  if (!feasible_at(t_lo)) {
    res.message = "no admissible matching exists";
    return res;
  }
  while (t_hi - t_lo > 1e-6) {
    const double mid = 0.5 * (t_lo + t_hi);
    if (feasible_at(mid)) {
      t_lo = mid;
    } else {
      t_hi = mid;
    }
  }
  const auto lb = level_bounds(t_lo, bounds, space);
  const auto o = solve_assignment(prob.alpha, prob.beta, w1, w2, prob.feasible,
                                  lb, cfg.match_all_shippers);
  res.status = SolveStatus::optimal;
  res.scheme = scheme_from(o);
  annotate(res.scheme, bounds);
  return res;
}

BenchmarkResult ideal_point_solve(const PreparedProblem& prob,
                                  const FuzzyBounds& bounds,
                                  const SolverConfig& cfg) {
  // exact nondominated set by epsilon-constraint; the distance minimizer is
  // always nondominated
  std::vector<std::pair<double, double>> frontier;
  double b2 = kNoBound;
  for (int guard = 0; guard < 10000; ++guard) {
    const auto s1 = solve_assignment(prob.alpha, prob.beta, 1, 0, prob.feasible,
                                     std::make_pair(kNoBound, b2),
                                     cfg.match_all_shippers);
    if (s1.status != SolveStatus::optimal) break;
    const auto s2 = solve_assignment(
        prob.alpha, prob.beta, 0, 1, prob.feasible,
        std::make_pair(s1.f1 - kObjTol, b2), cfg.match_all_shippers);
    frontier.emplace_back(s2.f1, s2.f2);
    b2 = s2.f2 + 1e-7;
  }

  BenchmarkResult res;
  if (frontier.empty()) {
    res.message = "no admissible matching exists";
    return res;
  }
  auto dist2 = [&](const std::pair<double, double>& p) {
    if (cfg.benchmark_space == ObjectiveSpace::raw) {
      const double d1 = bounds.f1_hi - p.first;
      const double d2 = bounds.f2_hi - p.second;
      return d1 * d1 + d2 * d2;
    }
    const double d1 = 1.0 - membership(p.first, bounds, 1).u;
    const double d2 = 1.0 - membership(p.second, bounds, 2).u;
    return d1 * d1 + d2 * d2;
  };
  std::size_t pick = 0;
  for (std::size_t k = 1; k < frontier.size(); ++k) {
    if (dist2(frontier[k]) < dist2(frontier[pick]) - 1e-15) pick = k;
  }
  const auto o = solve_assignment(
      prob.alpha, prob.beta, 1, 1, prob.feasible,
      std::make_pair(frontier[pick].first - kObjTol,
                     frontier[pick].second - kObjTol),
      cfg.match_all_shippers);
  res.status = SolveStatus::optimal;
  res.scheme = scheme_from(o);
  annotate(res.scheme, bounds);
  return res;
}

BenchmarkResult linear_weighted_solve(const PreparedProblem& prob,
                                      const FuzzyBounds& bounds,
                                      const SolverConfig& cfg) {
  if (cfg.lambda1 < 0 || cfg.lambda2 < 0 ||
      std::abs(cfg.lambda1 + cfg.lambda2 - 1.0) > kValidationTol) {
    throw validation_error("linear weights must be nonnegative and sum to 1");
  }
  double c1 = cfg.lambda1, c2 = cfg.lambda2;
  if (cfg.benchmark_space == ObjectiveSpace::membership) {
    c1 = span1(bounds) > 0 ? cfg.lambda1 / span1(bounds) : 0.0;
    c2 = span2(bounds) > 0 ? cfg.lambda2 / span2(bounds) : 0.0;
  }
  BenchmarkResult res;
  const auto o = solve_assignment(prob.alpha, prob.beta, c1, c2, prob.feasible,
                                  std::nullopt, cfg.match_all_shippers);
  if (o.status != SolveStatus::optimal) {
    res.message = o.message;
    return res;
  }
  res.status = SolveStatus::optimal;
  res.scheme = scheme_from(o);
  annotate(res.scheme, bounds);
  return res;
}

}  // namespace

BenchmarkResult benchmark_solve(const MatchingInstance& inst, Method method,
                                const SolverConfig& cfg) {
  const PreparedProblem prob = prepare(inst);
  const FuzzyBounds bounds = compute_bounds(prob, inst.gamma, cfg.match_all_shippers);
  switch (method) {
    case Method::max_min:
      return max_min_solve(prob, bounds, cfg);
    case Method::ideal_point:
      return ideal_point_solve(prob, bounds, cfg);
    case Method::linear_weighted:
      return linear_weighted_solve(prob, bounds, cfg);
    default:
      throw validation_error("benchmark_solve expects a benchmark method");
  }
}

std::vector<CompareRow> compare_methods(const MatchingInstance& inst,
                                        const SolverConfig& cfg) {
  std::vector<CompareRow> rows;
  for (const auto& [method, name] :
       {std::pair{Method::max_min, "max_min"},
        std::pair{Method::ideal_point, "ideal_point"},
        std::pair{Method::linear_weighted, "linear_weighted"}}) {
    const auto r = benchmark_solve(inst, method, cfg);
    rows.push_back({name, r.status, r.scheme});
  }
  const auto prop = interactive_solve(inst, cfg);
  rows.push_back({"fuzzy_interactive", prop.status, prop.scheme});
  return rows;
}

}  // namespace fairmatch::matcher
