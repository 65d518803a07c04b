// Command-line front end: matching, sensitivity, method comparison, RSDAT
// weighting, and the tripartite game simulations. All tabular output is CSV
// with a header row; reports are also available as structured text via
// --format json-like. Runs are deterministic for identical inputs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairmatch/evogame.hpp"
#include "fairmatch/instance_io.hpp"
#include "fairmatch/matcher.hpp"
#include "fairmatch/rsdat.hpp"

namespace {

using nlohmann::ordered_json;
namespace fm = fairmatch;

constexpr int kExitValidation = 1;
constexpr int kExitInfeasible = 2;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    double a = 0, step = 0, b = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &a, &step, &b) != 3 || step <= 0) {
      throw fm::validation_error("bad range \"" + text + "\", expected start:step:end");
    }
    for (int k = 0;; ++k) {
      const double v = a + k * step;
      if (v > b + step * 1e-6) break;
      out.push_back(v);
    }
  } else {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      out.push_back(std::stod(tok));
    }
  }
  if (out.empty()) throw fm::validation_error("no values in \"" + text + "\"");
  return out;
}

std::string pairs_string(const fm::MatchingScheme& s) {
  std::string out;
  for (const auto& [i, j] : s.pairs) {
    out += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  }
  return out;
}

ordered_json scheme_json(const fm::MatchingScheme& s) {
  ordered_json pairs = ordered_json::array();
  for (const auto& [i, j] : s.pairs) pairs.push_back({i + 1, j + 1});
  return {{"pairs", std::move(pairs)}, {"f1", s.f1}, {"f2", s.f2},
          {"u1", s.u1}, {"v1", s.v1}, {"s1", s.s1},
          {"u2", s.u2}, {"v2", s.v2}, {"s2", s.s2}, {"eta", s.eta}};
}

// writes to the path, or stdout when empty
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw fm::validation_error("cannot open output file: " + path);
  out << text;
}

fm::evogame::GameParams load_scenario(const std::string& scenario,
                                      std::optional<double> eta_override) {
  fm::evogame::GameParams p;
  if (scenario == "array1") {
    p = fm::evogame::array1();
  } else if (scenario == "array2") {
    p = fm::evogame::array2();
  } else {
    p = fm::io::load_game_params(scenario);
  }
  if (eta_override) {
    p.eta = *eta_override;
    fm::evogame::validate(p);
  }
  return p;
}

fm::matcher::Method parse_method(const std::string& name) {
  if (name == "fuzzy") return fm::matcher::Method::fuzzy_interactive;
  if (name == "maxmin") return fm::matcher::Method::max_min;
  if (name == "ideal") return fm::matcher::Method::ideal_point;
  if (name == "linear") return fm::matcher::Method::linear_weighted;
  throw fm::validation_error("unknown method \"" + name + "\"");
}

fm::evogame::SweepParameter parse_sweep_param(const std::string& name) {
  using P = fm::evogame::SweepParameter;
  if (name == "alpha" || name == "alpha_s") return P::alpha_s;
  if (name == "beta" || name == "beta_s") return P::beta_s;
  if (name == "uI" || name == "u_I") return P::u_I;
  if (name == "uP" || name == "u_P") return P::u_P;
  if (name == "eta") return P::eta;
  throw fm::validation_error("unknown sweep parameter \"" + name + "\"");
}

struct MatchArgs {
  std::string instance, method = "fuzzy", out, format = "text", space = "f";
  std::optional<double> gamma, eta_lo, eta_hi;
  double theta_step = 0.02;
  int max_iterations = 50;
  double lambda1 = 0.5, lambda2 = 0.5;
};

fm::MatchingInstance load_with_overrides(const MatchArgs& a) {
  fm::MatchingInstance inst = fm::io::load_instance(a.instance);
  if (a.gamma) inst.gamma = *a.gamma;
  if (a.eta_lo) inst.eta_lo = *a.eta_lo;
  if (a.eta_hi) inst.eta_hi = *a.eta_hi;
  fm::validate(inst);
  return inst;
}

fm::matcher::SolverConfig solver_config(const MatchArgs& a) {
  fm::matcher::SolverConfig cfg;
  cfg.method = parse_method(a.method);
  cfg.theta_step = a.theta_step;
  cfg.max_iterations = a.max_iterations;
  cfg.lambda1 = a.lambda1;
  cfg.lambda2 = a.lambda2;
  cfg.benchmark_space = a.space == "u" ? fm::matcher::ObjectiveSpace::membership
                                       : fm::matcher::ObjectiveSpace::raw;
  return cfg;
}

int run_match(const MatchArgs& a) {
  const fm::MatchingInstance inst = load_with_overrides(a);
  const auto cfg = solver_config(a);

  fm::MatchingScheme scheme;
  ordered_json report;
  bool failed = false;
  if (cfg.method == fm::matcher::Method::fuzzy_interactive) {
    const auto res = fm::matcher::interactive_solve(inst, cfg);
    if (res.status != fm::matcher::SolveStatus::optimal) {
      std::cerr << "match: " << res.message << "\n";
      return kExitInfeasible;
    }
    scheme = res.scheme;
    failed = !res.fairness_met;
    report["method"] = "fuzzy_interactive";
    report["fairness_met"] = res.fairness_met;
    if (!res.message.empty()) report["note"] = res.message;
    report["bounds"] = {{"f1_lo", res.bounds.f1_lo}, {"f1_hi", res.bounds.f1_hi},
                        {"f2_lo", res.bounds.f2_lo}, {"f2_hi", res.bounds.f2_hi},
                        {"f1_ul", res.bounds.f1_ul}, {"f2_ul", res.bounds.f2_ul}};
    ordered_json iters = ordered_json::array();
    for (const auto& it : res.log) {
      ordered_json e = {{"iteration", it.iteration}, {"eta", it.eta}};
      if (it.theta_bar1) e["theta_bar1"] = *it.theta_bar1;
      if (it.theta_bar2) e["theta_bar2"] = *it.theta_bar2;
      e["feasible"] = it.status == fm::matcher::SolveStatus::optimal;
      if (it.status == fm::matcher::SolveStatus::optimal)
        e["pairs"] = pairs_string(it.scheme);
      iters.push_back(std::move(e));
    }
    report["iterations"] = std::move(iters);
  } else {
    const auto res = fm::matcher::benchmark_solve(inst, cfg.method, cfg);
    if (res.status != fm::matcher::SolveStatus::optimal) {
      std::cerr << "match: " << res.message << "\n";
      return kExitInfeasible;
    }
    scheme = res.scheme;
    report["method"] = a.method;
  }
  report["scheme"] = scheme_json(scheme);

  if (!a.out.empty()) fm::io::write_scheme(scheme, a.out);
  if (a.format == "json-like") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "pairs " << pairs_string(scheme) << "\n"
              << "f1 " << fmt(scheme.f1) << "  f2 " << fmt(scheme.f2) << "\n"
              << "s1 " << fmt2(scheme.s1) << "  s2 " << fmt2(scheme.s2)
              << "  overall " << fmt2(scheme.s1 + scheme.s2) << "  eta "
              << fmt2(scheme.eta) << "\n";
    if (report.contains("fairness_met")) {
      std::cout << "fairness_met " << (report["fairness_met"].get<bool>() ? "yes" : "no")
                << "\n";
    }
  }
  return failed ? kExitInfeasible : 0;
}

int run_sensitivity(const std::string& instance_path, const std::string& side,
                    const std::string& gammas, const std::string& out) {
  const fm::MatchingInstance inst = fm::io::load_instance(instance_path);
  const auto side_e = side == "carrier" ? fm::matcher::Side::carrier
                                        : fm::matcher::Side::shipper;
  if (side != "carrier" && side != "shipper") {
    throw fm::validation_error("side must be shipper or carrier");
  }
  const auto rows = fm::matcher::gamma_sweep(inst, parse_values(gammas), side_e);

  std::string csv =
      "side,gamma,f_ul,status,f1,f2,s1,s2,overall,eta,overall_2dp,eta_2dp,"
      "meets_fairness,pairs\n";
  for (const auto& r : rows) {
    csv += side + "," + fmt(r.gamma) + "," + fmt(r.swept_ul) + ",";
    if (r.status != fm::matcher::SolveStatus::optimal) {
      csv += "infeasible,,,,,,,,,,\n";
      continue;
    }
    csv += "optimal," + fmt(r.scheme.f1) + "," + fmt(r.scheme.f2) + "," +
           fmt(r.scheme.s1) + "," + fmt(r.scheme.s2) + "," + fmt(r.overall) +
           "," + fmt(r.scheme.eta) + "," + fmt2(r.overall) + "," +
           fmt2(r.scheme.eta) + "," + (r.meets_fairness ? "yes" : "no") + "," +
           pairs_string(r.scheme) + "\n";
  }
  emit(out, csv);
  return 0;
}

int run_compare(const std::string& instance_path, const std::string& out,
                const std::string& space) {
  const fm::MatchingInstance inst = fm::io::load_instance(instance_path);
  fm::matcher::SolverConfig cfg;
  cfg.benchmark_space = space == "u" ? fm::matcher::ObjectiveSpace::membership
                                     : fm::matcher::ObjectiveSpace::raw;
  const auto rows = fm::matcher::compare_methods(inst, cfg);

  std::string csv =
      "method,pairs,f1,f2,f1_plus_f2,s1,s2,s1_plus_s2,eta,"
      "f1_2dp,f2_2dp,s1_2dp,s2_2dp,overall_2dp,eta_2dp\n";
  for (const auto& r : rows) {
    if (r.status != fm::matcher::SolveStatus::optimal) {
      csv += r.method + ",infeasible,,,,,,,,,,,,,\n";
      continue;
    }
    const auto& s = r.scheme;
    csv += r.method + "," + pairs_string(s) + "," + fmt(s.f1) + "," + fmt(s.f2) +
           "," + fmt(s.f1 + s.f2) + "," + fmt(s.s1) + "," + fmt(s.s2) + "," +
           fmt(s.s1 + s.s2) + "," + fmt(s.eta) + "," + fmt2(s.f1) + "," +
           fmt2(s.f2) + "," + fmt2(s.s1) + "," + fmt2(s.s2) + "," +
           fmt2(s.s1 + s.s2) + "," + fmt2(s.eta) + "\n";
  }
  emit(out, csv);
  return 0;
}

int run_weights(const std::string& scales_arg, const std::string& file,
                const std::string& out, const std::string& format) {
  fm::rsdat::AdjacencyScales scales;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw fm::validation_error("cannot open scales file: " + file);
    ordered_json doc = ordered_json::parse(in, nullptr, true);
    if (doc.contains("order")) {
      for (const auto& e : doc.at("order")) scales.order.push_back(e.get<std::string>());
    }
    for (const auto& e : doc.at("scales")) scales.scales.push_back(e.get<double>());
  } else {
    scales.scales = parse_values(scales_arg);
  }
  const bool ordered = fm::rsdat::validate(scales);
  if (!ordered) {
    std::cerr << "weights: warning: some adjacent scales fall below 0.5, "
                 "contradicting the declared importance order\n";
  }
  const auto w = fm::rsdat::rsdat_weights(scales);

  if (format == "json-like") {
    ordered_json doc;
    doc["weights"] = w;
    if (!scales.order.empty()) doc["order"] = scales.order;
    emit(out, doc.dump(2) + "\n");
  } else {
    std::string csv = "index,label,weight\n";
    for (std::size_t k = 0; k < w.size(); ++k) {
      const std::string label =
          k < scales.order.size() ? scales.order[k] : "o" + std::to_string(k + 1);
      csv += std::to_string(k + 1) + "," + label + "," + fmt(w[k]) + "\n";
    }
    emit(out, csv);
  }
  return 0;
}

struct SimArgs {
  std::string scenario;
  double x0 = 0.6, y0 = 0.6, z0 = 0.6;
  double dt = 0.01, tmax = 200.0;
  int stride = 1;
  std::string out;
  std::optional<double> eta;
};

int run_simulate(const SimArgs& a) {
  const auto params = load_scenario(a.scenario, a.eta);
  fm::evogame::IntegrateOptions opts;
  opts.dt = a.dt;
  opts.t_max = a.tmax;
  opts.sample_stride = a.stride;
  const auto traj = fm::evogame::integrate({a.x0, a.y0, a.z0}, params, opts);

  std::string csv = "t,x,y,z\n";
  for (const auto& p : traj) {
    csv += fmt(p.t) + "," + fmt(p.state.x) + "," + fmt(p.state.y) + "," +
           fmt(p.state.z) + "\n";
  }
  emit(a.out, csv);
  const auto& last = traj.back();
  std::cerr << "terminal t=" << fmt(last.t) << " state=(" << fmt(last.state.x)
            << "," << fmt(last.state.y) << "," << fmt(last.state.z) << ")\n";
  return 0;
}

int run_game_sweep(const std::string& scenario, const std::string& param,
                   const std::string& values, const SimArgs& sim,
                   const std::string& out) {
  const auto params = load_scenario(scenario, sim.eta);
  fm::evogame::SweepOptions opts;
  opts.integrate.dt = sim.dt;
  opts.integrate.t_max = sim.tmax;
  opts.start = {sim.x0, sim.y0, sim.z0};
  const auto res = fm::evogame::parameter_sweep(params, parse_sweep_param(param),
                                                parse_values(values), opts);

  std::string csv = "parameter,value,x,y,z,terminal_vertex,settle_time\n";
  for (const auto& r : res.rows) {
    csv += fm::evogame::to_string(res.parameter) + "," + fmt(r.value) + "," +
           fmt(r.terminal.x) + "," + fmt(r.terminal.y) + "," + fmt(r.terminal.z) + ",";
    if (r.vertex) {
      csv += "(" + std::to_string(int(r.vertex->x)) + "," +
             std::to_string(int(r.vertex->y)) + "," +
             std::to_string(int(r.vertex->z)) + ")," + fmt(r.settle_time) + "\n";
    } else {
      csv += "undecided,\n";
    }
  }
  emit(out, csv);
  for (const auto& [lo, hi] : res.critical_intervals) {
    std::cerr << "critical interval of " << fm::evogame::to_string(res.parameter)
              << ": (" << fmt(lo) << ", " << fmt(hi) << ")\n";
  }
  return 0;
}

int run_classify(const std::string& scenario, std::optional<double> eta,
                 const std::string& format) {
  const auto params = load_scenario(scenario, eta);
  const auto classes = fm::evogame::classify_equilibria(params);
  const auto e7 = fm::evogame::check_conditions(params, fm::evogame::StableTarget::E7);
  const auto e8 = fm::evogame::check_conditions(params, fm::evogame::StableTarget::E8);

  if (format == "json-like") {
    ordered_json doc;
    ordered_json verts = ordered_json::array();
    for (const auto& c : classes) {
      verts.push_back({{"vertex", {c.vertex.x, c.vertex.y, c.vertex.z}},
                       {"eigenvalues", c.lambda},
                       {"class", fm::evogame::to_string(c.classification)}});
    }
    doc["equilibria"] = std::move(verts);
    auto dump_conditions = [](const fm::evogame::ConditionsResult& r) {
      ordered_json arr = ordered_json::array();
      for (const auto& c : r.conditions) {
        arr.push_back({{"condition", c.description}, {"lhs", c.lhs},
                       {"rhs", c.rhs}, {"holds", c.holds}});
      }
      return ordered_json{{"holds", r.holds}, {"conditions", std::move(arr)}};
    };
    doc["unique_stable_110"] = dump_conditions(e7);
    doc["unique_stable_111"] = dump_conditions(e8);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::printf("%-10s %12s %12s %12s  %s\n", "vertex", "lambda1", "lambda2",
                "lambda3", "class");
    for (const auto& c : classes) {
      std::printf("(%g,%g,%g)  %12g %12g %12g  %s\n", c.vertex.x, c.vertex.y,
                  c.vertex.z, c.lambda[0], c.lambda[1], c.lambda[2],
                  fm::evogame::to_string(c.classification).c_str());
    }
    auto print_conditions = [](const char* title,
                               const fm::evogame::ConditionsResult& r) {
      std::printf("%s: %s\n", title, r.holds ? "holds" : "fails");
      for (const auto& c : r.conditions) {
        std::printf("  [%s] %s (lhs %g, rhs %g)\n", c.holds ? "ok" : "FAIL",
                    c.description.c_str(), c.lhs, c.rhs);
      }
    };
    print_conditions("unique stable (1,1,0)", e7);
    print_conditions("unique stable (1,1,1)", e8);
  }
  return 0;
}

int run_pipeline(const MatchArgs& match_args, const std::string& scenario,
                 const SimArgs& sim, const std::string& out_scheme,
                 const std::string& out_traj) {
  const fm::MatchingInstance inst = load_with_overrides(match_args);
  const auto cfg = solver_config(match_args);
  const auto res = fm::matcher::interactive_solve(inst, cfg);
  if (res.status != fm::matcher::SolveStatus::optimal) {
    std::cerr << "pipeline: " << res.message << "\n";
    return kExitInfeasible;
  }
  if (!out_scheme.empty()) fm::io::write_scheme(res.scheme, out_scheme);

  // the matching fairness ratio feeds the game's fairness factor
  auto params = load_scenario(scenario, std::nullopt);
  params.eta = std::min(1.0, std::max(0.0, res.scheme.eta));
  fm::evogame::validate(params);

  fm::evogame::IntegrateOptions opts;
  opts.dt = sim.dt;
  opts.t_max = sim.tmax;
  opts.sample_stride = sim.stride;
  const auto traj = fm::evogame::integrate({sim.x0, sim.y0, sim.z0}, params, opts);
  if (!out_traj.empty()) {
    std::string csv = "t,x,y,z\n";
    for (const auto& p : traj) {
      csv += fmt(p.t) + "," + fmt(p.state.x) + "," + fmt(p.state.y) + "," +
             fmt(p.state.z) + "\n";
    }
    emit(out_traj, csv);
  }
  const auto& last = traj.back().state;
  std::cout << "pairs " << pairs_string(res.scheme) << "\n"
            << "eta_handoff " << fmt(params.eta) << "\n"
            << "terminal (" << fmt(last.x) << "," << fmt(last.y) << ","
            << fmt(last.z) << ")\n";
  return res.fairness_met ? 0 : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fairness-aware vehicle-cargo matching and tripartite game simulation"};
  app.require_subcommand(1);

  MatchArgs ma;
  SimArgs sa;
  std::string side = "shipper", gammas = "0.1:0.1:1.0";
  std::string scales_arg, scales_file, sweep_param = "alpha",
              sweep_values = "0.2:0.2:0.8";
  std::string out, out_scheme, out_traj, format = "text", space = "f";
  std::string scenario;
  std::optional<double> eta_override;

  auto* match = app.add_subcommand("match", "solve one instance by one method");
  match->add_option("--instance", ma.instance)->required();
  match->add_option("--method", ma.method)->check(CLI::IsMember({"fuzzy", "maxmin", "ideal", "linear"}));
  match->add_option("--gamma", ma.gamma);
  match->add_option("--eta-lo", ma.eta_lo);
  match->add_option("--eta-hi", ma.eta_hi);
  match->add_option("--theta-step", ma.theta_step);
  match->add_option("--max-iterations", ma.max_iterations);
  match->add_option("--lambda1", ma.lambda1);
  match->add_option("--lambda2", ma.lambda2);
  match->add_option("--space", ma.space)->check(CLI::IsMember({"f", "u"}));
  match->add_option("--out", ma.out);
  match->add_option("--format", ma.format)->check(CLI::IsMember({"text", "json-like"}));

  auto* sens = app.add_subcommand("sensitivity", "gamma sweep of one side's dissatisfaction limit");
  sens->add_option("--instance", ma.instance)->required();
  sens->add_option("--side", side)->check(CLI::IsMember({"shipper", "carrier"}));
  sens->add_option("--gammas", gammas);
  sens->add_option("--out", out);

  auto* cmp = app.add_subcommand("compare", "all four methods side by side");
  cmp->add_option("--instance", ma.instance)->required();
  cmp->add_option("--space", space)->check(CLI::IsMember({"f", "u"}));
  cmp->add_option("--out", out);

  auto* wts = app.add_subcommand("weights", "adjacent-importance scale weighting");
  wts->add_option("--scales", scales_arg);
  wts->add_option("--file", scales_file);
  wts->add_option("--out", out);
  wts->add_option("--format", format)->check(CLI::IsMember({"text", "json-like"}));

  auto* sim = app.add_subcommand("simulate", "integrate the replicator dynamics");
  sim->add_option("--scenario", sa.scenario)->required();
  sim->add_option("--x0", sa.x0);
  sim->add_option("--y0", sa.y0);
  sim->add_option("--z0", sa.z0);
  sim->add_option("--dt", sa.dt);
  sim->add_option("--tmax", sa.tmax);
  sim->add_option("--stride", sa.stride);
  sim->add_option("--eta", eta_override);
  sim->add_option("--out", out);

  auto* swp = app.add_subcommand("sweep", "terminal states across one game parameter");
  swp->add_option("--scenario", scenario)->required();
  swp->add_option("--param", sweep_param);
  swp->add_option("--values", sweep_values);
  swp->add_option("--x0", sa.x0);
  swp->add_option("--y0", sa.y0);
  swp->add_option("--z0", sa.z0);
  swp->add_option("--dt", sa.dt);
  swp->add_option("--tmax", sa.tmax);
  swp->add_option("--eta", eta_override);
  swp->add_option("--out", out);

  auto* cls = app.add_subcommand("classify", "vertex eigenvalues and stability report");
  cls->add_option("--scenario", scenario)->required();
  cls->add_option("--eta", eta_override);
  cls->add_option("--format", format)->check(CLI::IsMember({"text", "json-like"}));

  auto* pipe = app.add_subcommand("pipeline", "match, hand eta to the game, simulate");
  pipe->add_option("--instance", ma.instance)->required();
  pipe->add_option("--scenario", scenario)->required();
  pipe->add_option("--gamma", ma.gamma);
  pipe->add_option("--eta-lo", ma.eta_lo);
  pipe->add_option("--eta-hi", ma.eta_hi);
  pipe->add_option("--x0", sa.x0);
  pipe->add_option("--y0", sa.y0);
  pipe->add_option("--z0", sa.z0);
  pipe->add_option("--dt", sa.dt);
  pipe->add_option("--tmax", sa.tmax);
  pipe->add_option("--stride", sa.stride);
  pipe->add_option("--out-scheme", out_scheme);
  pipe->add_option("--out-traj", out_traj);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      std::cout << app.help();
      return 0;
    }
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  try {
    if (match->parsed()) return run_match(ma);
    if (sens->parsed()) return run_sensitivity(ma.instance, side, gammas, out);
    if (cmp->parsed()) return run_compare(ma.instance, out, space);
    if (wts->parsed()) return run_weights(scales_arg, scales_file, out, format);
    if (sim->parsed()) {
      sa.eta = eta_override;
      sa.out = out;
      return run_simulate(sa);
    }
    if (swp->parsed()) {
      sa.eta = eta_override;
      return run_game_sweep(scenario, sweep_param, sweep_values, sa, out);
    }
    if (cls->parsed()) return run_classify(scenario, eta_override, format);
    if (pipe->parsed()) return run_pipeline(ma, scenario, sa, out_scheme, out_traj);
  } catch (const fm::matcher::solve_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
