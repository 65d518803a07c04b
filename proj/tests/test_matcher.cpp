#include <algorithm>
#include <cmath>
#include <random>

#include <doctest.h>

#include "fairmatch/instance_io.hpp"
#include "fairmatch/matcher.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace fairmatch;
using namespace fairmatch::matcher;

namespace {

const char* kCasePath = FAIRMATCH_DATA_DIR "/case_study.json";

MatchingInstance case_study() { return io::load_instance(kCasePath); }

std::vector<std::vector<bool>> all_true(std::size_t m, std::size_t n) {
  return std::vector<std::vector<bool>>(m, std::vector<bool>(n, true));
}

}  // namespace

TEST_CASE("one shipper, one carrier") {
  Matrix a(1, 1, 1.0), b(1, 1, 1.0);
  const auto out = solve_assignment(a, b, 1, 1, all_true(1, 1));
  REQUIRE(out.status == SolveStatus::optimal);
  CHECK(out.carrier_of == std::vector<int>{0});
  CHECK(out.f1 == doctest::Approx(1.0));
  CHECK(out.f2 == doctest::Approx(1.0));
}

TEST_CASE("solver equals exhaustive enumeration on random instances") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<std::size_t> mdist(1, 5), extra(0, 2);
  std::uniform_real_distribution<double> coeff(-1.0, 2.0);
  for (int t = 0; t < 60; ++t) {
    const std::size_t m = mdist(rng), n = m + extra(rng);
    const Matrix alpha = testutil::random_matrix(rng, m, n);
    const Matrix beta = testutil::random_matrix(rng, n, m);
    const auto mask = testutil::random_mask(rng, m, n);
    const double c1 = coeff(rng), c2 = coeff(rng);

    for (const bool require_all : {true, false}) {
      const auto got =
          solve_assignment(alpha, beta, c1, c2, mask, std::nullopt, require_all);
      const auto want =
          oracle::best_linear(alpha, beta, mask, require_all, c1, c2);
      REQUIRE(got.status == SolveStatus::optimal);
      REQUIRE(want.has_value());
      CHECK(got.objective == doctest::Approx(want->value).epsilon(1e-9));
    }
  }
}

TEST_CASE("solver honors lower bounds and reports infeasibility distinctly") {
  std::mt19937 rng(202);
  for (int t = 0; t < 40; ++t) {
    const std::size_t m = 3, n = 4;
    const Matrix alpha = testutil::random_matrix(rng, m, n);
    const Matrix beta = testutil::random_matrix(rng, n, m);
    const auto mask = all_true(m, n);
    const double lb1 = 0.4 * m, lb2 = 0.4 * m;

    const auto got = solve_assignment(alpha, beta, 1, 1, mask,
                                      std::make_pair(lb1, lb2));
    const auto want = oracle::best_linear(alpha, beta, mask, true, 1, 1, lb1, lb2);
    if (!want) {
      CHECK(got.status == SolveStatus::infeasible);
      CHECK(!got.message.empty());
    } else {
      REQUIRE(got.status == SolveStatus::optimal);
      CHECK(got.objective == doctest::Approx(want->value).epsilon(1e-9));
      CHECK(got.f1 >= lb1 - 1e-9);
      CHECK(got.f2 >= lb2 - 1e-9);
    }
  }

  // unreachable bounds are infeasible, not an empty matching
  Matrix a(2, 2, 0.5), b(2, 2, 0.5);
  const auto res =
      solve_assignment(a, b, 1, 1, all_true(2, 2), std::make_pair(5.0, 5.0));
  CHECK(res.status == SolveStatus::infeasible);
  const auto empty_ok = solve_assignment(Matrix(2, 3, -1.0), Matrix(3, 2, -1.0),
                                         1, 1, all_true(2, 3), std::nullopt,
                                         /*match_all_shippers=*/false);
  CHECK(empty_ok.status == SolveStatus::optimal);
  CHECK(empty_ok.carrier_of == std::vector<int>{-1, -1});
}

TEST_CASE("ties break toward the lexicographically smallest pair list") {
  Matrix a(2, 2, 1.0), b(2, 2, 1.0);
  const auto out = solve_assignment(a, b, 1, 1, all_true(2, 2));
  CHECK(out.carrier_of == std::vector<int>{0, 1});
}

TEST_CASE("argmax is invariant to positive rescaling of one side") {
  std::mt19937 rng(303);
  for (int t = 0; t < 25; ++t) {
    const Matrix alpha = testutil::random_matrix(rng, 4, 5);
    const Matrix beta = testutil::random_matrix(rng, 5, 4);
    const auto mask = all_true(4, 5);
    const auto base = solve_assignment(alpha, beta, 1, 0, mask);
    for (const double c : {0.25, 3.75}) {
      Matrix scaled = alpha;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 5; ++j) scaled(i, j) *= c;
      const auto got = solve_assignment(scaled, beta, 1, 0, mask);
      CHECK(got.carrier_of == base.carrier_of);
    }
  }
}

TEST_CASE("case-study objective extremes and dissatisfaction limits") {
  const auto inst = case_study();
  const auto prob = prepare(inst);
  const auto b = compute_bounds(prob, inst.gamma);
  CHECK(b.f1_lo == doctest::Approx(3.94).epsilon(1e-9));
  CHECK(b.f1_hi == doctest::Approx(7.28).epsilon(1e-9));
  CHECK(b.f2_lo == doctest::Approx(5.96).epsilon(1e-9));
  CHECK(b.f2_hi == doctest::Approx(7.20).epsilon(1e-9));
  CHECK(b.f1_ul == doctest::Approx(6.612).epsilon(1e-9));
  CHECK(b.f2_ul == doctest::Approx(6.952).epsilon(1e-9));
}

TEST_CASE("degenerate bound cases") {
  FuzzyBounds b{1.0, 1.0, 0.0, 2.0, 1.0, 1.6};
  const auto m1 = membership(1.0, b, 1);
  CHECK(m1.u == 1.0);
  CHECK(m1.v == 0.0);

  // gamma -> 1 drives f^UL down to f^L
  Matrix a(1, 2), bb(2, 1);
  a(0, 0) = 0.3;
  a(0, 1) = 0.8;
  bb(0, 0) = 0.5;
  bb(1, 0) = 0.9;
  const auto prob = PreparedProblem{a, bb, all_true(1, 2)};
  const auto nearly_one = compute_bounds(prob, 0.999);
  CHECK(nearly_one.f1_ul ==
        doctest::Approx(nearly_one.f1_lo + 0.001 * (nearly_one.f1_hi - nearly_one.f1_lo)));
}

TEST_CASE("membership values at the reference points") {
  const auto inst = case_study();
  const auto b = compute_bounds(prepare(inst), inst.gamma);

  const auto m1 = membership(6.82, b, 1);
  CHECK(m1.u == doctest::Approx(0.862275).epsilon(1e-5));
  CHECK(m1.v == 0.0);
  CHECK(m1.s == doctest::Approx(0.862275).epsilon(1e-5));

  const auto m2 = membership(6.9, b, 2);
  CHECK(m2.u == doctest::Approx(0.758065).epsilon(1e-5));
  CHECK(m2.v == doctest::Approx(0.052419).epsilon(1e-4));
  CHECK(m2.s == doctest::Approx(0.705645).epsilon(1e-5));

  const auto low = membership(b.f1_lo, b, 1);
  CHECK(low.u == 0.0);
  CHECK(low.v == 1.0);
  CHECK(low.s == -1.0);
}

TEST_CASE("membership clamps and s = u - v on random samples") {
  std::mt19937 rng(404);
  std::uniform_real_distribution<double> span(0.1, 10.0), g(0.05, 0.95);
  for (int t = 0; t < 1000; ++t) {
    FuzzyBounds b;
    b.f1_lo = span(rng);
    b.f1_hi = b.f1_lo + span(rng);
    b.f1_ul = b.f1_hi - g(rng) * (b.f1_hi - b.f1_lo);
    b.f2_lo = b.f1_lo;
    b.f2_hi = b.f1_hi;
    b.f2_ul = b.f1_ul;
    const double f = b.f1_lo - 2.0 + 2.0 * span(rng);
    const auto m = membership(f, b, 1);
    CHECK(m.u >= 0.0);
    CHECK(m.u <= 1.0);
    CHECK(m.v >= 0.0);
    CHECK(m.v <= 1.0);
    CHECK(m.s == doctest::Approx(m.u - m.v).epsilon(1e-15));
  }
}

TEST_CASE("the improved model reproduces the reference matching") {
  const auto inst = case_study();
  const auto prob = prepare(inst);
  const auto bounds = compute_bounds(prob, inst.gamma);
  const auto res = solve_lp3(prob, bounds);
  REQUIRE(res.status == SolveStatus::optimal);
  CHECK(res.scheme.f1 == doctest::Approx(6.82).epsilon(1e-9));
  CHECK(res.scheme.f2 == doctest::Approx(7.05).epsilon(1e-9));
  CHECK(res.scheme.s1 == doctest::Approx(0.862275).epsilon(1e-5));
  CHECK(res.scheme.s2 == doctest::Approx(0.879032).epsilon(1e-5));
  CHECK(res.scheme.eta == doctest::Approx(0.980937).epsilon(1e-5));
  CHECK(res.scheme.v1 == 0.0);
  CHECK(res.scheme.v2 == 0.0);
}

TEST_CASE("improved model equals enumeration on random instances") {
  std::mt19937 rng(505);
  int solved = 0;
  for (int t = 0; t < 30; ++t) {
    const Matrix alpha = testutil::random_matrix(rng, 4, 5);
    const Matrix beta = testutil::random_matrix(rng, 5, 4);
    const PreparedProblem prob{alpha, beta, all_true(4, 5)};
    const auto b = compute_bounds(prob, 0.3);
    const auto got = solve_lp3(prob, b);

    const double c1 = 1.0 / (b.f1_hi - b.f1_lo), c2 = 1.0 / (b.f2_hi - b.f2_lo);
    const auto want = oracle::best_linear(alpha, beta, prob.feasible, true, c1,
                                          c2, b.f1_ul, b.f2_ul);
    if (got.status != SolveStatus::optimal) {
      // conflicting objectives can leave the limited region empty; the
      // oracle must agree
      CHECK_FALSE(want.has_value());
      continue;
    }
    ++solved;
    REQUIRE(want.has_value());
    CHECK(c1 * got.scheme.f1 + c2 * got.scheme.f2 ==
          doctest::Approx(want->value).epsilon(1e-9));
    // case-2 structure holds at every optimum
    CHECK(got.scheme.v1 == 0.0);
    CHECK(got.scheme.v2 == 0.0);
    CHECK(got.scheme.eta ==
          doctest::Approx(got.scheme.u1 / got.scheme.u2).epsilon(1e-12));
  }
  CHECK(solved >= 15);  // most random draws should be solvable
}

TEST_CASE("interactive loop settles on the fair reference scheme in one pass") {
  const auto inst = case_study();
  const auto res = interactive_solve(inst);
  REQUIRE(res.status == SolveStatus::optimal);
  CHECK(res.fairness_met);
  CHECK(res.log.size() == 1);
  CHECK(res.scheme.f1 == doctest::Approx(6.82).epsilon(1e-9));
  CHECK(res.scheme.f2 == doctest::Approx(7.05).epsilon(1e-9));
  CHECK(res.scheme.eta == doctest::Approx(0.980937).epsilon(1e-5));
  CHECK(res.scheme.pairs.size() == 8);
}

TEST_CASE("a non-binding fairness interval returns the plain optimum") {
  auto inst = case_study();
  inst.eta_lo = 1e-9;
  inst.eta_hi = 1e9;
  const auto wide = interactive_solve(inst);
  const auto plain = solve_lp3(prepare(inst), compute_bounds(prepare(inst), inst.gamma));
  REQUIRE(wide.status == SolveStatus::optimal);
  CHECK(wide.fairness_met);
  CHECK(wide.scheme.pairs == plain.scheme.pairs);
}

TEST_CASE("symmetric satisfaction forces eta = 1 immediately") {
  std::mt19937 rng(606);
  Matrix alpha = testutil::random_matrix(rng, 4, 4);
  Matrix beta(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) beta(j, i) = alpha(i, j);
  auto inst = testutil::matrix_instance(alpha, beta, 0.2, 0.9, 1.1);
  const auto res = interactive_solve(inst);
  REQUIRE(res.status == SolveStatus::optimal);
  CHECK(res.fairness_met);
  CHECK(res.log.size() == 1);
  CHECK(res.scheme.eta == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("raising a membership floor never lowers that side") {
  const auto inst = case_study();
  const auto prob = prepare(inst);
  const auto bounds = compute_bounds(prob, inst.gamma);
  const auto base = solve_lp3(prob, bounds);
  REQUIRE(base.status == SolveStatus::optimal);
  const double sum0 = base.scheme.u1 + base.scheme.u2;
  for (const double floor : {0.88, 0.9, 0.95}) {
    const auto raised = solve_lp3(prob, bounds, floor, std::nullopt);
    if (raised.status != SolveStatus::optimal) continue;
    CHECK(raised.scheme.u1 >= floor - 1e-9);
    CHECK(raised.scheme.u1 >= base.scheme.u1 - 1e-9);
    CHECK(raised.scheme.u1 + raised.scheme.u2 <= sum0 + 1e-9);
  }
}

TEST_CASE("gamma sweep reproduces the reference sensitivity tables") {
  const auto inst = case_study();
  std::vector<double> gammas;
  for (int k = 1; k <= 10; ++k) gammas.push_back(k / 10.0);

  SUBCASE("shipper side") {
    const auto rows = gamma_sweep(inst, gammas, Side::shipper);
    REQUIRE(rows.size() == 10);
    for (int k = 0; k < 10; ++k) {
      CHECK(rows[k].swept_ul ==
            doctest::Approx(7.28 - gammas[k] * 3.34).epsilon(1e-9));
      REQUIRE(rows[k].status == SolveStatus::optimal);
    }
    CHECK(rows[0].overall == doctest::Approx(1.733678).epsilon(1e-5));
    CHECK(rows[0].scheme.eta == doctest::Approx(1.128476).epsilon(1e-5));
    CHECK_FALSE(rows[0].meets_fairness);
    CHECK(rows[1].overall == doctest::Approx(1.741308).epsilon(1e-5));
    CHECK(rows[1].scheme.eta == doctest::Approx(0.980937).epsilon(1e-5));
    CHECK(rows[1].meets_fairness);
    for (int k = 2; k < 10; ++k) {
      CHECK(rows[k].scheme.f1 == doctest::Approx(6.42).epsilon(1e-9));
      CHECK(rows[k].scheme.f2 == doctest::Approx(7.20).epsilon(1e-9));
      CHECK(rows[k].overall == doctest::Approx(1.742515).epsilon(1e-5));
      CHECK(rows[k].scheme.eta == doctest::Approx(0.742515).epsilon(1e-5));
      CHECK_FALSE(rows[k].meets_fairness);
    }
  }

  SUBCASE("carrier side") {
    const auto rows = gamma_sweep(inst, gammas, Side::carrier);
    REQUIRE(rows.size() == 10);
    CHECK(rows[0].swept_ul == doctest::Approx(7.076).epsilon(1e-9));
    REQUIRE(rows[0].status == SolveStatus::optimal);
    CHECK(rows[0].scheme.f1 == doctest::Approx(6.61).epsilon(1e-9));
    CHECK(rows[0].scheme.f2 == doctest::Approx(7.12).epsilon(1e-9));
    CHECK(rows[0].overall == doctest::Approx(1.734885).epsilon(1e-5));
    CHECK(rows[0].scheme.eta == doctest::Approx(0.854532).epsilon(1e-5));
    CHECK(rows[1].scheme.eta == doctest::Approx(0.980937).epsilon(1e-5));
    // once the carrier limit drops below the unconstrained optimum it stops
    // binding and the base solution persists
    for (int k = 2; k < 10; ++k) {
      CHECK(rows[k].scheme.f1 == doctest::Approx(6.82).epsilon(1e-9));
      CHECK(rows[k].scheme.f2 == doctest::Approx(7.05).epsilon(1e-9));
    }
  }

  SUBCASE("exact reference bound makes the tight carrier row infeasible") {
    GammaSweepOptions opts;
    opts.round_reference_ul = false;
    const auto rows = gamma_sweep(inst, {0.1}, Side::carrier, opts);
    CHECK(rows[0].status == SolveStatus::infeasible);
  }
}

TEST_CASE("sweep rows are optimal per the enumeration oracle") {
  const auto inst = case_study();
  const auto prob = prepare(inst);
  const auto base = compute_bounds(prob, inst.gamma);
  const double c1 = 1.0 / (base.f1_hi - base.f1_lo);
  const double c2 = 1.0 / (base.f2_hi - base.f2_lo);

  const auto rows = gamma_sweep(inst, {0.1}, Side::shipper);
  REQUIRE(rows[0].status == SolveStatus::optimal);
  const auto want = oracle::best_linear(prob.alpha, prob.beta, prob.feasible,
                                        true, c1, c2, rows[0].swept_ul, 6.95);
  REQUIRE(want.has_value());
  CHECK(c1 * rows[0].scheme.f1 + c2 * rows[0].scheme.f2 ==
        doctest::Approx(want->value).epsilon(1e-9));
}

TEST_CASE("an empty feasible region is a structural error") {
  Matrix a(1, 1, 1.0), b(1, 1, 1.0);
  const PreparedProblem prob{a, b, {{false}}};
  CHECK_THROWS_AS(compute_bounds(prob, 0.2), solve_error);
}

TEST_CASE("benchmark methods on the case study, raw objective space") {
  const auto inst = case_study();

  const auto mm = benchmark_solve(inst, Method::max_min);
  REQUIRE(mm.status == SolveStatus::optimal);
  CHECK(mm.scheme.f1 == doctest::Approx(7.01).epsilon(1e-9));
  CHECK(mm.scheme.f2 == doctest::Approx(6.97).epsilon(1e-9));

  const auto ip = benchmark_solve(inst, Method::ideal_point);
  REQUIRE(ip.status == SolveStatus::optimal);
  CHECK(ip.scheme.f1 == doctest::Approx(7.22).epsilon(1e-9));
  CHECK(ip.scheme.f2 == doctest::Approx(6.90).epsilon(1e-9));

  const auto lw = benchmark_solve(inst, Method::linear_weighted);
  REQUIRE(lw.status == SolveStatus::optimal);
  CHECK(lw.scheme.f1 == doctest::Approx(7.22).epsilon(1e-9));
  CHECK(lw.scheme.f2 == doctest::Approx(6.90).epsilon(1e-9));
  CHECK(lw.scheme.s1 == doctest::Approx(0.982036).epsilon(1e-5));
  CHECK(lw.scheme.s2 == doctest::Approx(0.705645).epsilon(1e-5));
  CHECK(lw.scheme.s1 + lw.scheme.s2 == doctest::Approx(1.687681).epsilon(1e-5));
  CHECK(lw.scheme.eta == doctest::Approx(1.391685).epsilon(1e-5));
}

TEST_CASE("benchmark methods on the case study, membership space") {
  const auto inst = case_study();
  SolverConfig cfg;
  cfg.benchmark_space = ObjectiveSpace::membership;

  const auto mm = benchmark_solve(inst, Method::max_min, cfg);
  CHECK(mm.scheme.f1 == doctest::Approx(6.82).epsilon(1e-9));
  CHECK(mm.scheme.f2 == doctest::Approx(7.05).epsilon(1e-9));

  const auto ip = benchmark_solve(inst, Method::ideal_point, cfg);
  CHECK(ip.scheme.f1 == doctest::Approx(6.82).epsilon(1e-9));
  CHECK(ip.scheme.f2 == doctest::Approx(7.05).epsilon(1e-9));

  const auto lw = benchmark_solve(inst, Method::linear_weighted, cfg);
  CHECK(lw.scheme.f1 == doctest::Approx(6.42).epsilon(1e-9));
  CHECK(lw.scheme.f2 == doctest::Approx(7.20).epsilon(1e-9));
}

TEST_CASE("benchmark objectives verified against enumeration") {
  std::mt19937 rng(707);
  for (int t = 0; t < 12; ++t) {
    const Matrix alpha = testutil::random_matrix(rng, 4, 4);
    const Matrix beta = testutil::random_matrix(rng, 4, 4);
    auto inst = testutil::matrix_instance(alpha, beta);
    const auto mask = all_true(4, 4);

    const auto mm = benchmark_solve(inst, Method::max_min);
    const auto level = oracle::best_min_level(alpha, beta, mask, true, 1, 1);
    REQUIRE(mm.status == SolveStatus::optimal);
    CHECK(std::min(mm.scheme.f1, mm.scheme.f2) ==
          doctest::Approx(*level).epsilon(1e-5));

    const auto lw = benchmark_solve(inst, Method::linear_weighted);
    const auto sum = oracle::best_linear(alpha, beta, mask, true, 0.5, 0.5);
    CHECK(0.5 * lw.scheme.f1 + 0.5 * lw.scheme.f2 ==
          doctest::Approx(sum->value).epsilon(1e-9));

    const auto prob = prepare(inst);
    const auto b = compute_bounds(prob, inst.gamma);
    const auto ip = benchmark_solve(inst, Method::ideal_point);
    double best_d2 = 1e300;
    oracle::enumerate(alpha, beta, mask, true,
                      [&](double f1, double f2, const std::vector<int>&) {
                        const double d1 = b.f1_hi - f1, d2v = b.f2_hi - f2;
                        best_d2 = std::min(best_d2, d1 * d1 + d2v * d2v);
                      });
    const double got_d1 = b.f1_hi - ip.scheme.f1, got_d2 = b.f2_hi - ip.scheme.f2;
    CHECK(got_d1 * got_d1 + got_d2 * got_d2 ==
          doctest::Approx(best_d2).epsilon(1e-6));
  }
}

TEST_CASE("all methods coincide on a single-pair instance") {
  Matrix a(1, 1, 0.7), b(1, 1, 0.9);
  auto inst = testutil::matrix_instance(a, b, 0.2, 1e-9, 1e9);
  const auto rows = compare_methods(inst);
  REQUIRE(rows.size() == 4);
  for (const auto& r : rows) {
    REQUIRE(r.status == SolveStatus::optimal);
    CHECK(r.scheme.pairs == std::vector<std::pair<int, int>>{{0, 0}});
  }
}

TEST_CASE("raw indicator profiles run through the whole pipeline") {
  const char* doc = R"({
    "shippers": [{"id":1, "indicators": {
      "A1": {"interval": [1, 4], "theta": 0.5, "tolerable": false},
      "A2": {"value": 50, "omega": 0.4, "tolerable": true},
      "A4": 5.0, "A7": "hub_a", "A8": "east"
    }}],
    "carriers": [{"id":1, "indicators": {
      "B1": 2, "B2": {"value": 45, "omega": 0.5, "tolerable": false},
      "B4": 9.0, "B7": "hub_a",
      "B8": {"sequence": ["east", "west"], "tau": 1.0, "tolerable": false}
    }}],
    "weights": {"shipper": [0.4,0.3,0,0,0,0,0,0,0.3], "carrier": [0,0.5,0,0,0,0,0,0.25,0.25]},
    "gamma": 0.2, "eta_interval": [0.5, 2.0],
    "reliability_shipper": [[0.9]], "reliability_carrier": [[0.8]]
  })";
  const auto inst = io::instance_from_text(doc);
  CHECK_FALSE(inst.has_matrices());
  const auto res = interactive_solve(inst);
  REQUIRE(res.status == SolveStatus::optimal);
  CHECK(res.fairness_met);
  CHECK(res.scheme.pairs == std::vector<std::pair<int, int>>{{0, 0}});
  // single matching: both memberships degenerate to 1
  CHECK(res.scheme.eta == doctest::Approx(1.0));
}

TEST_CASE("infeasible dissatisfaction limits ask for a larger gamma") {
  // two identical columns: f2 cannot reach its own maximum while f1 does
  Matrix a(2, 2), b(2, 2);
  a(0, 0) = 1.0; a(0, 1) = 0.0;
  a(1, 0) = 0.0; a(1, 1) = 1.0;
  b(0, 0) = 0.0; b(0, 1) = 1.0;
  b(1, 0) = 1.0; b(1, 1) = 0.0;
  const PreparedProblem prob{a, b, all_true(2, 2)};
  const auto bounds = compute_bounds(prob, 0.05);
  const auto res = solve_lp3(prob, bounds);
  CHECK(res.status == SolveStatus::infeasible);
  CHECK(res.message.find("gamma") != std::string::npos);
}
