#include <random>

#include <benchmark/benchmark.h>

#include "fairmatch/evogame.hpp"
#include "fairmatch/instance_io.hpp"
#include "fairmatch/matcher.hpp"

namespace {

namespace mt = fairmatch::matcher;
namespace ev = fairmatch::evogame;

fairmatch::Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  fairmatch::Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = unit(rng);
  return m;
}

void BM_SolveAssignment(benchmark::State& state) {
  const std::size_t m = state.range(0), n = m + 2;
  std::mt19937 rng(7);
  const auto alpha = random_matrix(rng, m, n);
  const auto beta = random_matrix(rng, n, m);
  const std::vector<std::vector<bool>> mask(m, std::vector<bool>(n, true));
  for (auto _ : state) {
    auto out = mt::solve_assignment(alpha, beta, 1.0, 1.0, mask);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_SolveAssignment)->Arg(6)->Arg(8)->Arg(10)->Arg(12);

void BM_CaseStudyBounds(benchmark::State& state) {
  const auto inst = fairmatch::io::load_instance(FAIRMATCH_DATA_DIR "/case_study.json");
  const auto prob = mt::prepare(inst);
  for (auto _ : state) {
    auto b = mt::compute_bounds(prob, inst.gamma);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_CaseStudyBounds);

void BM_InteractiveSolve(benchmark::State& state) {
  const auto inst = fairmatch::io::load_instance(FAIRMATCH_DATA_DIR "/case_study.json");
  for (auto _ : state) {
    auto r = mt::interactive_solve(inst);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_InteractiveSolve);

void BM_Integrate(benchmark::State& state) {
  const auto params = ev::array1();
  ev::IntegrateOptions opts;
  opts.sample_stride = 1 << 30;
  for (auto _ : state) {
    auto end = ev::integrate_terminal({0.6, 0.6, 0.6}, params, opts);
    benchmark::DoNotOptimize(end);
  }
}
BENCHMARK(BM_Integrate);

}  // namespace

BENCHMARK_MAIN();
