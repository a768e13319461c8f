// Microbenchmarks for the hot paths of the engine: symmetry projection,
// plugging composition, residual assembly, and linear-stratum solving.

#include <benchmark/benchmark.h>

#include "shifted_poisson/classify.hpp"
#include "shifted_poisson/examples.hpp"
#include "shifted_poisson/linfty.hpp"
#include "shifted_poisson/multimap.hpp"
#include "shifted_poisson/polyvector.hpp"

#include <utility>
#include <vector>

namespace {

using namespace shifted_poisson;

MultiMap dense_cubic_map(const GradedSpacePtr& space) {
  const std::vector<int> ids = space->ids_at(0);
  std::vector<MapEntry> entries;
  int counter = 1;  // harmonic coefficients so the projection stays nonzero
  for (int a : ids) {
    for (int b : ids) {
      for (int c : ids) {
        entries.emplace_back(IndexWord{a, b, c}, IndexWord{b, c, a}, Rational(1, counter));
        ++counter;
      }
    }
  }
  return MultiMap(space, 3, 3, 0, entries);
}

MultiMap casimir_tensor(const LieNAlgebra& sl2) {
  const auto space = sl2.space();
  const int e = space->id_of("e");
  const int h = space->id_of("h");
  const int f = space->id_of("f");
  return project_symmetries(MultiMap(space, 0, 2, 0,
                                     {{{}, {e, f}, Rational(2)},
                                      {{}, {f, e}, Rational(2)},
                                      {{}, {h, h}, Rational(1)}}),
                            2);
}

void bm_project_symmetries(benchmark::State& state) {
  const LieNAlgebra sl2 = make_sl2();
  const MultiMap raw = dense_cubic_map(sl2.space());
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_symmetries(raw, 2));
  }
}
BENCHMARK(bm_project_symmetries);

void bm_compose_tilde(benchmark::State& state) {
  const LieNAlgebra sl2 = make_sl2();
  const MultiMap raw = dense_cubic_map(sl2.space());
  const MultiMap left = project_symmetries(raw, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose_tilde(left, left, 2));
  }
}
BENCHMARK(bm_compose_tilde);

void bm_schouten_bracket(benchmark::State& state) {
  const LieNAlgebra sl2 = make_sl2();
  const MultiMap pi = casimir_tensor(sl2);
  const MultiMap bracket = project_symmetries(*sl2.bracket(2), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(schouten_bracket(bracket, pi, 2));
  }
}
BENCHMARK(bm_schouten_bracket);

void bm_mc_residual(benchmark::State& state) {
  const LieNAlgebra sl2 = make_sl2();
  PolyvectorFamily family = weight_one_family(sl2, 2);
  family.set_component(casimir_tensor(sl2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc_residual(family, 4));
  }
}
BENCHMARK(bm_mc_residual);

void bm_check_linfty(benchmark::State& state) {
  const LieNAlgebra cotangent = builtin("cotangent-sl2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_linfty(cotangent));
  }
}
BENCHMARK(bm_check_linfty);

void bm_solve_linear_stratum(benchmark::State& state) {
  const LieNAlgebra sl2 = make_sl2();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        solve_linear_stratum(sl2, 2, PolyvectorFamily(sl2.space(), 2), {{2, 0}}));
  }
}
BENCHMARK(bm_solve_linear_stratum);

}  // namespace

BENCHMARK_MAIN();
