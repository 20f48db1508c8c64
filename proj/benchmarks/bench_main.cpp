#include <benchmark/benchmark.h>

#include <random>

#include "grassfrieze/frieze.hpp"
#include "grassfrieze/realize.hpp"
#include "grassfrieze/volume_one.hpp"

using namespace grassfrieze;

namespace {

Matrix random_square(std::mt19937_64& rng, int n, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = dist(rng);
  return m;
}

void BM_DetBareiss(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int n = static_cast<int>(state.range(0));
  std::vector<Matrix> inputs;
  for (int i = 0; i < 32; ++i) inputs.push_back(random_square(rng, n, 99));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(det(inputs[i++ % inputs.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_DetBareiss)->Arg(3)->Arg(5)->Arg(8)->Arg(12);

void BM_ColumnHnf(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const int n = static_cast<int>(state.range(0));
  std::vector<Matrix> inputs;
  while (inputs.size() < 32) {
    Matrix m = random_square(rng, n, 9);
    if (det(m) != 0) inputs.push_back(std::move(m));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(column_hnf(inputs[i++ % inputs.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ColumnHnf)->Arg(3)->Arg(5)->Arg(8);

void BM_PlueckerOfMatrix(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const int n = static_cast<int>(state.range(0));
  std::uniform_int_distribution<int> dist(-9, 9);
  Matrix m(3, n);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = dist(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pluecker_of_matrix(m));
  }
  state.SetItemsProcessed(state.iterations() * binomial(n, 3).get_ui());
}
BENCHMARK(BM_PlueckerOfMatrix)->Arg(8)->Arg(12)->Arg(16);

void BM_RelationCheck(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const int n = static_cast<int>(state.range(0));
  std::uniform_int_distribution<int> dist(-9, 9);
  Matrix m(3, n);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = dist(rng);
  Specialization s = pluecker_of_matrix(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_pluecker_relations(s));
  }
}
BENCHMARK(BM_RelationCheck)->Arg(7)->Arg(9);

void BM_Realize(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const int n = static_cast<int>(state.range(0));
  std::uniform_int_distribution<int> dist(-4, 4);
  Specialization s = [&] {
    while (true) {
      Matrix m(3, n);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = dist(rng);
      bool ok = true;
      for (const auto& subset : all_subsets(n, 3))
        if (det(m.columns(subset)) == 0) ok = false;
      if (ok) return pluecker_of_matrix(m);
    }
  }();
  for (auto _ : state) {
    benchmark::DoNotOptimize(realize(s));
  }
}
BENCHMARK(BM_Realize)->Arg(5)->Arg(6);

void BM_CcFrieze(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::pair<int, int>> diagonals;
  for (int j = 3; j < n; ++j) diagonals.emplace_back(1, j);
  Triangulation fan(n, diagonals);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cc_frieze(fan));
  }
}
BENCHMARK(BM_CcFrieze)->Arg(6)->Arg(9)->Arg(12);

void BM_TriangulationSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long total = 0;
    for (const auto& t : enumerate_triangulations(n))
      total += static_cast<long>(cc_frieze(t).values().size());
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_TriangulationSweep)->Arg(7)->Arg(9);

void BM_DecideVolumeOne(benchmark::State& state) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> dist(-5, 5);
  Specialization s = [&] {
    while (true) {
      Matrix m(3, 6);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 6; ++j) m.at(i, j) = 2 * dist(rng);
      bool ok = true;
      for (const auto& subset : all_subsets(6, 3))
        if (det(m.columns(subset)) == 0) ok = false;
      if (ok) return pluecker_of_matrix(m);
    }
  }();
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide_volume_one(s));
  }
}
BENCHMARK(BM_DecideVolumeOne);

void BM_ExtendToSlk(benchmark::State& state) {
  // moment-curve input with frozen values above 1
  Matrix input{{1, 1, 1, 1}, {0, 2, 3, 5}, {0, 1, 3, 10}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(extend_to_slk(input));
  }
}
BENCHMARK(BM_ExtendToSlk);

}  // namespace

BENCHMARK_MAIN();
