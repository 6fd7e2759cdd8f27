#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "lls/lls.hpp"

namespace {

lls::CayleyTable free_table2() {
  return lls::free_semigroup({"x", "y"}).table;
}

void BM_normalize(benchmark::State& state) {
  // worst-ish case: long word, every letter forces a support scan
  auto w = lls::Word::parse("xyzxyzxyzxyzxyzxyzxyzxyzxyzxyz");
  for (auto _ : state) {
    benchmark::DoNotOptimize(lls::normalize(w));
  }
}
BENCHMARK(BM_normalize);

void BM_circ(benchmark::State& state) {
  auto a = lls::normalize(lls::Word::parse("xxyz"));
  auto b = lls::normalize(lls::Word::parse("xzwy"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lls::circ(a, b));
  }
}
BENCHMARK(BM_circ);

void BM_free_semigroup(benchmark::State& state) {
  std::vector<lls::Letter> alphabet;
  for (int i = 0; i < state.range(0); ++i) {
    alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(lls::free_semigroup(alphabet));
  }
  state.SetLabel("order " +
                 std::to_string(lls::free_semigroup_order(alphabet.size())));
}
BENCHMARK(BM_free_semigroup)->DenseRange(2, 4);

void BM_enumerate_congruences(benchmark::State& state) {
  auto t = free_table2();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lls::enumerate_congruences(t));
  }
}
BENCHMARK(BM_enumerate_congruences);

void BM_left_legal_census(benchmark::State& state) {
  lls::EnumerationOptions opt;
  opt.left_legal = true;
  opt.up_to_iso = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lls::enumerate_semigroups(state.range(0), opt));
  }
}
BENCHMARK(BM_left_legal_census)->DenseRange(3, 5);

void BM_theorem_audit(benchmark::State& state) {
  auto t = lls::CayleyTable(
      {"a", "b", "c", "d", "e", "f"},
      std::vector<std::vector<int>>{{4, 2, 4, 2, 4, 2},
                                    {3, 5, 3, 5, 3, 5},
                                    {2, 2, 2, 2, 2, 2},
                                    {3, 3, 3, 3, 3, 3},
                                    {4, 4, 4, 4, 4, 4},
                                    {5, 5, 5, 5, 5, 5}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(lls::theorem_audit(t));
  }
}
BENCHMARK(BM_theorem_audit);

void BM_analyze(benchmark::State& state) {
  auto t = free_table2();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lls::analyze(t));
  }
}
BENCHMARK(BM_analyze);

}  // namespace

BENCHMARK_MAIN();
