#include <benchmark/benchmark.h>

#include <random>

#include "jetorder/diffops.hpp"
#include "jetorder/families.hpp"
#include "jetorder/jets.hpp"
#include "jetorder/matrix.hpp"
#include "jetorder/toric.hpp"

using namespace jetorder;

namespace {

RationalMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 7);
  RationalMatrix m(n, n, Rational(0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = Rational(num(rng), den(rng));
      m(r, c).canonicalize();
    }
  return m;
}

void BM_RankExact(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank_exact(m));
}
BENCHMARK(BM_RankExact)->Arg(8)->Arg(16)->Arg(32);

void BM_GenericRankSymbolic(benchmark::State& state) {
  const auto v = veronese_family(2, static_cast<int>(state.range(0))).space;
  const auto jm = symbolic_jet_matrix(v, static_cast<int>(state.range(0)));
  RankOptions o;
  o.symbolic_threshold = 64;
  for (auto _ : state) benchmark::DoNotOptimize(generic_rank(jm, o));
}
BENCHMARK(BM_GenericRankSymbolic)->Arg(1)->Arg(2)->Arg(3);

void BM_GenericRankRandomized(benchmark::State& state) {
  const auto v = hirzebruch_family(1, static_cast<int>(state.range(0)), 2).space;
  const auto jm = symbolic_jet_matrix(v, static_cast<int>(state.range(0)));
  RankOptions o;
  o.symbolic_threshold = 0;
  for (auto _ : state) benchmark::DoNotOptimize(generic_rank(jm, o));
}
BENCHMARK(BM_GenericRankRandomized)->Arg(3)->Arg(5)->Arg(7);

void BM_HilbertNinj(benchmark::State& state) {
  const auto p = hirzebruch_family(1, static_cast<int>(state.range(0)), 3).polytope;
  for (auto _ : state) benchmark::DoNotOptimize(n_inj_hilbert(p.points()));
}
BENCHMARK(BM_HilbertNinj)->Arg(4)->Arg(8)->Arg(12);

void BM_EvaluationImage(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto v = veronese_family(2, m).space;
  for (auto _ : state) benchmark::DoNotOptimize(evaluation_image(v, m));
}
BENCHMARK(BM_EvaluationImage)->Arg(1)->Arg(2)->Arg(3);

void BM_N1SurjHirzebruch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(n1_surj_toric(hirzebruch_family(2, 5, 2).polytope));
}
BENCHMARK(BM_N1SurjHirzebruch);

}  // namespace
BENCHMARK_MAIN();
