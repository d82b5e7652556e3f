#include <benchmark/benchmark.h>

#include "crlc/automorphisms.hpp"
#include "crlc/replication.hpp"

namespace {

using namespace crlc;

void PolyMultiply(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  MapGerm iota = iota_germ(order);
  for (auto _ : state) {
    auto prod = iota.f * iota.phi.conj();
    benchmark::DoNotOptimize(prod);
  }
}
BENCHMARK(PolyMultiply)->Arg(12)->Arg(16)->Arg(20);

void SeriesSqrt(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto& a = alpha_h3();
  Poly z = Poly::var(a, "z", Scalar(1));
  Poly w = Poly::var(a, "w", Scalar(1));
  Series s(Poly(a, Scalar(1)) - (w * w).scaled_long(4) -
               (z * z).scaled(Scalar::imag_ratio(4, 1)),
           order);
  for (auto _ : state) {
    auto r = series_sqrt(s);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(SeriesSqrt)->Arg(12)->Arg(20)->Arg(28);

void VerifyREll(benchmark::State& state) {
  auto r1 = std::get<RationalMap>(catalog_map("r_beta", {{"beta", Scalar(1)}}));
  for (auto _ : state) {
    auto rep = mapping_residual(r1);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(VerifyREll);

void VerifyIotaSeries(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  MapGerm iota = iota_germ(order);
  for (auto _ : state) {
    auto rep = mapping_residual(iota, order);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(VerifyIotaSeries)->Arg(12)->Arg(16)->Arg(20);

void ComposeChain(benchmark::State& state) {
  auto Phi = std::get<RationalMap>(catalog_map("Phi"));
  auto H0 = std::get<RationalMap>(catalog_map("H0"));
  auto C = std::get<RationalMap>(catalog_map("Cayley"));
  auto g1 = std::get<RationalMap>(catalog_map("gamma1"));
  for (auto _ : state) {
    auto chain = compose(Phi, compose(H0, compose(C, g1)));
    benchmark::DoNotOptimize(chain);
  }
}
BENCHMARK(ComposeChain);

void SolveFunctionalR1(benchmark::State& state) {
  FunctionalParams fp{Scalar(2), Scalar(2), Scalar::imag_ratio(6, 1)};
  for (auto _ : state) {
    auto germ = solve_functional_system(fp, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(germ);
  }
}
BENCHMARK(SolveFunctionalR1)->Arg(10)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
