#include <benchmark/benchmark.h>

#include "tropval/groebner.hpp"
#include "tropval/initial.hpp"
#include "tropval/parser.hpp"
#include "tropval/sl2.hpp"
#include "tropval/valuation.hpp"

namespace {

using namespace tropval;

Presentation twisted_cubic() {
  return parse_presentation("ring x y z; ideal x^2 - y, x^3 - z;").presentation;
}

void BM_BuchbergerCyclic3(benchmark::State& state) {
  const Ring R = parse_ring("ring a b c;");
  const std::vector<Polynomial> gens = {parse_poly(R, "a + b + c"),
                                        parse_poly(R, "a*b + b*c + c*a"),
                                        parse_poly(R, "a*b*c - 1")};
  for (auto _ : state) {
    benchmark::DoNotOptimize(buchberger(R, gens, MonomialOrder::grevlex(3)));
  }
}
BENCHMARK(BM_BuchbergerCyclic3);

void BM_InitialIdealNegativeWeight(benchmark::State& state) {
  const Presentation P = twisted_cubic();
  const WeightVector w{Rational(-1), Rational(2), Rational(-3)};
  for (auto _ : state) benchmark::DoNotOptimize(initial_ideal(P, w));
}
BENCHMARK(BM_InitialIdealNegativeWeight);

void BM_CheckAxioms(benchmark::State& state) {
  const Presentation P = twisted_cubic();
  const auto v = CandidateValuation::weight_induced(P, WeightVector{1, 2, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_axioms(v, 7, static_cast<std::size_t>(state.range(0)), 3));
  }
}
BENCHMARK(BM_CheckAxioms)->Arg(100)->Arg(400);

void BM_BranchingAlgebraBuild(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sl2_branching_algebra(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_BranchingAlgebraBuild)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
