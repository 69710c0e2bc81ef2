#include <benchmark/benchmark.h>

#include "hopfkit/action.hpp"
#include "hopfkit/hopf.hpp"
#include "hopfkit/induce.hpp"
#include "hopfkit/presets.hpp"

using namespace hopfkit;

namespace {

Workspace make_nullplane(int deg, int z) {
    return Workspace::load_text(presets::nullplane(), deg, z);
}

void BM_Elaborate(benchmark::State& state) {
    PresentationFile file = parse_presentation(presets::nullplane());
    const int deg = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Triplet t = elaborate(file, deg, 4);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_Elaborate)->Arg(4)->Arg(8);

void BM_NormalOrder(benchmark::State& state) {
    Workspace ws = make_nullplane(static_cast<int>(state.range(0)), 4);
    const Algebra& U = ws.base().first;
    // Pp^n K^n is the worst descent pattern of the pair.
    const int n = static_cast<int>(state.range(0)) / 2;
    Element a = power(U.generator(2), static_cast<unsigned>(n), U);
    Element b = power(U.generator(0), static_cast<unsigned>(n), U);
    for (auto _ : state) {
        Algebra fresh = U;
        fresh.clear_memos();
        Element r = multiply(a, b, fresh);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_NormalOrder)->Arg(6)->Arg(10);

void BM_Verify(benchmark::State& state) {
    const int deg = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Workspace ws = make_nullplane(deg, deg);
        AxiomReport report = verify_axioms(ws, deg);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_Verify)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Induce(benchmark::State& state) {
    const int deg = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Workspace ws = make_nullplane(deg, 4);
        Character chi = parse_character(ws.base(), "Pm=1,Pp=1/2");
        InducedRep rep = induce(ws, chi, ActionKind::LeftCoregular, deg);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_Induce)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Pairing(benchmark::State& state) {
    Workspace ws = make_nullplane(6, 4);
    const Triplet& t = ws.base();
    Element h = parse_expression(t, "K^2*Pm^2*Pp^2");
    Element f = parse_expression(t, "exp(2*phi)*am^2*ap^2");
    for (auto _ : state) {
        Laurent v = pair_elements(h, f, t);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_Pairing);

}  // namespace

BENCHMARK_MAIN();
