// Microbenchmarks: per-method iteration cost at table precision, weight-
// condition verification, one error-table row, and a small basin render.

#include <benchmark/benchmark.h>

#include "rootlab/analysis.hpp"
#include "rootlab/basins.hpp"
#include "rootlab/conditions.hpp"
#include "rootlab/precision.hpp"
#include "rootlab/problems.hpp"
#include "rootlab/schemes.hpp"

using namespace rootlab;

namespace {

void BM_MethodStep(benchmark::State& state, MethodKind kind) {
    PrecisionContext ctx(300);
    const Problem& prob = problem_by_name("f1");
    Target<Real> tgt = target_of(prob);
    Real x0(prob.x0);
    for (auto _ : state) {
        StepOutcome<Real> out = method_step(MethodId(kind), tgt, x0);
        benchmark::DoNotOptimize(out.next);
    }
}

void BM_MethodStepComplex(benchmark::State& state, MethodKind kind) {
    const ComplexProblem& prob = polynomial_by_name("p3");
    Target<Cplx<double>> tgt = target_of<Cplx<double>>(prob);
    Cplx<double> z0{0.4, 0.3};
    for (auto _ : state) {
        StepOutcome<Cplx<double>> out = method_step(MethodId(kind), tgt, z0);
        benchmark::DoNotOptimize(out.next);
    }
}

void BM_ConditionCheck(benchmark::State& state) {
    for (auto _ : state) {
        ConditionReport rep = check_weight_conditions(WeightFamily::W1);
        benchmark::DoNotOptimize(rep.all_pass);
    }
}

void BM_TableRow(benchmark::State& state) {
    for (auto _ : state) {
        ErrorTable table = error_table({MethodId(MethodKind::four_point_W1)}, "f1", 3,
                                       static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(table.rows.front().coc_cell);
    }
}

void BM_BasinRender(benchmark::State& state) {
    BasinConfig cfg;
    cfg.problem = polynomial_by_name("p1");
    cfg.method = MethodId(MethodKind::four_point_W2);
    cfg.width = cfg.height = static_cast<int>(state.range(0));
    for (auto _ : state) {
        BasinImage img = render_basin(cfg);
        benchmark::DoNotOptimize(img.assignment.data());
    }
}

}  // namespace

BENCHMARK_CAPTURE(BM_MethodStep, newton, MethodKind::newton);
BENCHMARK_CAPTURE(BM_MethodStep, a3, MethodKind::two_point);
BENCHMARK_CAPTURE(BM_MethodStep, dd2, MethodKind::three_point_W1);
BENCHMARK_CAPTURE(BM_MethodStep, KT0, MethodKind::kung_traub8);
BENCHMARK_CAPTURE(BM_MethodStep, NNN, MethodKind::neta8);
BENCHMARK_CAPTURE(BM_MethodStep, kh1, MethodKind::khattri);
BENCHMARK_CAPTURE(BM_MethodStep, d2, MethodKind::four_point_W1);
BENCHMARK_CAPTURE(BM_MethodStep, d4, MethodKind::four_point_W2);
BENCHMARK_CAPTURE(BM_MethodStep, d6, MethodKind::four_point_W3);
BENCHMARK_CAPTURE(BM_MethodStep, KT, MethodKind::kung_traub16);
BENCHMARK_CAPTURE(BM_MethodStep, NNNN, MethodKind::neta16);
BENCHMARK_CAPTURE(BM_MethodStep, d7, MethodKind::geum_kim1);
BENCHMARK_CAPTURE(BM_MethodStep, d9, MethodKind::geum_kim2);

BENCHMARK_CAPTURE(BM_MethodStepComplex, d4, MethodKind::four_point_W2);
BENCHMARK_CAPTURE(BM_MethodStepComplex, KT, MethodKind::kung_traub16);

BENCHMARK(BM_ConditionCheck);
BENCHMARK(BM_TableRow)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BasinRender)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
