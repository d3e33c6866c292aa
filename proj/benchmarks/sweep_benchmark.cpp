#include <benchmark/benchmark.h>

#include "optomech/gaussian_measures.hpp"
#include "optomech/linear_dynamics.hpp"
#include "optomech/presets.hpp"
#include "optomech/sweep.hpp"

namespace {

using namespace optomech;

DerivedQuantities cooling_point()
{
    auto p = reference_parameters();
    p.bec.omega_sw = 2.0 * p.mirror.omega_m;
    p.drive.power = 0.05;
    return derive_quantities(p);
}

void BM_MeanFieldSolve(benchmark::State& state)
{
    auto p = reference_parameters();
    p.bec.omega_sw = p.mirror.omega_m;
    p.drive.power = 0.2;
    p.cavity.delta_c = 4.0 * derive_quantities(p).kappa;
    const auto d = derive_quantities(p);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_mean_field(d));
}
BENCHMARK(BM_MeanFieldSolve);

void BM_StabilityVerdict(benchmark::State& state)
{
    const auto d = cooling_point();
    const auto A = drift_matrix(branch_at_effective_detuning(d, d.omega_m), d);
    for (auto _ : state)
        benchmark::DoNotOptimize(assess_stability(A));
}
BENCHMARK(BM_StabilityVerdict);

void BM_LyapunovSolve(benchmark::State& state)
{
    const auto d = cooling_point();
    const auto A = drift_matrix(branch_at_effective_detuning(d, d.omega_m), d);
    const auto D = diffusion_matrix(d);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_lyapunov(A, D));
}
BENCHMARK(BM_LyapunovSolve);

void BM_LogNegativity(benchmark::State& state)
{
    const auto d = cooling_point();
    const auto V = solve_lyapunov(drift_matrix(branch_at_effective_detuning(d, d.omega_m), d), diffusion_matrix(d));
    const auto V4 = reduce_bipartition(V, Bipartition::atom_field);
    for (auto _ : state)
        benchmark::DoNotOptimize(log_negativity(V4));
}
BENCHMARK(BM_LogNegativity);

void BM_FullSweep(benchmark::State& state)
{
    auto spec = figure_preset("fig5a");
    spec.bec = BecSelection::present;
    spec.points = 600;
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_sweep(spec, threads));
    state.SetItemsProcessed(state.iterations() * spec.points);
}
BENCHMARK(BM_FullSweep)->Arg(0)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_MeanFieldSweep(benchmark::State& state)
{
    auto spec = figure_preset("fig2d");
    for (auto _ : state)
        benchmark::DoNotOptimize(run_sweep(spec, 0));
}
BENCHMARK(BM_MeanFieldSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
