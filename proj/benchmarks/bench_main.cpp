#include <benchmark/benchmark.h>

#include "dorod/donet.hpp"
#include "dorod/energy.hpp"
#include "dorod/mslm.hpp"

namespace {

dorod::rod_problem make_problem(int n) {
    return {dorod::mesh1d(1.0, n), 1.0, 1.0, dorod::order_distribution::uniform(100),
            dorod::boundary_condition::displacement(1.0), dorod::body_load::constant(5.0)};
}

}  // namespace

static void BM_assemble_lattice(benchmark::State& state) {
    const auto p = make_problem(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dorod::assemble(p.mesh, p.EA(), p.dist));
}
BENCHMARK(BM_assemble_lattice)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_do_operator(benchmark::State& state) {
    const auto p = make_problem(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dorod::do_operator(p.mesh, p.dist));
}
BENCHMARK(BM_do_operator)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_solve_lattice(benchmark::State& state) {
    const auto p = make_problem(static_cast<int>(state.range(0)));
    const auto lat = dorod::assemble(p.mesh, p.EA(), p.dist);
    for (auto _ : state) benchmark::DoNotOptimize(dorod::solve_static(lat, p.bc, p.load));
}
BENCHMARK(BM_solve_lattice)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_solve_continuum(benchmark::State& state) {
    const auto p = make_problem(static_cast<int>(state.range(0)));
    const dorod::do_operator op(p.mesh, p.dist);
    for (auto _ : state) benchmark::DoNotOptimize(dorod::solve_static(p, op));
}
BENCHMARK(BM_solve_continuum)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_energy_totals(benchmark::State& state) {
    const auto p = make_problem(100);
    const dorod::do_operator op(p.mesh, p.dist);
    const auto lat = dorod::assemble(p.mesh, p.EA(), p.dist);
    const auto ud = dorod::solve_static(p, op);
    const auto um = dorod::solve_static(lat, p.bc, p.load);
    for (auto _ : state) benchmark::DoNotOptimize(dorod::totals(p, op, lat, ud, um));
}
BENCHMARK(BM_energy_totals)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
