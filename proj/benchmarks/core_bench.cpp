// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <spinent/clebsch.hpp>
#include <spinent/coupling.hpp>
#include <spinent/entanglement.hpp>
#include <spinent/errata.hpp>
#include <spinent/jc.hpp>
#include <spinent/listing.hpp>
#include <spinent/spatial.hpp>

#include <benchmark/benchmark.h>

namespace spinent {
namespace {

void BM_ClebschGordanExact(benchmark::State& state) {
    const HalfInt j = HalfInt::from_twice(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(clebsch_gordan_exact(j, HalfInt::integer(0), j, HalfInt::integer(0), j, HalfInt::integer(0)));
}
BENCHMARK(BM_ClebschGordanExact)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_CoupledEigenbasis(benchmark::State& state, const char* spec) {
    const auto sys = parse_system(spec);
    for (auto _ : state) benchmark::DoNotOptimize(coupled_eigenbasis(sys, default_scheme(sys)));
}
BENCHMARK_CAPTURE(BM_CoupledEigenbasis, e_e_e, "e,e,e");
BENCHMARK_CAPTURE(BM_CoupledEigenbasis, p_p_p, "p,p,p");

void BM_ErrataThreePhotons(benchmark::State& state) {
    const auto sys = parse_system("p,p,p");
    const auto basis = coupled_eigenbasis(sys, default_scheme(sys));
    const auto* listings = builtin_listing_set(sys);
    for (auto _ : state) benchmark::DoNotOptimize(match_paper_listing(sys, basis, *listings));
}
BENCHMARK(BM_ErrataThreePhotons);

void BM_SeparabilityReport(benchmark::State& state) {
    const auto ref = find_builtin_listing("eq67");
    const auto psi = ref->listing->state(ref->set->system);
    for (auto _ : state) benchmark::DoNotOptimize(separability_report(psi));
}
BENCHMARK(BM_SeparabilityReport);

void BM_JcEvolve(benchmark::State& state) {
    const JCParams p(1.0, 2.1, 0.05, 2);
    const auto grid = uniform_grid(0.0, 20.0 / p.g(), 201);
    for (auto _ : state) benchmark::DoNotOptimize(evolve_numeric(p, grid));
}
BENCHMARK(BM_JcEvolve)->Unit(benchmark::kMillisecond);

void BM_SpatialRow(benchmark::State& state) {
    const auto sys = parse_system("e,e");
    const auto singlet = coupled_eigenbasis(sys, default_scheme(sys)).back();
    const ScanConfig config{GridSpec(12.0, static_cast<std::size_t>(state.range(0))), 1.2, Exchange::symmetric};
    for (auto _ : state) benchmark::DoNotOptimize(separation_scan(config, singlet, {2.0}));
}
BENCHMARK(BM_SpatialRow)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace spinent

// The packaged benchmark_main archive carries LTO bytecode from another compiler release.
BENCHMARK_MAIN();
