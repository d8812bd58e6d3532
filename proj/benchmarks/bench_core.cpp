#include <benchmark/benchmark.h>

#include "qibd/distribution.hpp"
#include "qibd/hamiltonian.hpp"
#include "qibd/interferometer.hpp"
#include "qibd/qibd.hpp"
#include "qibd/statevector.hpp"

namespace {

using namespace qibd;

void bm_hadamard(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    StateVector sv(n);
    for (auto _ : state) {
        sv.apply_hadamard(n / 2);
        benchmark::DoNotOptimize(sv.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}
BENCHMARK(bm_hadamard)->Arg(10)->Arg(16)->Arg(20);

void bm_diagonal(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    StateVector sv(n + 1);
    sv.apply_hadamard(0);
    const PhaseProfile profile = phase_profile(ising_chain(n), 0.7);
    for (auto _ : state) {
        sv.apply_diagonal(profile.phases, QubitRange{1, n}, 0);
        benchmark::DoNotOptimize(sv.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}
BENCHMARK(bm_diagonal)->Arg(10)->Arg(16);

void bm_preparation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DiscreteDistribution p = gaussian(n, GaussianSpec{0.4 * (1 << n), 0.1 * (1 << n)});
    const Preparation prep = Preparation::from_probabilities(p.probs());
    StateVector sv(n + 1);
    sv.apply_hadamard(0);
    for (auto _ : state) {
        sv.apply_preparation(prep, QubitRange{1, n}, 0);
        benchmark::DoNotOptimize(sv.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}
BENCHMARK(bm_preparation)->Arg(10)->Arg(16);

void bm_qibc_direct(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DiscreteDistribution p = gaussian(n, GaussianSpec{0.3 * (1 << n), 0.1 * (1 << n)});
    const DiscreteDistribution q = gaussian(n, GaussianSpec{0.6 * (1 << n), 0.15 * (1 << n)});
    const PhaseProfile profile = phase_profile(ising_chain(n), 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qibc_direct(p, q, profile).distance);
    }
    state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}
BENCHMARK(bm_qibc_direct)->Arg(10)->Arg(16)->Arg(20);

void bm_measure(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DiscreteDistribution p = gaussian(n, GaussianSpec{0.3 * (1 << n), 0.1 * (1 << n)});
    const DiscreteDistribution q = gaussian(n, GaussianSpec{0.6 * (1 << n), 0.15 * (1 << n)});
    const PhaseProfile profile = phase_profile(ising_chain(n), 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            measure_qibd(make_circuit_spec(p, q, profile), ReadoutMode::exact()).distance);
    }
}
BENCHMARK(bm_measure)->Arg(5)->Arg(10)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
