// Serial reference kernels against their OpenMP counterparts.

#include "dps/kernels.hpp"
#include "dps/metaplectic.hpp"
#include "dps/wigner.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

dps::CMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    dps::CMatrix m(n);
    for (auto& x : m.data()) x = {g(rng), g(rng)};
    return m;
}

template <auto Kernel>
void BM_matmul(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const dps::CMatrix a = random_matrix(n, rng), b = random_matrix(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
    state.SetComplexityN(state.range(0));
}

template <auto Kernel>
void BM_covariance(benchmark::State& state) {
    const auto n = state.range(0);
    const dps::Lattice lat = dps::Lattice::of(n);
    const dps::PhaseFamily family = dps::delta_family(lat);
    const dps::SympMat s = dps::h_t(lat.modulus());
    const auto image = dps::action_image(s);
    const dps::CMatrix u = dps::u_of(s, lat).matrix();
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(u, family, image));
}

template <auto Kernel>
void BM_expectations(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const auto n = state.range(0);
    const dps::PhaseFamily family = dps::delta_family(dps::Lattice::of(n));
    const dps::QuantumState psi = dps::QuantumState::random(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(psi.amplitudes(), family));
}

} // namespace

BENCHMARK(BM_matmul<dps::kernels::serial::matmul>)->Name("matmul/serial")->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(BM_matmul<dps::kernels::parallel::matmul>)->Name("matmul/parallel")->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(BM_covariance<dps::kernels::serial::covariance_residual>)->Name("covariance/serial")->Arg(9)->Arg(15)->Arg(21);
BENCHMARK(BM_covariance<dps::kernels::parallel::covariance_residual>)->Name("covariance/parallel")->Arg(9)->Arg(15)->Arg(21);
BENCHMARK(BM_expectations<dps::kernels::serial::expectations>)->Name("expectations/serial")->Arg(15)->Arg(31)->Arg(63);
BENCHMARK(BM_expectations<dps::kernels::parallel::expectations>)->Name("expectations/parallel")->Arg(15)->Arg(31)->Arg(63);

BENCHMARK_MAIN();
