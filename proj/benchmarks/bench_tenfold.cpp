#include <benchmark/benchmark.h>

#include <random>

#include "tenfold/invariants.hpp"
#include "tenfold/ktable.hpp"
#include "tenfold/models.hpp"

using namespace tenfold;

namespace {

ModelParams params_of(std::initializer_list<std::pair<const char*, double>> kv) {
    ModelParams p;
    for (const auto& [k, v] : kv) p.set(k, v);
    return p;
}

CMatrix random_hermitian(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CMatrix a(n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = u(rng);
        for (int j = i + 1; j < n; ++j) {
            a(i, j) = cplx(u(rng), u(rng));
            a(j, i) = std::conj(a(i, j));
        }
    }
    return a;
}

void BM_EigHermitian8(benchmark::State& state) {
    const CMatrix a = random_hermitian(8, 1);
    for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(a));
}
BENCHMARK(BM_EigHermitian8);

void BM_Det8(benchmark::State& state) {
    const CMatrix a = random_hermitian(8, 2);
    for (auto _ : state) benchmark::DoNotOptimize(det(a));
}
BENCHMARK(BM_Det8);

void BM_Pfaffian8(benchmark::State& state) {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CMatrix a(8);
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            a(i, j) = u(rng);
            a(j, i) = -a(i, j).real();
        }
    for (auto _ : state) benchmark::DoNotOptimize(pfaffian(a));
}
BENCHMARK(BM_Pfaffian8);

void BM_SampleKitaev(benchmark::State& state) {
    const BlochModel m = make_model("kitaev_chain", params_of({{"mu", 0.5}, {"t", 1}, {"delta", 1}}));
    for (auto _ : state) benchmark::DoNotOptimize(sample_grid(m, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SampleKitaev)->Arg(64)->Arg(256);

void BM_ChernPWave(benchmark::State& state) {
    const BlochModel m = make_model("chiral_p_wave", params_of({{"mu", 2}, {"t", 1}, {"pd", 1}}));
    for (auto _ : state) {
        const InvariantValue v = chern_number(flatten(sample_grid(m, static_cast<int>(state.range(0)))));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ChernPWave)->Arg(24)->Arg(48);

void BM_Winding1dKitaev(benchmark::State& state) {
    const BlochModel m = make_model("kitaev_chain", params_of({{"mu", 0.5}, {"t", 1}, {"delta", 1}}));
    const UnitaryOp sx{pauli(1), "pauli:x"};
    for (auto _ : state) {
        const InvariantValue v = winding_1d(chiral_block(flatten(sample_grid(m, 128)), sx));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_Winding1dKitaev);

void BM_Winding3dDirac(benchmark::State& state) {
    const BlochModel m = make_model("dirac_3d_chiral", params_of({{"m", 2}}));
    const UnitaryOp g5{kron(pauli(3), pauli(0)), "pauli:z*0"};
    for (auto _ : state) {
        const InvariantValue v = winding_3d(chiral_block(flatten(sample_grid(m, static_cast<int>(state.range(0)))), g5));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_Winding3dDirac)->Arg(32);

void BM_WannierZ2(benchmark::State& state) {
    const BlochModel m = make_model("bhz_qsh", params_of({{"m", 1}, {"coupling", 0.25}}));
    const AntiUnitaryOp theta{kron(pauli(2), pauli(0)), OpKind::TRS, "pauli:y*0 K"};
    for (auto _ : state) {
        const InvariantValue v = z2_wannier_2d(flatten(sample_grid(m, 24)), theta);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_WannierZ2);

void BM_PeriodicTable(benchmark::State& state) {
    for (auto _ : state)
        for (AZClass c : real_classes())
            for (int d = 1; d <= 3; ++d) benchmark::DoNotOptimize(periodic_table_entry(c, d));
}
BENCHMARK(BM_PeriodicTable);

} // namespace

BENCHMARK_MAIN();
