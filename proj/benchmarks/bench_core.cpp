#include <random>

#include <benchmark/benchmark.h>

#include "lht/determinant.hpp"
#include "lht/lecture_hall.hpp"
#include "lht/qjacobi.hpp"
#include "lht/tableau.hpp"

using namespace lht;

// genfun_enum memoizes, so the enumeration cost is measured through enum_set.
static void BM_EnumSet(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enum_set(Variant::AL, n, n / 2 + 1, 20));
}
BENCHMARK(BM_EnumSet)->Arg(4)->Arg(6)->Arg(8);

static void BM_GenfunClosed(benchmark::State& state) {
    const int cap = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(genfun_closed(Variant::L, 6, 4, cap));
}
BENCHMARK(BM_GenfunClosed)->Arg(12)->Arg(24)->Arg(48);

static void BM_LsSeries(benchmark::State& state) {
    const SkewShape shape(Partition{6, 6, 4, 3}, Partition{3, 1});
    const int cap = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ls_series(shape, OrderType::ge_gt(5), cap));
}
BENCHMARK(BM_LsSeries)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

static void BM_JacobiTrudi(benchmark::State& state) {
    const SkewShape shape(Partition{6, 6, 4, 3}, Partition{3, 1});
    const int cap = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(jacobi_trudi(shape, OrderType::ge_gt(5), cap, JtForm::H));
}
BENCHMARK(BM_JacobiTrudi)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

static void BM_DetSeries(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> c(-3, 3), e(-1, 1);
    Matrix<QSeries> m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            QSeries s(10);
            for (int d = 0; d <= 10; ++d) s.set(d, LaurentPoly::monomial(c(rng), e(rng), e(rng)));
            if (i == j) s.set(0, 1);
            m[i].push_back(s);
        }
    for (auto _ : state) benchmark::DoNotOptimize(det(m, QSeries::one(10)));
}
BENCHMARK(BM_DetSeries)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_Selberg(benchmark::State& state) {
    const SpecParams p = SpecParams::from_uv(BigRational(1, 3), BigRational(1, 5), BigRational(2, 7));
    const int terms = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(selberg_check(Partition{2, 1}, 2, p, terms));
}
BENCHMARK(BM_Selberg)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_MomentMatrix(benchmark::State& state) {
    const SpecParams p = SpecParams::from_uv(BigRational(1, 3), BigRational(1, 5), BigRational(2, 7));
    const int size = static_cast<int>(state.range(0));
    for (auto _ : state)
        for (int i = 0; i < size; ++i)
            for (int j = 0; j <= i; ++j) benchmark::DoNotOptimize(mu_mixed(i, j, p));
}
BENCHMARK(BM_MomentMatrix)->Arg(9);
BENCHMARK_MAIN();
