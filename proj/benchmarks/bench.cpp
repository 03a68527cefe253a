#include <benchmark/benchmark.h>

#include "nichols/catalog.hpp"
#include "nichols/oracle.hpp"

using namespace nichols;

namespace {

BraidingMatrix cartan_a2(std::int64_t n) {
    auto ctx = ScalarContext::make(n, std::nullopt);
    Scalar q = scalar_zeta(ctx, 1);
    return BraidingMatrix(ctx, 2, {q, scalar_inv(ctx, q), scalar_one(), q});
}

void BM_enumerate_a11(benchmark::State& state) {
    auto built = Catalog::instance().build_diagram("super:A", CatalogParams::parse("theta=2,J=1,N=5"));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_groupoid(built.matrix.twist_class()));
}
BENCHMARK(BM_enumerate_a11);

void BM_enumerate_g86(benchmark::State& state) {
    auto built = Catalog::instance().build_diagram("supermodular3:g(8,6)", CatalogParams::parse(""));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_groupoid(built.matrix.twist_class()));
}
BENCHMARK(BM_enumerate_g86);

void BM_isotropy_g86(benchmark::State& state) {
    auto built = Catalog::instance().build_diagram("supermodular3:g(8,6)", CatalogParams::parse(""));
    auto b = enumerate_groupoid(built.matrix.twist_class());
    for (auto _ : state) benchmark::DoNotOptimize(isotropy_order(b, 0));
}
BENCHMARK(BM_isotropy_g86);

void BM_symmetrizer_rank(benchmark::State& state) {
    auto q = cartan_a2(3);
    for (auto _ : state) {
        NicholsOracle oracle(q);
        benchmark::DoNotOptimize(oracle.block_rank(Root{4, 4}));
    }
}
BENCHMARK(BM_symmetrizer_rank);

void BM_hilbert_a11(benchmark::State& state) {
    auto built = Catalog::instance().build_diagram("super:A", CatalogParams::parse("theta=2,J=1,N=3"));
    for (auto _ : state) {
        NicholsOracle oracle(built.matrix);
        benchmark::DoNotOptimize(oracle.hilbert_series(7));
    }
}
BENCHMARK(BM_hilbert_a11);

void BM_recognize(benchmark::State& state) {
    auto built = Catalog::instance().build_diagram("ufo:7", CatalogParams::parse("point=a1"));
    for (auto _ : state) benchmark::DoNotOptimize(Catalog::instance().recognize(built.matrix));
}
BENCHMARK(BM_recognize);

}  // namespace

BENCHMARK_MAIN();
