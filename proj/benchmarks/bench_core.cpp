#include <benchmark/benchmark.h>

#include "gl3hc/gl3hc.hpp"

using namespace gl3hc;

namespace {

Sample point(std::vector<std::size_t> shape)
{
    Config cfg;
    cfg.seed = 42;
    return sample_generic(shape, cfg);
}

void BM_Izergin(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto smp = point({n, n});
    const KernelContext ctx(smp.q);
    for (auto _ : state) {
        benchmark::DoNotOptimize(izergin(ctx, smp.sets[0], smp.sets[1]));
    }
}
BENCHMARK(BM_Izergin)->DenseRange(1, 8);

void BM_IzerginLaurent(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto smp = point({n, n, 1});
    const KernelContext ctx(smp.q);
    auto x = lift<LaurentSeries>(smp.sets[0]);
    auto y = lift<LaurentSeries>(smp.sets[1]);
    x.push_back(LaurentSeries(smp.sets[2][0]));
    y.push_back(LaurentSeries::variable(smp.sets[2][0], Rational(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(izergin(ctx, x, y));
    }
}
BENCHMARK(BM_IzerginLaurent)->DenseRange(0, 5);

void BM_HighestCoefficient(benchmark::State& state)
{
    const auto rep = static_cast<Rep>(state.range(0));
    const auto a = static_cast<std::size_t>(state.range(1));
    const auto b = static_cast<std::size_t>(state.range(2));
    const auto smp = point({a, a, b, b});
    const KernelContext ctx(smp.q);
    state.SetLabel(std::string(rep_name(rep)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            highest_coefficient(ctx, Side::Left, rep, smp.sets[0], smp.sets[1], smp.sets[2], smp.sets[3]));
    }
}
BENCHMARK(BM_HighestCoefficient)->ArgsProduct({{0, 1, 2, 3, 4, 5}, {1, 3}, {2}});

void BM_ScalarProductSymbolic(benchmark::State& state)
{
    const auto a = static_cast<std::size_t>(state.range(0));
    const auto smp = point({a, a, a, a});
    const KernelContext ctx(smp.q);
    const ScalarSets sets{smp.sets[0], smp.sets[1], smp.sets[2], smp.sets[3]};
    for (auto _ : state) {
        benchmark::DoNotOptimize(scalar_product_symbolic(ctx, sets));
    }
}
BENCHMARK(BM_ScalarProductSymbolic)->DenseRange(1, 3);

void BM_LaurentProduct(benchmark::State& state)
{
    const int window = static_cast<int>(state.range(0));
    std::vector<Rational> c;
    for (int k = 0; k < window; ++k) {
        c.emplace_back(k + 1, k + 2);
    }
    const LaurentSeries s(-1, c);
    for (auto _ : state) {
        benchmark::DoNotOptimize(s * s);
    }
}
BENCHMARK(BM_LaurentProduct)->RangeMultiplier(2)->Range(2, 32);

void BM_LaurentInverse(benchmark::State& state)
{
    const int window = static_cast<int>(state.range(0));
    std::vector<Rational> c;
    for (int k = 0; k < window; ++k) {
        c.emplace_back(k + 1, k + 2);
    }
    const LaurentSeries s(1, c);
    for (auto _ : state) {
        benchmark::DoNotOptimize(s.inverse());
    }
}
BENCHMARK(BM_LaurentInverse)->RangeMultiplier(2)->Range(2, 32);

} // namespace

BENCHMARK_MAIN();
