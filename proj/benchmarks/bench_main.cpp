#include <benchmark/benchmark.h>

#include "qtl/asymptotics/asymptotics.hpp"
#include "qtl/bernoulli/relations.hpp"
#include "qtl/gppv/gppv.hpp"
#include "qtl/lie/lie.hpp"
#include "qtl/seifert/seifert.hpp"
#include "qtl/wrt/wrt.hpp"

using namespace qtl;

namespace {

plumbing::PlumbingGraph e8()
{
    return plumbing::make_graph({-2, -2, -2, -2, -2, -2, -2, -2}, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}});
}

void BM_SmithForm(benchmark::State& state)
{
    auto L = plumbing::linking_data(e8());
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(L.B().matrix()));
}
BENCHMARK(BM_SmithForm);

void BM_ZhatE8(benchmark::State& state)
{
    auto L = plumbing::linking_data(e8());
    auto b = plumbing::spinc_classes(L)[0];
    for (auto _ : state) benchmark::DoNotOptimize(gppv::zhat_series(L, b, Rational(state.range(0))));
}
BENCHMARK(BM_ZhatE8)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_WrtE8(benchmark::State& state)
{
    auto L = plumbing::linking_data(e8());
    for (auto _ : state) benchmark::DoNotOptimize(wrt::wrt_invariant(L, state.range(0)));
}
BENCHMARK(BM_WrtE8)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_HurwitzMellin(benchmark::State& state)
{
    auto h = lfunc::hurwitz_handle(Rational(1, 3));
    for (auto _ : state) benchmark::DoNotOptimize(lfunc::mellin_oracle(h, -0.5, 4));
}
BENCHMARK(BM_HurwitzMellin)->Unit(benchmark::kMillisecond);

void BM_GSeries(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(seifert::g_series({2, 3, 5, 7}, state.range(0)));
}
BENCHMARK(BM_GSeries)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_SeifertFeq(benchmark::State& state)
{
    auto S = seifert::make_seifert({2, 3, 5});
    auto delta = seifert::default_delta(S);
    seifert::FeqOptions opt;
    opt.self_check = false;
    for (auto _ : state) benchmark::DoNotOptimize(seifert::functional_equation_check(S, delta, 1.0, opt));
}
BENCHMARK(BM_SeifertFeq)->Unit(benchmark::kMillisecond);

void BM_EpsteinRelation(benchmark::State& state)
{
    auto w = bernoulli::make_weight_form(2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
    for (auto _ : state)
        benchmark::DoNotOptimize(
            bernoulli::relation_check(asymptotics::indicator(2), {Rational(1, 2), Rational(1, 2)}, w, 0));
}
BENCHMARK(BM_EpsteinRelation)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_LieFiniteSum(benchmark::State& state)
{
    auto S = seifert::make_seifert({2, 3, 5});
    auto R = lie::root_system(state.range(0) == 1 ? "A1" : "A2");
    for (auto _ : state) benchmark::DoNotOptimize(lie::radial_limit_finite_sum(S, R, 4));
}
BENCHMARK(BM_LieFiniteSum)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
