#include "seshadri/bigness.hpp"
#include "seshadri/catalog.hpp"
#include "seshadri/verify.hpp"

#include <benchmark/benchmark.h>

using namespace seshadri;

namespace {

void BM_chow_mul_p2p2(benchmark::State& state) {
    const auto pres = ChowPresentation::multi_projective({2, 2});
    const CycleClass a = multiprojective_hyperplane(pres, 0) + Rational(2) * multiprojective_hyperplane(pres, 1);
    const CycleClass b = power(a, 2) + a;
    for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_chow_mul_p2p2);

void BM_normal_from_euler_p2p2(benchmark::State& state) {
    const auto pres = ChowPresentation::multi_projective({2, 2});
    const CycleClass pol = multiprojective_hyperplane(pres, 0) + multiprojective_hyperplane(pres, 1);
    const ChernSeries tangent = tangent_series(pres);
    for (auto _ : state) benchmark::DoNotOptimize(normal_from_euler(8, pol, tangent));
}
BENCHMARK(BM_normal_from_euler_p2p2);

void BM_delta_poly_scroll(benchmark::State& state) {
    const VarietyData v = build_entry("scroll", {{"e", state.range(0)}});
    for (auto _ : state) benchmark::DoNotOptimize(delta_poly(v));
}
BENCHMARK(BM_delta_poly_scroll)->Arg(2)->Arg(8);

void BM_decide_bigness_scroll8(benchmark::State& state) {
    const VarietyData v = build_entry("scroll", {{"e", 8}});
    const EtaPolynomial p = delta_poly(v);
    for (auto _ : state) benchmark::DoNotOptimize(decide_bigness(p, *v.seshadri()));
}
BENCHMARK(BM_decide_bigness_scroll8);

void BM_sturm_count_degree9(benchmark::State& state) {
    const VarietyData v = build_entry("scroll", {{"e", 8}});
    const UniPoly p = delta_poly(v).poly;
    const OpenInterval interval(Rational(0), Rational(1, 2));
    for (auto _ : state) benchmark::DoNotOptimize(sturm_count(p, interval));
}
BENCHMARK(BM_sturm_count_degree9);

void BM_two_term_identity_y12(benchmark::State& state) {
    const auto pres = ChowPresentation::multi_projective({12, 12});
    const CycleClass b1 = multiprojective_hyperplane(pres, 0);
    const CycleClass b2 = multiprojective_hyperplane(pres, 1);
    for (auto _ : state) benchmark::DoNotOptimize(power(b1 + b2, 12));
}
BENCHMARK(BM_two_term_identity_y12);

void BM_catalog_build_segre_p2p2(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_entry("segre_p2p2", ParamMap{}));
}
BENCHMARK(BM_catalog_build_segre_p2p2);

void BM_verify_entry_veronese(benchmark::State& state) {
    VerifyOptions options;
    options.only = "veronese";
    for (auto _ : state) benchmark::DoNotOptimize(verify_all(options));
}
BENCHMARK(BM_verify_entry_veronese);

} // namespace

BENCHMARK_MAIN();
