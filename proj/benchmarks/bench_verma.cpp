#include "affverma/conformal.hpp"
#include "affverma/embedding.hpp"
#include "affverma/singular.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace affverma;

namespace {

Rational level_for(int l) { return make_rational(3 - 2 * l, 2); }

// Straighten random words of five degree-one factors.
void BM_Straighten(benchmark::State& st) {
    const int l = static_cast<int>(st.range(0));
    verma::Module m(LieAlgebra::build(AlgebraType::B, l), level_for(l));
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> basis(0, m.algebra().dim() - 1), mode(1, 3);
    std::vector<std::vector<verma::LoopElement>> words(64);
    for (auto& w : words)
        for (int i = 0; i < 5; ++i) w.push_back({m.algebra().basis(basis(rng)), -mode(rng)});
    std::size_t i = 0;
    for (auto _ : st) benchmark::DoNotOptimize(m.normal_form(words[i++ % words.size()]));
}
BENCHMARK(BM_Straighten)->Arg(4)->Arg(6);

void BM_BuildVD(benchmark::State& st) {
    const int l = static_cast<int>(st.range(0));
    verma::Module m(LieAlgebra::build(AlgebraType::D, l), level_for(l));
    for (auto _ : st) benchmark::DoNotOptimize(singular::build_vD(m));
}
BENCHMARK(BM_BuildVD)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SingularVD(benchmark::State& st) {
    const int l = static_cast<int>(st.range(0));
    verma::Module m(LieAlgebra::build(AlgebraType::D, l), level_for(l));
    const auto v = singular::build_vD(m);
    for (auto _ : st) benchmark::DoNotOptimize(singular::check_singular(m, v, "vD"));
}
BENCHMARK(BM_SingularVD)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Certificate(benchmark::State& st) {
    const int l = static_cast<int>(st.range(0));
    verma::Module mb(LieAlgebra::build(AlgebraType::B, l), level_for(l));
    verma::Module md(LieAlgebra::build(AlgebraType::D, l), level_for(l));
    for (auto _ : st) benchmark::DoNotOptimize(embedding::verify_membership_certificate(mb, md));
}
BENCHMARK(BM_Certificate)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ConformalEquality(benchmark::State& st) {
    const int l = static_cast<int>(st.range(0));
    verma::Module mb(LieAlgebra::build(AlgebraType::B, l), level_for(l));
    verma::Module md(LieAlgebra::build(AlgebraType::D, l), level_for(l));
    for (auto _ : st) benchmark::DoNotOptimize(conformal::verify_conformal_equality(mb, md));
}
BENCHMARK(BM_ConformalEquality)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
