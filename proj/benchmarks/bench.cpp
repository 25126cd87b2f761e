#include <benchmark/benchmark.h>

#include "gpc/bassserre.hpp"
#include "gpc/classify.hpp"
#include "gpc/frontend.hpp"
#include "gpc/kernel.hpp"
#include "gpc/oracle.hpp"
#include "gpc/parabolic.hpp"

namespace {
  using namespace gpc;

  std::vector<std::pair<Presentation, Word>> corpus(std::size_t n,
                                                    std::size_t length) {
    Rng                                         rng(1);
    std::vector<std::pair<Presentation, Word>> out;
    for (std::size_t i = 0; i < n; ++i) {
      auto p = random_presentation(rng, {1, 4});
      out.emplace_back(p, random_word(rng, p, length));
    }
    return out;
  }

  void BM_reduce(benchmark::State& state) {
    auto const data = corpus(256, static_cast<std::size_t>(state.range(0)));
    std::size_t i = 0;
    for (auto _ : state) {
      auto const& [p, w] = data[i++ % data.size()];
      benchmark::DoNotOptimize(reduce(p, w));
    }
  }
  BENCHMARK(BM_reduce)->Arg(6)->Arg(24)->Arg(96);

  void BM_oracle_normal_form(benchmark::State& state) {
    auto const data = corpus(256, 6);
    std::size_t i = 0;
    for (auto _ : state) {
      auto const& [p, w] = data[i++ % data.size()];
      benchmark::DoNotOptimize(oracle_normal_form(p, w));
    }
  }
  BENCHMARK(BM_oracle_normal_form);

  void BM_parabolic_closure(benchmark::State& state) {
    auto const data = corpus(256, static_cast<std::size_t>(state.range(0)));
    std::size_t i = 0;
    for (auto _ : state) {
      auto const& [p, w] = data[i++ % data.size()];
      auto const x = reduce(p, w);
      benchmark::DoNotOptimize(parabolic_closure(p, {&x, 1}));
    }
  }
  BENCHMARK(BM_parabolic_closure)->Arg(6)->Arg(24);

  void BM_psi_ex1(benchmark::State& state) {
    auto const p = fixture_ex1();
    auto       k = kernel_presentation(p, 0);
    auto const w = parse_element(p, "(v1*v3*v1^-1*v3^-1*v2)^8");
    for (auto _ : state) {
      benchmark::DoNotOptimize(psi(k, w));
    }
  }
  BENCHMARK(BM_psi_ex1);

  void BM_compress(benchmark::State& state) {
    auto const p = fixture_ex1();
    std::vector<NormalForm> X{parse_element(p, "v1*v3*v1^-1*v3^-1"),
                              parse_element(p, "v2*v1*v3*v1^-1")};
    for (auto _ : state) {
      benchmark::DoNotOptimize(compress(p, X));
    }
  }
  BENCHMARK(BM_compress);

  void BM_translation_length(benchmark::State& state) {
    auto const p = fixture_square();
    auto const s = split_at(p, 0);
    auto const x = parse_element(p, "(a*c*b^-1*d)^16");
    for (auto _ : state) {
      benchmark::DoNotOptimize(classify_action(p, s, x));
    }
  }
  BENCHMARK(BM_translation_length);

  void BM_classify_ex2gen(benchmark::State& state) {
    auto const p = fixture_ex2gen();
    std::vector<NormalForm> X{parse_element(p, "a*c"), parse_element(p, "b*c")};
    for (auto _ : state) {
      benchmark::DoNotOptimize(classify(p, X));
    }
  }
  BENCHMARK(BM_classify_ex2gen)->Unit(benchmark::kMillisecond);

  void BM_abelian_rank(benchmark::State& state) {
    auto const p = fixture_square();
    std::vector<NormalForm> X{parse_element(p, "a*c"), parse_element(p, "b*d"),
                              parse_element(p, "(a*c)^2*b*d")};
    for (auto _ : state) {
      benchmark::DoNotOptimize(abelian_rank(p, X));
    }
  }
  BENCHMARK(BM_abelian_rank)->Unit(benchmark::kMillisecond);
}  // namespace
BENCHMARK_MAIN();
