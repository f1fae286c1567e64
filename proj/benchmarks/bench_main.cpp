#include <symgeo/geography.hpp>
#include <symgeo/linalg.hpp>
#include <symgeo/manifold.hpp>
#include <symgeo/presentation.hpp>

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

namespace {

using namespace symgeo;

IntMatrix random_matrix(std::size_t rows, std::size_t cols,
                        std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long long> entry(-50, 50);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
  return m;
}

void bm_smith_normal_form(benchmark::State& state) {
  const IntMatrix m = random_matrix(6, 6, 1);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(bm_smith_normal_form);

void bm_determinant_divisor(benchmark::State& state) {
  const IntMatrix m = random_matrix(6, 6, 2);
  for (auto _ : state) benchmark::DoNotOptimize(determinant_divisor(m, 3));
}
BENCHMARK(bm_determinant_divisor);

void bm_parse_presentation(benchmark::State& state) {
  const std::string text = "<a, b, c | [a, b] a^3 c^-2, b^5 [b, c], c^7>";
  for (auto _ : state) benchmark::DoNotOptimize(parse_presentation(text));
}
BENCHMARK(bm_parse_presentation);

void bm_build_from_presentation(benchmark::State& state) {
  const Presentation p =
      parse_presentation("<a, b, c | [a, b] a^3 c^-2, b^5 [b, c], c^7>");
  for (auto _ : state) benchmark::DoNotOptimize(build_from_presentation(p));
}
BENCHMARK(bm_build_from_presentation);

void bm_upper_envelope(benchmark::State& state) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long long> chi(-100, 100);
  std::uniform_int_distribution<long long> sigma(-60, 60);
  std::vector<Witness> ws;
  for (int i = 0; i < 1000; ++i)
    ws.push_back({"w" + std::to_string(i), chi(rng), sigma(rng)});
  Interval box;
  box.lo = Rational(-4);
  box.hi = Rational(4);
  for (auto _ : state) benchmark::DoNotOptimize(upper_envelope(ws, box));
}
BENCHMARK(bm_upper_envelope);

}  // namespace

BENCHMARK_MAIN();
