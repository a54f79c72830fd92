#include <benchmark/benchmark.h>

#include "betaseries/beta_digits.hpp"
#include "betaseries/criteria.hpp"
#include "betaseries/exponent_sequence.hpp"
#include "betaseries/series.hpp"
#include "betaseries/sumset.hpp"

using namespace betaseries;

namespace {

AlgebraicBase base(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return AlgebraicBase::create(Polynomial(std::move(v)));
}

void bm_k_fold_squares(benchmark::State& state) {
  const auto horizon = static_cast<std::uint64_t>(state.range(0));
  const auto s = support_up_to(ExponentSequence::power_floor(2), horizon);
  for (auto _ : state) benchmark::DoNotOptimize(k_fold_sum(s, 2, horizon));
}
BENCHMARK(bm_k_fold_squares)->Arg(10000)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void bm_weighted_sum_log_power(benchmark::State& state) {
  const auto horizon = static_cast<std::uint64_t>(state.range(0));
  const auto a = support_up_to(ExponentSequence::log_power(1), horizon);
  const auto b = support_up_to(ExponentSequence::log_power(2), horizon);
  const SumsetOperand ops[] = {{&a, 2}, {&b, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(weighted_sum(ops, horizon));
}
BENCHMARK(bm_weighted_sum_log_power)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void bm_support_up_to(benchmark::State& state) {
  const auto seq = ExponentSequence::log_power(1);
  for (auto _ : state) benchmark::DoNotOptimize(support_up_to(seq, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(bm_support_up_to)->Arg(1000000)->Unit(benchmark::kMillisecond);

void bm_series_evaluate(benchmark::State& state) {
  const AlgebraicBase b = base({-1, -1, 1});
  const auto spec = SeriesSpec::from_support(support_up_to(ExponentSequence::power_floor(2), 1 << 16));
  Integer scale = 1;
  scale <<= static_cast<unsigned long>(state.range(0));
  const Rational w(Integer(1), scale);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(spec, b, w));
}
BENCHMARK(bm_series_evaluate)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);

void bm_sigma_k(benchmark::State& state) {
  Integer scale = 1;
  scale <<= 200;
  const Rational w(Integer(1), scale);
  for (auto _ : state) benchmark::DoNotOptimize(sigma_k(static_cast<unsigned>(state.range(0)), w));
}
BENCHMARK(bm_sigma_k)->Arg(4)->Arg(50)->Unit(benchmark::kMicrosecond);

void bm_beta_expand(benchmark::State& state) {
  const AlgebraicBase b = base({-1, -1, -1, 1});
  const FieldElement eta(b, {Rational(1, 7), Rational(-2, 9), Rational(1, 11)});
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(beta_expand(eta, n));
}
BENCHMARK(bm_beta_expand)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
