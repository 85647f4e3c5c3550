#include <benchmark/benchmark.h>

#include <pla/arith.hpp>
#include <pla/counting.hpp>
#include <pla/expsum.hpp>
#include <pla/primes.hpp>
#include <pla/quadratic.hpp>
#include <pla/sievecount.hpp>
#include <pla/vaaler.hpp>

namespace {

const pla::QuadraticIrrational kSqrt2{0, 1, 2, 1};

void BM_sieve(benchmark::State& state) {
  auto span = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto t = pla::sieve_primes(1, span);
    benchmark::DoNotOptimize(t.count());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(span));
}
BENCHMARK(BM_sieve)->Arg(1 << 20)->Arg(1 << 23);

void BM_frac128_walk(benchmark::State& state) {
  pla::Frac128 step = kSqrt2.to_fixed(128).frac128();
  pla::Frac128 acc{};
  double sink = 0.0;
  for (auto _ : state) {
    for (int i = 0; i < 1024; ++i) {
      acc += step;
      sink += acc.dist_to_int();
    }
  }
  benchmark::DoNotOptimize(sink);
  state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_frac128_walk);

void BM_prime_exp_sum(benchmark::State& state) {
  auto hi = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto v = pla::prime_exp_sum(3, kSqrt2, 2, hi);
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(hi));
}
BENCHMARK(BM_prime_exp_sum)->Arg(100000)->Arg(1000000);

void BM_psi_star(benchmark::State& state) {
  pla::VaalerKernel k(static_cast<int>(state.range(0)));
  double x = 0.123456, sink = 0.0;
  for (auto _ : state) {
    sink += pla::psi_star(x, k);
    x += 0.001;
  }
  benchmark::DoNotOptimize(sink);
}
BENCHMARK(BM_psi_star)->Arg(16)->Arg(128);

void BM_count_sieve_cell(benchmark::State& state) {
  pla::FixedReal alpha = pla::FixedReal::from_decimal("1.3");
  auto N = static_cast<std::uint64_t>(state.range(0));
  double window = pla::window_mu(N, 0.1);
  for (auto _ : state) {
    auto c = pla::count_sieve_s(alpha, kSqrt2, N, window, 2, 3, 1);
    benchmark::DoNotOptimize(c);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(N / 2));
}
BENCHMARK(BM_count_sieve_cell)->Arg(20736);

void BM_count_f_n(benchmark::State& state) {
  pla::FixedReal alpha = pla::FixedReal::from_decimal("1.3");
  auto N = static_cast<std::uint64_t>(state.range(0));
  pla::PrimeTable r_primes = pla::sieve_primes(2, 2 * N);
  for (auto _ : state) {
    auto r = pla::count_f_n(alpha, kSqrt2, 0.1, N, &r_primes);
    benchmark::DoNotOptimize(r.count);
  }
}
BENCHMARK(BM_count_f_n)->Arg(4900);

}  // namespace

BENCHMARK_MAIN();
