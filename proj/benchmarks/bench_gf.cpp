// Field arithmetic throughput.
#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "ncv/gf.hpp"
#include "ncv/rng.hpp"

using ncv::Rng;
using ncv::gf::ExtField;
using ncv::gf::Field;
using ncv::gf::Symbol;

namespace {

std::vector<Symbol> random_symbols(const Field& f, std::size_t count, bool nonzero) {
  Rng rng(0xB0);
  std::vector<Symbol> v(count);
  for (auto& x : v) x = nonzero ? rng.nonzero_symbol(f) : rng.symbol(f);
  return v;
}

void BM_mul(benchmark::State& state) {
  const Field f(unsigned(state.range(0)));
  const auto a = random_symbols(f, 1024, false);
  const auto b = random_symbols(f, 1024, false);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.mul(a[i & 1023], b[(i + 7) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_mul)->Arg(4)->Arg(8)->Arg(16);

void BM_inv(benchmark::State& state) {
  const Field f(unsigned(state.range(0)));
  const auto a = random_symbols(f, 1024, true);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.inv(a[i & 1023]));
    ++i;
  }
}
BENCHMARK(BM_inv)->Arg(8)->Arg(16);

void BM_ext_mul(benchmark::State& state) {
  const auto f8 = std::make_shared<const Field>(8);
  const ExtField ext(f8, 4);  // F_(2^32)
  Rng rng(0xB1);
  std::vector<ExtField::Elem> a(1024), b(1024);
  for (auto& x : a) x = rng.next() & ext.mask();
  for (auto& x : b) x = rng.next() & ext.mask();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ext.mul(a[i & 1023], b[(i + 3) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_ext_mul);

}  // namespace

BENCHMARK_MAIN();
