// Interpolation list decoding at the two working tiers.
#include <benchmark/benchmark.h>

#include <memory>

#include "ncv/list_decode.hpp"
#include "ncv/rng.hpp"

using ncv::Rng;
using ncv::gf::Field;
using ncv::rs::Code;
using ncv::rs::Vec;

namespace {

Vec pattern(Rng& rng, const Field& f, unsigned n, unsigned wt) {
  Vec v(n, 0);
  for (unsigned p : rng.positions(n, wt)) v[p] = rng.nonzero_symbol(f);
  return v;
}

void BM_list_15_5_t6(benchmark::State& state) {
  const auto f4 = std::make_shared<const Field>(4);
  const Code code(15, 5, f4);
  Rng rng(0xB6);
  const Vec e = pattern(rng, *f4, 15, 6);
  const auto synd = ncv::rs::syndrome(e, code);
  ncv::listdec::ListDecodeParams lp;
  lp.radius = 6;
  for (auto _ : state)
    benchmark::DoNotOptimize(ncv::listdec::list_error_patterns(synd, code, lp));
}
BENCHMARK(BM_list_15_5_t6);

// Seconds per decode; pinned to one iteration so a full benchmark run stays
// short.
void BM_list_63_28_t21(benchmark::State& state) {
  const auto f6 = std::make_shared<const Field>(6);
  const Code code(63, 28, f6);
  Rng rng(0xB7);
  const Vec e = pattern(rng, *f6, 63, 21);
  const auto synd = ncv::rs::syndrome(e, code);
  ncv::listdec::ListDecodeParams lp;
  lp.radius = 21;
  for (auto _ : state)
    benchmark::DoNotOptimize(ncv::listdec::list_error_patterns(synd, code, lp));
}
BENCHMARK(BM_list_63_28_t21)->Iterations(1)->Unit(benchmark::kMillisecond);

}  // namespace
