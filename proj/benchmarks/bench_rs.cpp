// Syndrome computation and bounded-distance decoding.
#include <benchmark/benchmark.h>

#include <memory>

#include "ncv/rng.hpp"
#include "ncv/rs.hpp"

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

void BM_syndrome_50_20(benchmark::State& state) {
  const auto f8 = std::make_shared<const Field>(8);
  const Code code(50, 20, f8);
  Rng rng(0xB2);
  const Vec e = pattern(rng, *f8, 50, 15);
  for (auto _ : state) benchmark::DoNotOptimize(ncv::rs::syndrome(e, code));
}
BENCHMARK(BM_syndrome_50_20);

void BM_error_decode_50_20_w15(benchmark::State& state) {
  const auto f8 = std::make_shared<const Field>(8);
  const Code code(50, 20, f8);
  Rng rng(0xB3);
  const Vec e = pattern(rng, *f8, 50, 15);
  const auto synd = ncv::rs::syndrome(e, code);
  for (auto _ : state) benchmark::DoNotOptimize(ncv::rs::bma_error_decode(synd, code));
}
BENCHMARK(BM_error_decode_50_20_w15);

void BM_erasure_decode_50_35_w15(benchmark::State& state) {
  const auto f8 = std::make_shared<const Field>(8);
  const Code code(50, 35, f8);
  Rng rng(0xB4);
  const Vec e = pattern(rng, *f8, 50, 15);
  std::vector<unsigned> locs;
  for (unsigned j = 0; j < 50; ++j)
    if (e[j] != 0) locs.push_back(j);
  const auto synd = ncv::rs::syndrome(e, code);
  for (auto _ : state)
    benchmark::DoNotOptimize(ncv::rs::erasure_decode(synd, locs, code));
}
BENCHMARK(BM_erasure_decode_50_35_w15);

void BM_erasure_decode_255_105_w150(benchmark::State& state) {
  const auto f8 = std::make_shared<const Field>(8);
  const Code code(255, 105, f8);
  Rng rng(0xB5);
  const Vec e = pattern(rng, *f8, 255, 150);
  std::vector<unsigned> locs;
  for (unsigned j = 0; j < 255; ++j)
    if (e[j] != 0) locs.push_back(j);
  const auto synd = ncv::rs::syndrome(e, code);
  for (auto _ : state)
    benchmark::DoNotOptimize(ncv::rs::erasure_decode(synd, locs, code));
}
BENCHMARK(BM_erasure_decode_255_105_w150);

}  // namespace
