// Header combine, decode and wire costs for the erasure scheme.
#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "ncv/header.hpp"
#include "ncv/rng.hpp"

using ncv::Rng;
using ncv::codec::PacketHeader;
using ncv::codec::Scheme;
using ncv::gf::Field;
using ncv::gf::Symbol;

namespace {

void BM_combine_erasure_4way(benchmark::State& state) {
  const auto f8 = std::make_shared<const Field>(8);
  const auto cfg = ncv::codec::make_scheme_config(Scheme::Erasure, 50, 15, f8);
  Rng rng(0xB8);
  std::vector<PacketHeader> hs;
  std::vector<Symbol> cs;
  for (unsigned i = 0; i < 4; ++i) {
    hs.push_back(ncv::codec::encode_source_header(rng.below(50), cfg));
    cs.push_back(rng.nonzero_symbol(*f8));
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(ncv::codec::combine_headers(cs, hs, cfg));
}
BENCHMARK(BM_combine_erasure_4way);

void BM_decode_erasure_w12(benchmark::State& state) {
  const auto f8 = std::make_shared<const Field>(8);
  const auto cfg = ncv::codec::make_scheme_config(Scheme::Erasure, 50, 15, f8);
  Rng rng(0xB9);
  std::vector<PacketHeader> hs;
  std::vector<Symbol> cs;
  for (unsigned p : rng.positions(50, 12)) {
    hs.push_back(ncv::codec::encode_source_header(p, cfg));
    cs.push_back(rng.nonzero_symbol(*f8));
  }
  const auto combined = ncv::codec::combine_headers(cs, hs, cfg);
  for (auto _ : state)
    benchmark::DoNotOptimize(ncv::codec::decode_header(combined, cfg));
}
BENCHMARK(BM_decode_erasure_w12);

void BM_wire_roundtrip_erasure(benchmark::State& state) {
  const auto f8 = std::make_shared<const Field>(8);
  const auto cfg = ncv::codec::make_scheme_config(Scheme::Erasure, 50, 15, f8);
  const auto h = ncv::codec::encode_source_header(17, cfg);
  for (auto _ : state) {
    const auto bytes = ncv::codec::serialize_header(h, cfg);
    benchmark::DoNotOptimize(ncv::codec::parse_header(bytes, cfg));
  }
}
BENCHMARK(BM_wire_roundtrip_erasure);

}  // namespace
