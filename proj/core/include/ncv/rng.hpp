// rng.hpp - deterministic pseudo-random draws on top of std::mt19937_64.
// All derived draws avoid std::uniform_int_distribution so the byte stream
// depends only on the seed, not on the standard library implementation.
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "ncv/gf.hpp"

namespace ncv {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n). Modulo bias is < 2^-32 for the n used here.
  std::uint32_t below(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    return std::uint32_t(next() % n);
  }

  double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

  gf::Symbol symbol(const gf::Field& f) { return gf::Symbol(below(f.size())); }
  gf::Symbol nonzero_symbol(const gf::Field& f) {
    return gf::Symbol(1 + below(f.size() - 1));
  }

  // `count` distinct positions from [0, n), sorted ascending.
  std::vector<unsigned> positions(unsigned n, unsigned count) {
    if (count > n) throw std::invalid_argument("Rng::positions: count > n");
    std::vector<unsigned> all(n);
    for (unsigned i = 0; i < n; ++i) all[i] = i;
    for (unsigned i = 0; i < count; ++i) {
      unsigned j = i + below(n - i);
      std::swap(all[i], all[j]);
    }
    all.resize(count);
    std::sort(all.begin(), all.end());
    return all;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace ncv
