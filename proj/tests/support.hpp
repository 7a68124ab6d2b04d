// Shared helpers for the test binaries.
#pragma once

#include <optional>
#include <vector>

#include "ncv/gf.hpp"
#include "ncv/header.hpp"
#include "ncv/linalg.hpp"
#include "ncv/rng.hpp"
#include "ncv/rs.hpp"

namespace testsup {

// Random vector of exact weight wt (nonzero coefficients on wt distinct
// positions).
inline ncv::rs::Vec random_pattern(ncv::Rng& rng, const ncv::gf::Field& f, unsigned n,
                                   unsigned wt) {
  ncv::rs::Vec v(n, 0);
  for (unsigned p : rng.positions(n, wt)) v[p] = rng.nonzero_symbol(f);
  return v;
}

// Random codeword of exact weight target, found by sampling the nullspace of
// the check matrix. Useful for building distinct vectors sharing a syndrome:
// splitting a codeword's support yields two error patterns with equal
// syndromes.
inline std::optional<ncv::rs::Vec> random_codeword_of_weight(const ncv::rs::Code& code,
                                                             unsigned target,
                                                             ncv::Rng& rng,
                                                             unsigned tries = 20000) {
  const ncv::gf::Field& f = code.field();
  ncv::linalg::Matrix h(code.redundancy(), code.n());
  for (unsigned i = 0; i < code.redundancy(); ++i)
    for (unsigned j = 0; j < code.n(); ++j) h.at(i, j) = code.h(i, j);
  const auto basis = ncv::linalg::nullspace_basis(h, f);
  for (unsigned t = 0; t < tries; ++t) {
    ncv::rs::Vec v(code.n(), 0);
    for (const auto& b : basis) {
      const ncv::gf::Symbol c = rng.symbol(f);
      if (c == 0) continue;
      for (unsigned j = 0; j < code.n(); ++j)
        v[j] = ncv::gf::Field::add(v[j], f.mul(c, b[j]));
    }
    if (ncv::rs::weight(v) == target) return v;
  }
  return std::nullopt;
}

struct TreeDraw {
  ncv::codec::PacketHeader header;
  ncv::rs::Vec vec;
};

// Random linear combination built as a tree: leaves are <= m distinct source
// headers, inner nodes combine up to four children (so depth stays <= 4 for
// m <= 256) with random coefficients, occasionally zero to exercise
// cancellation. Mirrors what a relay chain produces.
inline TreeDraw random_combined(const ncv::codec::SchemeConfig& cfg, ncv::Rng& rng) {
  using ncv::codec::PacketHeader;
  const unsigned n = cfg.n();
  const ncv::gf::Field& f = cfg.code.field();
  const unsigned u = 1 + rng.below(cfg.m);
  const auto support = rng.positions(n, u);

  std::vector<PacketHeader> level;
  std::vector<ncv::rs::Vec> vecs;
  for (unsigned s : support) {
    level.push_back(ncv::codec::encode_source_header(s, cfg));
    ncv::rs::Vec v(n, 0);
    v[s] = 1;
    vecs.push_back(std::move(v));
  }
  while (level.size() > 1) {
    std::vector<PacketHeader> next;
    std::vector<ncv::rs::Vec> nvecs;
    for (std::size_t i = 0; i < level.size();) {
      const std::size_t fan = std::min<std::size_t>(4, level.size() - i);
      std::vector<ncv::gf::Symbol> cs(fan);
      std::vector<PacketHeader> hs(level.begin() + long(i), level.begin() + long(i + fan));
      ncv::rs::Vec acc(n, 0);
      for (std::size_t j = 0; j < fan; ++j) {
        cs[j] = (rng.below(16) == 0) ? ncv::gf::Symbol(0) : rng.nonzero_symbol(f);
        if (cs[j] == 0) continue;
        for (unsigned x = 0; x < n; ++x)
          acc[x] = ncv::gf::Field::add(acc[x], f.mul(cs[j], vecs[i + j][x]));
      }
      next.push_back(ncv::codec::combine_headers(cs, hs, cfg));
      nvecs.push_back(std::move(acc));
      i += fan;
    }
    level = std::move(next);
    vecs = std::move(nvecs);
  }
  return {level[0], vecs[0]};
}

}  // namespace testsup
