// rs.hpp - Reed-Solomon codes in parity-check form over GF(2^w).
//
// The (n,k) code is defined by the (n-k) x n check matrix
//     H[i][j] = alpha^(j*(b+i)),   i in [0, n-k), j in [0, n),
// with b = 1 by default (roots alpha^1 .. alpha^(n-k)). For n < q-1 this is
// the parent length-(q-1) code shortened by dropping the highest-index
// positions. A syndrome s = e * H^T compresses any vector e of bounded weight;
// the decoders below recover e from s.
#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ncv/gf.hpp"

namespace ncv::rs {

using Vec = std::vector<gf::Symbol>;

unsigned weight(const Vec& v);

class Code {
 public:
  // Requires 0 < k < n <= q-1. Construction verifies the MDS property
  // (every n-k column subset of H invertible): exhaustively when the subset
  // count is small, on fixed-seed random subsets otherwise.
  Code(unsigned n, unsigned k, std::shared_ptr<const gf::Field> field,
       unsigned b = 1);

  unsigned n() const { return n_; }
  unsigned k() const { return k_; }
  unsigned redundancy() const { return n_ - k_; }
  unsigned distance() const { return n_ - k_ + 1; }      // MDS: d = n-k+1
  unsigned t0() const { return (n_ - k_) / 2; }          // unique-decoding radius
  unsigned first_root() const { return b_; }
  bool is_shortened() const { return n_ < parent_length(); }
  unsigned parent_length() const { return field_->size() - 1; }

  const gf::Field& field() const { return *field_; }
  std::shared_ptr<const gf::Field> field_ptr() const { return field_; }

  gf::Symbol h(unsigned row, unsigned col) const { return h_[std::size_t(row) * n_ + col]; }
  gf::Symbol eval_point(unsigned j) const { return field_->exp(j); }  // alpha^j

 private:
  unsigned n_, k_, b_;
  std::shared_ptr<const gf::Field> field_;
  std::vector<gf::Symbol> h_;
  void verify_mds() const;
};

// s_i = sum_j v_j H[i][j]; length n -> length n-k.
Vec syndrome(const Vec& v, const Code& code);

bool is_codeword(const Vec& v, const Code& code);

// Berlekamp-Massey + Chien search + Forney. Recovers e with weight(e) <= t0
// from s = syndrome(e). Returns nullopt on decode failure; any returned
// vector is re-validated (its syndrome recomputed and compared), so a
// non-nullopt result always has syndrome s and weight <= t0.
std::optional<Vec> bma_error_decode(const Vec& synd, const Code& code);

// Solves for e supported on `locations` (distinct, < n, at most n-k of them)
// with e * H^T = s, by Gaussian elimination on the restricted columns.
// Returns nullopt when the restricted system is inconsistent (corrupted
// input). Positions whose solved coefficient is zero stay zero in e.
// Throws std::invalid_argument for bad location sets.
std::optional<Vec> erasure_decode(const Vec& synd,
                                  const std::vector<unsigned>& locations,
                                  const Code& code);

}  // namespace ncv::rs
