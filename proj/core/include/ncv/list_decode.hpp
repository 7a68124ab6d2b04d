// list_decode.hpp - list decoding of RS syndromes beyond the unique radius.
//
// Problem: given s = e * H^T, enumerate every e with weight(e) <= t. This is
// reduced to list decoding a received word: pick any y with y * H^T = s (k
// positions of y forced to zero, the rest solved), then {e} = {x + y : x a
// codeword with d(x, y) <= t}. The codeword search is Guruswami-Sudan
// bivariate interpolation (Koetter's iterative construction) followed by
// Roth-Ruckenstein z-root extraction.
#pragma once

#include <vector>

#include "ncv/rs.hpp"

namespace ncv::listdec {

struct ListDecodeParams {
  unsigned radius = 0;         // t; must be in [1, gs_max_radius(n, k)]
  unsigned max_list = 64;      // cap on returned candidates
  unsigned multiplicity = 0;   // interpolation multiplicity; 0 = auto (smallest feasible)
  unsigned max_multiplicity = 64;
};

struct CandidateList {
  std::vector<rs::Vec> patterns;  // distinct, sorted lexicographically
  bool truncated = false;         // true when max_list cut the list short
};

// Largest radius the interpolation argument supports: n - ceil(sqrt(n*k)).
unsigned gs_max_radius(unsigned n, unsigned k);

// Smallest interpolation multiplicity whose monomial count beats the
// constraint count at radius t for the length-N dimension-k code.
// Throws std::invalid_argument if no multiplicity <= cap works.
unsigned choose_multiplicity(unsigned n_points, unsigned k, unsigned t, unsigned cap);

// One word y (length n) with y * H^T = s and y zero on zero_positions
// (exactly k distinct positions; any choice works since every n-k columns of
// H are invertible). Default: the last k positions.
rs::Vec syndrome_to_word(const rs::Vec& synd, const rs::Code& code,
                         const std::vector<unsigned>& zero_positions);
rs::Vec syndrome_to_word(const rs::Vec& synd, const rs::Code& code);

// All codewords within Hamming distance params.radius of y, sorted
// lexicographically. Complete: no close codeword is missed. Requires the
// default first_root b = 1 (evaluation form c_j = f(alpha^j)) and k >= 2.
// Shortened codes are decoded in generalized-RS form: the vanishing
// polynomial of the removed positions is divided out of y, which keeps the
// full radius available at length n.
std::vector<rs::Vec> gs_list_decode(const rs::Vec& y, const rs::Code& code,
                                    const ListDecodeParams& params);

// The full Problem-2 answer {e : weight(e) <= t, e * H^T = s}, via
// syndrome_to_word + gs_list_decode + shift. Capped at params.max_list with
// the truncated flag set.
CandidateList list_error_patterns(const rs::Vec& synd, const rs::Code& code,
                                  const ListDecodeParams& params);
CandidateList list_error_patterns(const rs::Vec& synd, const rs::Code& code,
                                  const ListDecodeParams& params,
                                  const std::vector<unsigned>& zero_positions);

// Exhaustive reference: enumerates the q^k codewords (through a nullspace
// basis of H) once at construction, then answers Problem 2 exactly, never
// truncated. Guarded to q^k <= 2^24. Deliberately avoids the interpolation
// path so the two routes stay independent checks of each other.
class BruteForceOracle {
 public:
  explicit BruteForceOracle(const rs::Code& code);
  CandidateList list(const rs::Vec& synd, unsigned t) const;
  std::size_t codeword_count() const { return count_; }

 private:
  const rs::Code& code_;
  std::size_t count_;
  std::vector<gf::Symbol> words_;  // flattened count_ x n
};

// Convenience wrapper constructing a fresh oracle per call.
CandidateList brute_force_list(const rs::Vec& synd, const rs::Code& code, unsigned t);

}  // namespace ncv::listdec
