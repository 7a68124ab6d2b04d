// side_info.hpp - hashed side information for disambiguating list decoders.
//
// A coding vector v in GF(q)^n is summarised by one symbol of the extension
// field F_Q, Q = q^c: the evaluation v(r) = sum_j v_j r^j at a session-wide
// point r derived from a shared session ID. Two distinct vectors agree at a
// uniformly drawn nonzero r with probability at most (n-1)/(Q-1), so c is
// sized to push the union bound over a candidate list below a failure
// budget P_f.
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ncv/gf.hpp"
#include "ncv/list_decode.hpp"

namespace ncv::sideinfo {

using SideSymbol = gf::ExtField::Elem;

struct SideInfoParams {
  std::shared_ptr<const gf::ExtField> ext;  // F_Q, Q = q^c
  unsigned n = 0;        // coding vector length
  unsigned max_list = 0; // L_max: largest candidate list to discriminate
  double p_fail = 0.0;   // P_f
};

// Smallest c with (L_max - 1) * (n - 1) / (q^c - 1) <= P_f and q^c > n - 1.
// (L_max - 1 pairs involve the true vector; each collides with probability
// at most (n-1)/(Q-1).) Throws if no c with c*w <= 64 suffices.
unsigned required_ext_degree(unsigned n, unsigned max_list, double p_fail, unsigned w);

// Bundle with the default extension modulus for the computed degree.
SideInfoParams make_side_info_params(unsigned n, unsigned max_list, double p_fail,
                                     std::shared_ptr<const gf::Field> base);

struct EvaluationPoint {
  SideSymbol value = 1;  // never zero
};

// 64-bit digest of a byte string: seeded accumulator absorbing one byte at a
// time, mixed by 8 xorshift rounds (shifts 13, 7, 17) per byte and once more
// on the length at the end. Stable across platforms; part of the wire
// contract, so do not change the constants.
std::uint64_t session_digest(std::string_view bytes);

// First ceil(c*w/8) digest bytes (little-endian order), masked to c*w bits,
// as an F_Q element; a zero draw is remapped to 1 so r stays invertible.
EvaluationPoint derive_point(std::string_view session_id, const SideInfoParams& params);

// v(r) = sum_j embed(v_j) * r^j by Horner.
SideSymbol evaluate_side_info(const std::vector<gf::Symbol>& v, EvaluationPoint r,
                              const SideInfoParams& params);

enum class SelectStatus { Unique, NoMatch, Ambiguous };

struct SelectResult {
  SelectStatus status = SelectStatus::NoMatch;
  std::optional<rs::Vec> chosen;        // set iff Unique
  std::vector<std::size_t> matches;     // indices into the candidate list
  bool list_truncated = false;          // copied from the input list
};

// Keeps every candidate whose evaluation equals target. One match: Unique.
// Several: Ambiguous, all matches reported, never silently tie-broken.
// None: NoMatch (with the truncation flag as a hint that the true vector may
// have been cut from the list).
SelectResult select_candidate(const listdec::CandidateList& list, SideSymbol target,
                              EvaluationPoint r, const SideInfoParams& params);

}  // namespace ncv::sideinfo
