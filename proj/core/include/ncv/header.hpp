// header.hpp - compressed packet-header schemes for random linear network
// coding vectors.
//
// A coding vector v of length n (weight <= m) is carried not as n symbols but
// as the RS syndrome v * H^T plus per-scheme side data:
//   ERROR   (tag 0x01): syndrome only, n-k = 2m; decoded by bounded-distance
//                       error decoding.
//   ERASURE (tag 0x02): syndrome with n-k = m, plus an n-bit ID segment that
//                       tracks the union of contributing sources; decoded by
//                       erasure decoding at the flagged positions.
//   LIST    (tag 0x03): syndrome with n-k = n - floor((n-m)^2/n), plus one
//                       F_Q symbol of hashed side information; decoded by
//                       list decoding at radius m, then side-info selection.
// Headers combine linearly: syndromes and side info scale and add, ID
// segments OR together (a cancelled coefficient leaves its bit set, so the
// segment is always a superset of the true support).
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncv/gf.hpp"
#include "ncv/list_decode.hpp"
#include "ncv/rs.hpp"
#include "ncv/side_info.hpp"

namespace ncv::codec {

enum class Scheme : std::uint8_t { Error = 0x01, Erasure = 0x02, List = 0x03 };

const char* scheme_name(Scheme s);

// Packed bitset, bit j stored at bytes[j/8], LSB first.
struct IdSegment {
  unsigned nbits = 0;
  std::vector<std::uint8_t> bytes;

  static IdSegment zeros(unsigned n) {
    return IdSegment{n, std::vector<std::uint8_t>((n + 7) / 8, 0)};
  }
  void set(unsigned j) { bytes[j / 8] |= std::uint8_t(1u << (j % 8)); }
  bool test(unsigned j) const { return (bytes[j / 8] >> (j % 8)) & 1; }
  unsigned popcount() const;
  void or_with(const IdSegment& other);
  std::vector<unsigned> set_positions() const;
  bool operator==(const IdSegment&) const = default;
};

struct PacketHeader {
  Scheme scheme = Scheme::Error;
  rs::Vec syndrome;                  // n-k symbols
  IdSegment id;                      // ERASURE only
  sideinfo::SideSymbol side = 0;     // LIST only
};

struct Packet {
  PacketHeader header;
  rs::Vec payload;
};

struct ListSchemeOptions {
  double p_fail = 1e-4;
  unsigned max_list = 64;
  std::string session_id = "session-0";
  unsigned multiplicity = 0;  // 0 = auto
};

struct SchemeConfig {
  Scheme scheme;
  rs::Code code;
  unsigned m = 0;  // combined-sources bound
  // LIST only:
  std::optional<sideinfo::SideInfoParams> side;
  std::optional<sideinfo::EvaluationPoint> point;
  std::optional<listdec::ListDecodeParams> list;

  unsigned n() const { return code.n(); }
  unsigned w() const { return code.field().width(); }
};

// Builds the scheme-sized code for n sources and combination bound m:
//   ERROR:   k = n - 2m          (requires 2m <= n-1)
//   ERASURE: k = n - m           (requires m <= n-1)
//   LIST:    k = floor((n-m)^2/n), radius t = m (requires k >= 2), plus
//            side-info parameters sized from opts and an evaluation point
//            derived from opts.session_id.
// Throws std::invalid_argument when infeasible.
SchemeConfig make_scheme_config(Scheme scheme, unsigned n, unsigned m,
                                std::shared_ptr<const gf::Field> field,
                                const ListSchemeOptions& opts = {});

// Header size accounting. Byte totals exclude the 1-byte scheme tag (the
// wire format carries it, but cross-scheme comparisons traditionally count
// only syndrome + side data, and the tag would add a constant to all three).
// Exact bit counts are reported next to the byte-aligned field sizes.
struct OverheadBreakdown {
  Scheme scheme;
  bool feasible = false;
  bool fallback_uncompressed = false;  // infeasible: full n-symbol header
  unsigned n = 0, m = 0, w = 0, k = 0;
  unsigned syndrome_symbols = 0;
  unsigned syndrome_bits = 0, syndrome_bytes = 0;
  unsigned id_bits = 0, id_bytes = 0;          // ERASURE
  unsigned ext_degree = 0;                     // LIST: c
  unsigned side_bits = 0, side_bytes = 0;      // LIST
  unsigned total_bits = 0, total_bytes = 0;
};

// Pure arithmetic; never constructs codes, so infeasible cases still report
// (with the uncompressed fallback of n symbols).
OverheadBreakdown overhead_for(Scheme scheme, unsigned n, unsigned m, unsigned w,
                               double p_fail = 1e-4, unsigned max_list = 64);
OverheadBreakdown overhead_bytes(const SchemeConfig& cfg);

// Header of source i: syndrome = column i of H, plus ID bit i or side r^i.
PacketHeader encode_source_header(unsigned i, const SchemeConfig& cfg);

// Linear combination sum_l coeffs[l] * headers[l]. Zero coefficients still
// OR in their ID bits.
PacketHeader combine_headers(const std::vector<gf::Symbol>& coeffs,
                             const std::vector<PacketHeader>& headers,
                             const SchemeConfig& cfg);

enum class DecodeStatus {
  Ok,
  DecodeFailure,    // decoder could not produce a consistent vector
  InconsistentId,   // ERASURE: more ID bits set than n-k
  Ambiguous,        // LIST: several candidates match the side info
  NoMatch,          // LIST: no candidate matches the side info
};

struct HeaderDecodeResult {
  DecodeStatus status = DecodeStatus::DecodeFailure;
  rs::Vec vec;                 // valid iff status == Ok
  unsigned list_size = 0;      // LIST: candidates considered
  bool list_truncated = false; // LIST: list hit its cap
};

HeaderDecodeResult decode_header(const PacketHeader& h, const SchemeConfig& cfg);

// Wire format (byte-aligned; requires w in {8, 16}):
//   [1B scheme tag] [syndrome: n-k symbols, w/8 bytes each, big-endian
//   within a symbol, ascending index] then for ERASURE [ceil(n/8) ID bytes]
//   or for LIST [c symbols of w/8 bytes, ascending coefficient index].
std::vector<std::uint8_t> serialize_header(const PacketHeader& h, const SchemeConfig& cfg);
PacketHeader parse_header(std::span<const std::uint8_t> bytes, const SchemeConfig& cfg);
std::size_t serialized_header_size(const SchemeConfig& cfg);

}  // namespace ncv::codec
