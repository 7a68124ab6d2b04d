#include "ncv/header.hpp"

#include <bit>
#include <stdexcept>

namespace ncv::codec {

using gf::ExtField;
using gf::Field;
using gf::Symbol;

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::Error: return "error";
    case Scheme::Erasure: return "erasure";
    case Scheme::List: return "list";
  }
  return "?";
}

unsigned IdSegment::popcount() const {
  unsigned c = 0;
  for (std::uint8_t b : bytes) c += unsigned(std::popcount(b));
  return c;
}

void IdSegment::or_with(const IdSegment& other) {
  if (other.nbits != nbits) throw std::invalid_argument("IdSegment: size mismatch");
  for (std::size_t i = 0; i < bytes.size(); ++i) bytes[i] |= other.bytes[i];
}

std::vector<unsigned> IdSegment::set_positions() const {
  std::vector<unsigned> out;
  for (unsigned j = 0; j < nbits; ++j)
    if (test(j)) out.push_back(j);
  return out;
}

namespace {

unsigned list_scheme_k(unsigned n, unsigned m) {
  if (m >= n) return 0;
  return unsigned((std::uint64_t(n - m) * (n - m)) / n);
}

}  // namespace

SchemeConfig make_scheme_config(Scheme scheme, unsigned n, unsigned m,
                                std::shared_ptr<const gf::Field> field,
                                const ListSchemeOptions& opts) {
  if (m < 1) throw std::invalid_argument("make_scheme_config: need m >= 1");
  switch (scheme) {
    case Scheme::Error: {
      if (2 * m + 1 > n)
        throw std::invalid_argument("make_scheme_config: ERROR needs 2m <= n-1");
      SchemeConfig cfg{scheme, rs::Code(n, n - 2 * m, std::move(field)), m, {}, {}, {}};
      return cfg;
    }
    case Scheme::Erasure: {
      if (m + 1 > n)
        throw std::invalid_argument("make_scheme_config: ERASURE needs m <= n-1");
      SchemeConfig cfg{scheme, rs::Code(n, n - m, std::move(field)), m, {}, {}, {}};
      return cfg;
    }
    case Scheme::List: {
      const unsigned k = list_scheme_k(n, m);
      if (k < 2)
        throw std::invalid_argument("make_scheme_config: LIST needs floor((n-m)^2/n) >= 2");
      sideinfo::SideInfoParams side =
          sideinfo::make_side_info_params(n, opts.max_list, opts.p_fail, field);
      listdec::ListDecodeParams lp;
      lp.radius = m;
      lp.max_list = opts.max_list;
      lp.multiplicity = opts.multiplicity;
      SchemeConfig cfg{scheme, rs::Code(n, k, std::move(field)), m,
                       std::move(side), std::nullopt, lp};
      cfg.point = sideinfo::derive_point(opts.session_id, *cfg.side);
      return cfg;
    }
  }
  throw std::invalid_argument("make_scheme_config: unknown scheme");
}

OverheadBreakdown overhead_for(Scheme scheme, unsigned n, unsigned m, unsigned w,
                               double p_fail, unsigned max_list) {
  if (n < 2 || m < 1 || w < 2)
    throw std::invalid_argument("overhead_for: bad parameters");
  OverheadBreakdown o;
  o.scheme = scheme;
  o.n = n;
  o.m = m;
  o.w = w;

  auto finish_syndrome = [&](unsigned k) {
    o.k = k;
    o.syndrome_symbols = n - k;
    o.syndrome_bits = (n - k) * w;
    o.syndrome_bytes = (o.syndrome_bits + 7) / 8;
  };
  auto fallback = [&]() {
    o.feasible = false;
    o.fallback_uncompressed = true;
    o.total_bits = n * w;  // plain n-symbol coding vector
    o.total_bytes = (o.total_bits + 7) / 8;
    return o;
  };

  switch (scheme) {
    case Scheme::Error: {
      if (2 * m + 1 > n || n > (1u << w) - 1) return fallback();
      o.feasible = true;
      finish_syndrome(n - 2 * m);
      o.total_bits = o.syndrome_bits;
      o.total_bytes = o.syndrome_bytes;
      return o;
    }
    case Scheme::Erasure: {
      if (m + 1 > n || n > (1u << w) - 1) return fallback();
      o.feasible = true;
      finish_syndrome(n - m);
      o.id_bits = n;
      o.id_bytes = (n + 7) / 8;
      o.total_bits = o.syndrome_bits + o.id_bits;
      o.total_bytes = o.syndrome_bytes + o.id_bytes;
      return o;
    }
    case Scheme::List: {
      const unsigned k = list_scheme_k(n, m);
      if (k < 2 || n > (1u << w) - 1) return fallback();
      o.feasible = true;
      finish_syndrome(k);
      o.ext_degree = sideinfo::required_ext_degree(n, max_list, p_fail, w);
      o.side_bits = o.ext_degree * w;
      o.side_bytes = (o.side_bits + 7) / 8;
      o.total_bits = o.syndrome_bits + o.side_bits;
      o.total_bytes = o.syndrome_bytes + o.side_bytes;
      return o;
    }
  }
  throw std::invalid_argument("overhead_for: unknown scheme");
}

OverheadBreakdown overhead_bytes(const SchemeConfig& cfg) {
  double pf = cfg.side ? cfg.side->p_fail : 1e-4;
  unsigned ml = cfg.side ? cfg.side->max_list : 64;
  return overhead_for(cfg.scheme, cfg.n(), cfg.m, cfg.w(), pf, ml);
}

PacketHeader encode_source_header(unsigned i, const SchemeConfig& cfg) {
  if (i >= cfg.n()) throw std::invalid_argument("encode_source_header: bad index");
  PacketHeader h;
  h.scheme = cfg.scheme;
  const unsigned red = cfg.code.redundancy();
  h.syndrome.resize(red);
  for (unsigned r = 0; r < red; ++r) h.syndrome[r] = cfg.code.h(r, i);
  if (cfg.scheme == Scheme::Erasure) {
    h.id = IdSegment::zeros(cfg.n());
    h.id.set(i);
  } else if (cfg.scheme == Scheme::List) {
    h.side = cfg.side->ext->pow(cfg.point->value, i);  // r^i
  }
  return h;
}

PacketHeader combine_headers(const std::vector<Symbol>& coeffs,
                             const std::vector<PacketHeader>& headers,
                             const SchemeConfig& cfg) {
  if (coeffs.size() != headers.size() || headers.empty())
    throw std::invalid_argument("combine_headers: size mismatch or empty");
  const Field& f = cfg.code.field();
  const unsigned red = cfg.code.redundancy();

  PacketHeader out;
  out.scheme = cfg.scheme;
  out.syndrome.assign(red, 0);
  if (cfg.scheme == Scheme::Erasure) out.id = IdSegment::zeros(cfg.n());

  for (std::size_t l = 0; l < headers.size(); ++l) {
    const PacketHeader& h = headers[l];
    if (h.scheme != cfg.scheme || h.syndrome.size() != red)
      throw std::invalid_argument("combine_headers: mismatched header");
    const Symbol c = coeffs[l];
    if (c != 0)
      for (unsigned r = 0; r < red; ++r)
        out.syndrome[r] = Field::add(out.syndrome[r], f.mul(c, h.syndrome[r]));
    if (cfg.scheme == Scheme::Erasure)
      out.id.or_with(h.id);  // even for c == 0: superset semantics
    else if (cfg.scheme == Scheme::List && c != 0) {
      const ExtField& ext = *cfg.side->ext;
      out.side = ExtField::add(out.side, ext.mul(ext.embed(c), h.side));
    }
  }
  return out;
}

HeaderDecodeResult decode_header(const PacketHeader& h, const SchemeConfig& cfg) {
  if (h.scheme != cfg.scheme)
    throw std::invalid_argument("decode_header: scheme mismatch");
  HeaderDecodeResult res;
  switch (cfg.scheme) {
    case Scheme::Error: {
      auto e = rs::bma_error_decode(h.syndrome, cfg.code);
      if (!e) return res;  // DecodeFailure
      res.status = DecodeStatus::Ok;
      res.vec = std::move(*e);
      return res;
    }
    case Scheme::Erasure: {
      if (h.id.nbits != cfg.n())
        throw std::invalid_argument("decode_header: bad ID segment size");
      const auto locs = h.id.set_positions();
      if (locs.size() > cfg.code.redundancy()) {
        res.status = DecodeStatus::InconsistentId;
        return res;
      }
      auto e = rs::erasure_decode(h.syndrome, locs, cfg.code);
      if (!e) return res;  // DecodeFailure (inconsistent restricted system)
      res.status = DecodeStatus::Ok;
      res.vec = std::move(*e);
      return res;
    }
    case Scheme::List: {
      auto list = listdec::list_error_patterns(h.syndrome, cfg.code, *cfg.list);
      res.list_size = unsigned(list.patterns.size());
      res.list_truncated = list.truncated;
      auto sel = sideinfo::select_candidate(list, h.side, *cfg.point, *cfg.side);
      switch (sel.status) {
        case sideinfo::SelectStatus::Unique:
          res.status = DecodeStatus::Ok;
          res.vec = std::move(*sel.chosen);
          return res;
        case sideinfo::SelectStatus::NoMatch:
          res.status = DecodeStatus::NoMatch;
          return res;
        case sideinfo::SelectStatus::Ambiguous:
          res.status = DecodeStatus::Ambiguous;
          return res;
      }
      return res;
    }
  }
  throw std::invalid_argument("decode_header: unknown scheme");
}

namespace {

unsigned symbol_bytes(const SchemeConfig& cfg) {
  const unsigned w = cfg.w();
  if (w != 8 && w != 16)
    throw std::invalid_argument("header wire format needs w in {8, 16}");
  return w / 8;
}

}  // namespace

std::size_t serialized_header_size(const SchemeConfig& cfg) {
  const unsigned sb = symbol_bytes(cfg);
  std::size_t sz = 1 + std::size_t(cfg.code.redundancy()) * sb;
  if (cfg.scheme == Scheme::Erasure) sz += (cfg.n() + 7) / 8;
  if (cfg.scheme == Scheme::List) sz += std::size_t(cfg.side->ext->degree()) * sb;
  return sz;
}

std::vector<std::uint8_t> serialize_header(const PacketHeader& h, const SchemeConfig& cfg) {
  const unsigned sb = symbol_bytes(cfg);
  if (h.scheme != cfg.scheme || h.syndrome.size() != cfg.code.redundancy())
    throw std::invalid_argument("serialize_header: header/config mismatch");
  std::vector<std::uint8_t> out;
  out.reserve(serialized_header_size(cfg));
  out.push_back(std::uint8_t(cfg.scheme));
  for (Symbol s : h.syndrome)
    for (unsigned b = sb; b-- > 0;)  // big-endian within the symbol
      out.push_back(std::uint8_t((s >> (8 * b)) & 0xFF));
  if (cfg.scheme == Scheme::Erasure) {
    if (h.id.nbits != cfg.n())
      throw std::invalid_argument("serialize_header: bad ID segment");
    out.insert(out.end(), h.id.bytes.begin(), h.id.bytes.end());
  } else if (cfg.scheme == Scheme::List) {
    const ExtField& ext = *cfg.side->ext;
    for (unsigned i = 0; i < ext.degree(); ++i) {
      const Symbol s = ext.coeff(h.side, i);
      for (unsigned b = sb; b-- > 0;)
        out.push_back(std::uint8_t((s >> (8 * b)) & 0xFF));
    }
  }
  return out;
}

PacketHeader parse_header(std::span<const std::uint8_t> bytes, const SchemeConfig& cfg) {
  const unsigned sb = symbol_bytes(cfg);
  if (bytes.size() != serialized_header_size(cfg))
    throw std::invalid_argument("parse_header: wrong length");
  if (bytes[0] != std::uint8_t(cfg.scheme))
    throw std::invalid_argument("parse_header: scheme tag mismatch");
  PacketHeader h;
  h.scheme = cfg.scheme;
  std::size_t pos = 1;
  h.syndrome.resize(cfg.code.redundancy());
  for (Symbol& s : h.syndrome) {
    Symbol v = 0;
    for (unsigned b = 0; b < sb; ++b) v = Symbol((v << 8) | bytes[pos++]);
    if (v >= cfg.code.field().size())
      throw std::invalid_argument("parse_header: symbol out of range");
    s = v;
  }
  if (cfg.scheme == Scheme::Erasure) {
    h.id = IdSegment::zeros(cfg.n());
    for (auto& b : h.id.bytes) b = bytes[pos++];
    // Bits beyond n must be clear.
    if (cfg.n() % 8 != 0 &&
        (h.id.bytes.back() >> (cfg.n() % 8)) != 0)
      throw std::invalid_argument("parse_header: stray ID bits");
  } else if (cfg.scheme == Scheme::List) {
    const ExtField& ext = *cfg.side->ext;
    std::vector<Symbol> coeffs(ext.degree());
    for (Symbol& s : coeffs) {
      Symbol v = 0;
      for (unsigned b = 0; b < sb; ++b) v = Symbol((v << 8) | bytes[pos++]);
      s = v;
    }
    h.side = ext.from_coeffs(coeffs);
  }
  return h;
}

}  // namespace ncv::codec
