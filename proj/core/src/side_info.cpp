#include "ncv/side_info.hpp"

#include <cmath>
#include <stdexcept>

namespace ncv::sideinfo {

using gf::ExtField;
using gf::Field;
using gf::Symbol;

unsigned required_ext_degree(unsigned n, unsigned max_list, double p_fail, unsigned w) {
  if (n < 2) throw std::invalid_argument("required_ext_degree: need n >= 2");
  if (max_list < 1) throw std::invalid_argument("required_ext_degree: need L >= 1");
  if (!(p_fail > 0.0) || p_fail > 1.0)
    throw std::invalid_argument("required_ext_degree: P_f must be in (0, 1]");
  const long double pairs = (long double)(max_list - 1) * (n - 1);
  for (unsigned c = 1; c * w <= 64 && c <= 8; ++c) {
    const long double qc = std::ldexp(1.0L, int(c * w));  // q^c = 2^(c*w)
    if (qc - 1 <= (long double)(n - 1)) continue;          // need Q > n-1
    if (pairs <= p_fail * (qc - 1)) return c;
  }
  throw std::invalid_argument("required_ext_degree: no degree with c*w <= 64 reaches P_f");
}

SideInfoParams make_side_info_params(unsigned n, unsigned max_list, double p_fail,
                                     std::shared_ptr<const Field> base) {
  const unsigned c = required_ext_degree(n, max_list, p_fail, base->width());
  SideInfoParams p;
  p.ext = std::make_shared<ExtField>(std::move(base), c);
  p.n = n;
  p.max_list = max_list;
  p.p_fail = p_fail;
  return p;
}

namespace {

inline std::uint64_t xorshift_rounds8(std::uint64_t h) {
  for (int i = 0; i < 8; ++i) {
    h ^= h << 13;
    h ^= h >> 7;
    h ^= h << 17;
  }
  return h;
}

}  // namespace

std::uint64_t session_digest(std::string_view bytes) {
  std::uint64_t h = 0x9E3779B97F4A7C15ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h = xorshift_rounds8(h);
  }
  h ^= std::uint64_t(bytes.size());
  return xorshift_rounds8(h);
}

EvaluationPoint derive_point(std::string_view session_id, const SideInfoParams& params) {
  if (!params.ext) throw std::invalid_argument("derive_point: params without field");
  const unsigned bits = params.ext->bits();
  const unsigned nbytes = (bits + 7) / 8;
  const std::uint64_t digest = session_digest(session_id);
  std::uint64_t v = 0;
  for (unsigned i = 0; i < nbytes; ++i)  // little-endian byte order
    v |= ((digest >> (8 * i)) & 0xFF) << (8 * i);
  v &= params.ext->mask();
  if (v == 0) v = 1;
  return EvaluationPoint{v};
}

SideSymbol evaluate_side_info(const std::vector<Symbol>& v, EvaluationPoint r,
                              const SideInfoParams& params) {
  const ExtField& ext = *params.ext;
  if (v.size() != params.n)
    throw std::invalid_argument("evaluate_side_info: bad vector length");
  SideSymbol acc = 0;
  for (std::size_t j = v.size(); j-- > 0;)
    acc = ExtField::add(ext.mul(acc, r.value), ext.embed(v[j]));
  return acc;
}

SelectResult select_candidate(const listdec::CandidateList& list, SideSymbol target,
                              EvaluationPoint r, const SideInfoParams& params) {
  SelectResult res;
  res.list_truncated = list.truncated;
  for (std::size_t i = 0; i < list.patterns.size(); ++i)
    if (evaluate_side_info(list.patterns[i], r, params) == target)
      res.matches.push_back(i);
  if (res.matches.size() == 1) {
    res.status = SelectStatus::Unique;
    res.chosen = list.patterns[res.matches[0]];
  } else if (res.matches.empty()) {
    res.status = SelectStatus::NoMatch;
  } else {
    res.status = SelectStatus::Ambiguous;
  }
  return res;
}

}  // namespace ncv::sideinfo
