#include "ncv/gf.hpp"

#include <stdexcept>
#include <string>

namespace ncv::gf {

std::uint32_t default_primitive_poly(unsigned w) {
  switch (w) {
    case 2:  return 0x7;      // x^2+x+1
    case 3:  return 0xB;      // x^3+x+1
    case 4:  return 0x13;     // x^4+x+1
    case 5:  return 0x25;     // x^5+x^2+1
    case 6:  return 0x43;     // x^6+x+1
    case 7:  return 0x89;     // x^7+x^3+1
    case 8:  return 0x11D;    // x^8+x^4+x^3+x^2+1
    case 9:  return 0x211;    // x^9+x^4+1
    case 10: return 0x409;    // x^10+x^3+1
    case 11: return 0x805;    // x^11+x^2+1
    case 12: return 0x1053;   // x^12+x^6+x^4+x+1
    case 13: return 0x201B;   // x^13+x^4+x^3+x+1
    case 14: return 0x4443;   // x^14+x^10+x^6+x+1
    case 15: return 0x8003;   // x^15+x+1
    case 16: return 0x1100B;  // x^16+x^12+x^3+x+1
    default:
      throw std::invalid_argument("default_primitive_poly: w must be in [2,16]");
  }
}

Field::Field(unsigned w, std::uint32_t poly) : w_(w), poly_(poly) {
  if (w < 2 || w > 16) throw std::invalid_argument("Field: w must be in [2,16]");
  q_ = 1u << w_;
  if (poly_ < q_ || poly_ >= 2 * q_)
    throw std::invalid_argument("Field: modulus must have degree exactly w");

  log_.assign(q_, 0);
  antilog_.assign(2 * (q_ - 1), 0);

  // Walk x *= alpha. A primitive modulus yields all q-1 nonzero elements
  // before returning to 1; anything shorter (or a fall to zero under a
  // reducible modulus) is rejected.
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    if (x == 0 || (i > 0 && x == 1) || (x != 1 && log_[x] != 0))
      throw std::invalid_argument("Field: modulus is not primitive");
    antilog_[i] = Symbol(x);
    log_[x] = std::uint16_t(i);
    x <<= 1;
    if (x & q_) x ^= poly_;
  }
  if (x != 1) throw std::invalid_argument("Field: modulus is not primitive");
  for (std::uint32_t i = 0; i < q_ - 1; ++i)
    antilog_[q_ - 1 + i] = antilog_[i];
}

Symbol Field::inv(Symbol a) const {
  if (a == 0) throw std::domain_error("Field::inv: zero has no inverse");
  return antilog_[(q_ - 1) - log_[a]];
}

Symbol Field::pow(Symbol a, long long e) const {
  if (a == 0) {
    if (e > 0) return 0;
    throw std::domain_error("Field::pow: 0^e undefined for e <= 0");
  }
  long long m = e % (long long)(q_ - 1);
  if (m < 0) m += q_ - 1;
  return antilog_[(std::uint64_t(log_[a]) * std::uint64_t(m)) % (q_ - 1)];
}

std::uint32_t Field::log(Symbol a) const {
  if (a == 0) throw std::domain_error("Field::log: log of zero");
  return log_[a];
}

namespace {

// Minimal dense polynomial helpers over a Field, coefficients lowest first.
// Only used for modulus validation/search; hot paths do not come through here.
using Poly = std::vector<Symbol>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = Field::add(r[i + j], f.mul(a[i], b[j]));
  }
  return r;
}

// a mod m, m monic.
Poly poly_mod(const Field& f, Poly a, const Poly& m) {
  trim(a);
  const size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const Symbol lead = a.back();
    const size_t shift = a.size() - 1 - dm;
    if (lead != 0)
      for (size_t j = 0; j < m.size(); ++j)
        a[shift + j] = Field::add(a[shift + j], f.mul(lead, m[j]));
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // Make b monic so poly_mod applies.
    const Symbol s = f.inv(b.back());
    for (auto& c : b) c = f.mul(c, s);
    Poly r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// h(g) mod m via Horner.
Poly poly_compose_mod(const Field& f, const Poly& h, const Poly& g, const Poly& m) {
  Poly acc;
  for (size_t i = h.size(); i-- > 0;) {
    acc = poly_mod(f, poly_mul(f, acc, g), m);
    if (h[i] != 0) {
      if (acc.empty()) acc.push_back(h[i]);
      else acc[0] = Field::add(acc[0], h[i]);
    }
  }
  return acc;
}

Poly poly_powmod_x(const Field& f, std::uint64_t e, const Poly& m) {
  // x^e mod m by square and multiply.
  Poly result{1};
  Poly base{0, 1};
  base = poly_mod(f, base, m);
  while (e) {
    if (e & 1) result = poly_mod(f, poly_mul(f, result, base), m);
    base = poly_mod(f, poly_mul(f, base, base), m);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool ExtField::is_irreducible(const Field& base, const std::vector<Symbol>& poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const unsigned c = unsigned(f.size() - 1);
  if (f.back() != 1) return false;
  if (c == 1) return true;

  // Rabin: f irreducible iff x^(q^c) == x mod f and, for every prime p | c,
  // gcd(x^(q^(c/p)) - x, f) is a unit.
  std::vector<unsigned> check_at;  // degrees c/p
  unsigned rem = c;
  for (unsigned p = 2; p * p <= rem; ++p)
    if (rem % p == 0) {
      check_at.push_back(c / p);
      while (rem % p == 0) rem /= p;
    }
  if (rem > 1) check_at.push_back(c / rem);

  const Poly xq = poly_powmod_x(base, base.size(), f);
  Poly xqd{0, 1};  // x^(q^d) mod f, starting at d = 0
  for (unsigned d = 1; d <= c; ++d) {
    xqd = poly_compose_mod(base, xqd, xq, f);
    for (unsigned target : check_at)
      if (d == target) {
        Poly diff = xqd;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = Field::add(diff[1], 1);  // minus x
        Poly g = poly_gcd(base, f, diff);
        trim(g);
        if (g.size() > 1) return false;
      }
  }
  // xqd now holds x^(q^c) mod f; it must equal x.
  Poly xp{0, 1};
  trim(xqd);
  return xqd == xp;
}

ExtField::ExtField(std::shared_ptr<const Field> base, unsigned degree,
                   std::vector<Symbol> modulus)
    : base_(std::move(base)), c_(degree), mod_(std::move(modulus)) {
  if (c_ < 1 || c_ > 8)
    throw std::invalid_argument("ExtField: degree must be in [1,8]");
  const unsigned bits = c_ * base_->width();
  if (bits > 64)
    throw std::invalid_argument("ExtField: c*w exceeds 64 bits");
  mask_ = bits == 64 ? ~Elem(0) : ((Elem(1) << bits) - 1);
  if (mod_.size() != c_ + 1 || mod_[c_] != 1)
    throw std::invalid_argument("ExtField: modulus must be monic of degree c");
  for (Symbol s : mod_)
    if (s >= base_->size())
      throw std::invalid_argument("ExtField: modulus coefficient out of range");
  if (!is_irreducible(*base_, mod_))
    throw std::invalid_argument("ExtField: modulus is reducible");
}

namespace {

std::vector<Symbol> find_default_modulus(const Field& base, unsigned c) {
  // Runs before the delegated constructor body, so the degree guard must be
  // repeated here.
  if (c < 1 || c > 8)
    throw std::invalid_argument("ExtField: degree must be in [1,8]");
  // Counting v upward enumerates coefficient tuples (a_{c-1},...,a_0)
  // lexicographically; the first irreducible hit is the default modulus.
  const std::uint64_t q = base.size();
  std::vector<Symbol> poly(c + 1, 0);
  poly[c] = 1;
  for (std::uint64_t v = 0;; ++v) {
    std::uint64_t rest = v;
    for (unsigned i = 0; i < c; ++i) {
      poly[i] = Symbol(rest % q);
      rest /= q;
    }
    if (rest != 0)
      throw std::logic_error("ExtField: no irreducible modulus found");
    if (ExtField::is_irreducible(base, poly)) return poly;
  }
}

}  // namespace

ExtField::ExtField(std::shared_ptr<const Field> base, unsigned degree)
    : ExtField(base, degree, find_default_modulus(*base, degree)) {}

ExtField::Elem ExtField::mul(Elem a, Elem b) const {
  const unsigned w = base_->width();
  const std::uint32_t qm = base_->size() - 1;
  Symbol pa[8] = {}, pb[8] = {}, prod[15] = {};
  for (unsigned i = 0; i < c_; ++i) {
    pa[i] = Symbol((a >> (i * w)) & qm);
    pb[i] = Symbol((b >> (i * w)) & qm);
  }
  for (unsigned i = 0; i < c_; ++i) {
    if (pa[i] == 0) continue;
    for (unsigned j = 0; j < c_; ++j)
      prod[i + j] = Field::add(prod[i + j], base_->mul(pa[i], pb[j]));
  }
  // Reduce mod_ (monic): fold each coefficient of degree >= c downward.
  for (unsigned d = 2 * c_ - 2; d >= c_; --d) {
    const Symbol t = prod[d];
    if (t != 0) {
      for (unsigned j = 0; j < c_; ++j)
        prod[d - c_ + j] = Field::add(prod[d - c_ + j], base_->mul(t, mod_[j]));
      prod[d] = 0;
    }
    if (d == c_) break;
  }
  Elem r = 0;
  for (unsigned i = 0; i < c_; ++i) r |= Elem(prod[i]) << (i * w);
  return r;
}

ExtField::Elem ExtField::pow(Elem a, std::uint64_t e) const {
  if (a == 0) {
    if (e == 0) throw std::domain_error("ExtField::pow: 0^0 undefined");
    return 0;
  }
  Elem result = 1;
  Elem b = a;
  while (e) {
    if (e & 1) result = mul(result, b);
    b = mul(b, b);
    e >>= 1;
  }
  return result;
}

ExtField::Elem ExtField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("ExtField::inv: zero has no inverse");
  return pow(a, mask_ - 1);  // a^(Q-2), group order Q-1 == mask
}

ExtField::Elem ExtField::from_coeffs(const std::vector<Symbol>& coeffs) const {
  if (coeffs.size() != c_)
    throw std::invalid_argument("ExtField::from_coeffs: need exactly c coeffs");
  Elem r = 0;
  for (unsigned i = 0; i < c_; ++i) {
    if (coeffs[i] >= base_->size())
      throw std::invalid_argument("ExtField::from_coeffs: coeff out of range");
    r |= Elem(coeffs[i]) << (i * base_->width());
  }
  return r;
}

std::vector<Symbol> ExtField::to_coeffs(Elem x) const {
  std::vector<Symbol> r(c_);
  for (unsigned i = 0; i < c_; ++i) r[i] = coeff(x, i);
  return r;
}

}  // namespace ncv::gf
