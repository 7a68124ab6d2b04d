// gf.hpp - table-driven GF(2^w) arithmetic and small extension fields GF(2^w)^c.
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace ncv::gf {

// Element of GF(2^w), w <= 16. Valid values are < field size q = 2^w.
using Symbol = std::uint16_t;

// Standard primitive polynomial for GF(2^w), w in [2,16]. Throws otherwise.
std::uint32_t default_primitive_poly(unsigned w);

// GF(2^w) with log/antilog tables. Multiplication is two log lookups plus one
// antilog lookup; the antilog table is stored doubled so index sums need no
// reduction mod (q-1).
class Field {
 public:
  explicit Field(unsigned w) : Field(w, default_primitive_poly(w)) {}
  // poly is the full modulus including the x^w bit, e.g. 0x11D for w=8.
  // Throws std::invalid_argument unless poly is primitive (verified by
  // checking that x generates a cycle of length exactly q-1).
  Field(unsigned w, std::uint32_t poly);

  unsigned width() const { return w_; }
  std::uint32_t size() const { return q_; }
  std::uint32_t primitive_poly() const { return poly_; }
  Symbol generator() const { return antilog_[1]; }  // alpha

  static Symbol add(Symbol a, Symbol b) { return Symbol(a ^ b); }  // == sub
  Symbol mul(Symbol a, Symbol b) const {
    if (a == 0 || b == 0) return 0;
    return antilog_[unsigned(log_[a]) + unsigned(log_[b])];
  }
  Symbol inv(Symbol a) const;                 // throws std::domain_error on 0
  Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }
  // a^e for any integer e (negative allowed, reduced mod q-1).
  // 0^e is 0 for e > 0 and throws for e <= 0.
  Symbol pow(Symbol a, long long e) const;

  // alpha^i for any i >= 0; periodic with period q-1.
  Symbol exp(std::uint64_t i) const { return antilog_[i % (q_ - 1)]; }
  std::uint32_t log(Symbol a) const;          // discrete log base alpha; a != 0

 private:
  unsigned w_;
  std::uint32_t q_;
  std::uint32_t poly_;
  std::vector<std::uint16_t> log_;   // size q, log_[0] unused
  std::vector<Symbol> antilog_;      // size 2(q-1), antilog_[i] = alpha^(i mod q-1)
};

// GF(q^c) realised as polynomials of degree < c over a base GF(2^w), reduced
// modulo a monic irreducible modulus of degree c. Elements are packed into a
// uint64: coefficient i occupies bits [i*w, (i+1)*w), so c*w must be <= 64
// and c <= 8.
// Packed addition is plain XOR. The multiplicative order is q^c - 1 = the
// all-ones mask over c*w bits (q^c is a power of two).
class ExtField {
 public:
  using Elem = std::uint64_t;

  // Uses the default modulus: the first irreducible monic polynomial of
  // degree c in the search order a_{c-1}, ..., a_1, a_0 counted up as base-q
  // digits (i.e. lexicographically smallest coefficient tuple read from the
  // highest non-leading coefficient down).
  ExtField(std::shared_ptr<const Field> base, unsigned degree);
  // modulus holds degree+1 coefficients, lowest first, leading coeff 1.
  // Throws std::invalid_argument unless irreducible (Rabin gcd test).
  ExtField(std::shared_ptr<const Field> base, unsigned degree,
           std::vector<Symbol> modulus);

  const Field& base() const { return *base_; }
  std::shared_ptr<const Field> base_ptr() const { return base_; }
  unsigned degree() const { return c_; }
  unsigned bits() const { return c_ * base_->width(); }
  Elem mask() const { return mask_; }               // = q^c - 1
  const std::vector<Symbol>& modulus() const { return mod_; }

  Elem embed(Symbol a) const { return Elem(a); }    // constant polynomial
  static Elem add(Elem a, Elem b) { return a ^ b; }
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;          // square-and-multiply
  Elem inv(Elem a) const;                           // throws on 0

  Symbol coeff(Elem x, unsigned i) const {
    return Symbol((x >> (i * base_->width())) & (base_->size() - 1));
  }
  Elem from_coeffs(const std::vector<Symbol>& coeffs) const;
  std::vector<Symbol> to_coeffs(Elem x) const;

  // True iff poly (monic, degree >= 1, coeffs lowest first) is irreducible
  // over base. Rabin test: x^(q^d) == x mod f exactly for the right d.
  static bool is_irreducible(const Field& base, const std::vector<Symbol>& poly);

 private:
  std::shared_ptr<const Field> base_;
  unsigned c_;
  Elem mask_;
  std::vector<Symbol> mod_;  // c+1 coeffs, lowest first, mod_[c] == 1
};

}  // namespace ncv::gf
