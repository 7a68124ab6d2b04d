#include "ncv/rs.hpp"

#include <stdexcept>

#include "ncv/linalg.hpp"
#include "ncv/rng.hpp"

namespace ncv::rs {

using gf::Field;
using gf::Symbol;

unsigned weight(const Vec& v) {
  unsigned w = 0;
  for (Symbol s : v) w += (s != 0);
  return w;
}

Code::Code(unsigned n, unsigned k, std::shared_ptr<const Field> field, unsigned b)
    : n_(n), k_(k), b_(b), field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("Code: null field");
  if (k_ == 0 || k_ >= n_) throw std::invalid_argument("Code: need 0 < k < n");
  if (n_ > field_->size() - 1)
    throw std::invalid_argument("Code: n exceeds q-1");
  const unsigned rows = n_ - k_;
  h_.resize(std::size_t(rows) * n_);
  for (unsigned i = 0; i < rows; ++i)
    for (unsigned j = 0; j < n_; ++j)
      h_[std::size_t(i) * n_ + j] = field_->exp(std::uint64_t(j) * (b_ + i));
  verify_mds();
}

namespace {

// Number of col-subsets C(n, r), saturating at the exhaustive-check cutoff.
unsigned long long subset_count_capped(unsigned n, unsigned r, unsigned long long cap) {
  unsigned long long c = 1;
  if (r > n - r) r = n - r;
  for (unsigned i = 1; i <= r; ++i) {
    c = c * (n - r + i) / i;
    if (c > cap) return cap + 1;
  }
  return c;
}

}  // namespace

void Code::verify_mds() const {
  const unsigned r = n_ - k_;
  const Field& f = *field_;
  auto check_subset = [&](const std::vector<unsigned>& cols) {
    linalg::Matrix m(r, r);
    for (unsigned i = 0; i < r; ++i)
      for (unsigned j = 0; j < r; ++j) m.at(i, j) = h(i, cols[j]);
    if (linalg::rank(std::move(m), f) != r)
      throw std::logic_error("Code: column subset not invertible (MDS violated)");
  };

  const unsigned long long kExhaustiveCutoff = 6000;
  if (subset_count_capped(n_, r, kExhaustiveCutoff) <= kExhaustiveCutoff) {
    // Lexicographic enumeration of all r-subsets.
    std::vector<unsigned> cols(r);
    for (unsigned i = 0; i < r; ++i) cols[i] = i;
    while (true) {
      check_subset(cols);
      unsigned i = r;
      while (i > 0 && cols[i - 1] == n_ - r + i - 1) --i;
      if (i == 0) break;
      ++cols[i - 1];
      for (unsigned j = i; j < r; ++j) cols[j] = cols[j - 1] + 1;
    }
  } else {
    Rng rng(0xC0DEBA5Eull + std::uint64_t(n_) * 131071 + k_);
    for (unsigned trial = 0; trial < 24; ++trial)
      check_subset(rng.positions(n_, r));
  }
}

Vec syndrome(const Vec& v, const Code& code) {
  if (v.size() != code.n()) throw std::invalid_argument("syndrome: bad vector length");
  const Field& f = code.field();
  const unsigned rows = code.redundancy();
  Vec s(rows, 0);
  for (unsigned j = 0; j < code.n(); ++j) {
    const Symbol vj = v[j];
    if (vj == 0) continue;
    for (unsigned i = 0; i < rows; ++i)
      s[i] = Field::add(s[i], f.mul(vj, code.h(i, j)));
  }
  return s;
}

bool is_codeword(const Vec& v, const Code& code) {
  for (Symbol s : syndrome(v, code))
    if (s != 0) return false;
  return true;
}

std::optional<Vec> bma_error_decode(const Vec& synd, const Code& code) {
  const Field& f = code.field();
  const unsigned nsyn = code.redundancy();
  if (synd.size() != nsyn) throw std::invalid_argument("bma: bad syndrome length");

  bool all_zero = true;
  for (Symbol s : synd) all_zero &= (s == 0);
  if (all_zero) return Vec(code.n(), 0);

  // Berlekamp-Massey: find the shortest LFSR (error locator Lambda) that
  // generates the syndrome sequence.
  std::vector<Symbol> lambda{1}, prev{1};
  unsigned L = 0, m = 1;
  Symbol last_disc = 1;
  for (unsigned i = 0; i < nsyn; ++i) {
    Symbol delta = synd[i];
    for (unsigned j = 1; j <= L && j < lambda.size(); ++j)
      if (lambda[j] != 0 && synd[i - j] != 0)
        delta = Field::add(delta, f.mul(lambda[j], synd[i - j]));
    if (delta == 0) {
      ++m;
    } else if (2 * L <= i) {
      std::vector<Symbol> tmp = lambda;
      const Symbol scale = f.div(delta, last_disc);
      if (lambda.size() < prev.size() + m) lambda.resize(prev.size() + m, 0);
      for (unsigned j = 0; j < prev.size(); ++j)
        if (prev[j] != 0)
          lambda[j + m] = Field::add(lambda[j + m], f.mul(scale, prev[j]));
      L = i + 1 - L;
      prev = std::move(tmp);
      last_disc = delta;
      m = 1;
    } else {
      const Symbol scale = f.div(delta, last_disc);
      if (lambda.size() < prev.size() + m) lambda.resize(prev.size() + m, 0);
      for (unsigned j = 0; j < prev.size(); ++j)
        if (prev[j] != 0)
          lambda[j + m] = Field::add(lambda[j + m], f.mul(scale, prev[j]));
      ++m;
    }
  }
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  const unsigned deg = unsigned(lambda.size()) - 1;
  if (deg != L || L == 0 || L > code.t0()) return std::nullopt;

  // Chien search over the whole multiplicative group: every root must land
  // in the (possibly shortened) support [0, n).
  auto eval_poly = [&](const std::vector<Symbol>& p, Symbol x) {
    Symbol acc = 0;
    for (unsigned i = unsigned(p.size()); i-- > 0;)
      acc = Field::add(f.mul(acc, x), p[i]);
    return acc;
  };
  const unsigned group = f.size() - 1;
  std::vector<unsigned> err_pos;
  for (unsigned j = 0; j < group && err_pos.size() <= deg; ++j) {
    // Lambda(alpha^-j) == 0 <=> error at position j.
    if (eval_poly(lambda, f.exp(group - j % group)) == 0) err_pos.push_back(j);
  }
  if (err_pos.size() != deg) return std::nullopt;
  for (unsigned j : err_pos)
    if (j >= code.n()) return std::nullopt;

  // Forney: Omega = S * Lambda mod x^nsyn; e_j = X^(1-b) Omega(X^-1) / Lambda'(X^-1).
  std::vector<Symbol> omega(nsyn, 0);
  for (unsigned i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == 0) continue;
    for (unsigned j = 0; j + i < nsyn; ++j)
      if (synd[j] != 0)
        omega[i + j] = Field::add(omega[i + j], f.mul(lambda[i], synd[j]));
  }
  std::vector<Symbol> dlambda;  // formal derivative: odd-degree terms
  for (unsigned i = 1; i < lambda.size(); i += 2) {
    dlambda.resize(i, 0);
    dlambda[i - 1] = lambda[i];
  }

  Vec e(code.n(), 0);
  const int b = int(code.first_root());
  for (unsigned j : err_pos) {
    const Symbol x_inv = f.exp(group - j % group);
    const Symbol num = eval_poly(omega, x_inv);
    const Symbol den = eval_poly(dlambda, x_inv);
    if (den == 0) return std::nullopt;
    Symbol val = f.div(num, den);
    val = f.mul(val, f.pow(f.exp(j), 1 - b));  // X^(1-b); identity for b = 1
    if (val == 0) return std::nullopt;
    e[j] = val;
  }

  // Never hand back a guess: the result must reproduce the input syndrome.
  if (syndrome(e, code) != synd) return std::nullopt;
  return e;
}

std::optional<Vec> erasure_decode(const Vec& synd,
                                  const std::vector<unsigned>& locations,
                                  const Code& code) {
  const unsigned rows = code.redundancy();
  if (synd.size() != rows) throw std::invalid_argument("erasure: bad syndrome length");
  if (locations.size() > rows)
    throw std::invalid_argument("erasure: more locations than n-k");
  std::vector<bool> seen(code.n(), false);
  for (unsigned j : locations) {
    if (j >= code.n()) throw std::invalid_argument("erasure: location out of range");
    if (seen[j]) throw std::invalid_argument("erasure: duplicate location");
    seen[j] = true;
  }

  linalg::Matrix a(rows, unsigned(locations.size()));
  for (unsigned i = 0; i < rows; ++i)
    for (unsigned c = 0; c < locations.size(); ++c)
      a.at(i, c) = code.h(i, locations[c]);
  auto x = linalg::solve(std::move(a), synd, code.field());
  if (!x) return std::nullopt;
  Vec e(code.n(), 0);
  for (unsigned c = 0; c < locations.size(); ++c) e[locations[c]] = (*x)[c];
  return e;
}

}  // namespace ncv::rs
