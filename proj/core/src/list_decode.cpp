#include "ncv/list_decode.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncv/linalg.hpp"

namespace ncv::listdec {

using gf::Field;
using gf::Symbol;
using rs::Vec;

unsigned gs_max_radius(unsigned n, unsigned k) {
  const std::uint64_t nk = std::uint64_t(n) * k;
  std::uint64_t s = 0;
  while (s * s < nk) ++s;  // ceil(sqrt(nk))
  return s >= n ? 0 : n - unsigned(s);
}

namespace {

// Interpolation is feasible at multiplicity r iff the number of monomials of
// (1, k-1)-weighted degree <= D = (N-t)*r - 1 exceeds the N*r(r+1)/2 zero
// constraints.
bool gs_feasible(unsigned n_points, unsigned k, unsigned t, unsigned r) {
  const std::uint64_t u = n_points - t;
  const std::uint64_t d = u * r - 1;
  const std::uint64_t k1 = k - 1;
  const std::uint64_t bmax = d / k1;
  // sum_{b=0}^{bmax} (d + 1 - k1*b)
  const std::uint64_t monomials = (bmax + 1) * (d + 1) - k1 * (bmax * (bmax + 1) / 2);
  const std::uint64_t constraints = std::uint64_t(n_points) * r * (r + 1) / 2;
  return monomials > constraints;
}

}  // namespace

unsigned choose_multiplicity(unsigned n_points, unsigned k, unsigned t, unsigned cap) {
  if (k < 2) throw std::invalid_argument("choose_multiplicity: need k >= 2");
  if (t < 1 || t >= n_points)
    throw std::invalid_argument("choose_multiplicity: bad radius");
  for (unsigned r = 1; r <= cap; ++r)
    if (gs_feasible(n_points, k, t, r)) return r;
  throw std::invalid_argument("choose_multiplicity: no multiplicity within cap");
}

rs::Vec syndrome_to_word(const Vec& synd, const rs::Code& code,
                         const std::vector<unsigned>& zero_positions) {
  const unsigned n = code.n(), red = code.redundancy();
  if (synd.size() != red) throw std::invalid_argument("syndrome_to_word: bad syndrome");
  if (zero_positions.size() != code.k())
    throw std::invalid_argument("syndrome_to_word: need exactly k zero positions");
  std::vector<bool> zero(n, false);
  for (unsigned j : zero_positions) {
    if (j >= n) throw std::invalid_argument("syndrome_to_word: position out of range");
    if (zero[j]) throw std::invalid_argument("syndrome_to_word: duplicate position");
    zero[j] = true;
  }
  std::vector<unsigned> solve_cols;
  for (unsigned j = 0; j < n; ++j)
    if (!zero[j]) solve_cols.push_back(j);

  linalg::Matrix a(red, red);
  for (unsigned i = 0; i < red; ++i)
    for (unsigned c = 0; c < red; ++c) a.at(i, c) = code.h(i, solve_cols[c]);
  auto x = linalg::solve(std::move(a), synd, code.field());
  if (!x) throw std::logic_error("syndrome_to_word: singular system (MDS violated)");
  Vec y(n, 0);
  for (unsigned c = 0; c < red; ++c) y[solve_cols[c]] = (*x)[c];
  return y;
}

rs::Vec syndrome_to_word(const Vec& synd, const rs::Code& code) {
  std::vector<unsigned> zp(code.k());
  for (unsigned i = 0; i < code.k(); ++i) zp[i] = code.redundancy() + i;
  return syndrome_to_word(synd, code, zp);
}

namespace {

// Bivariate polynomial as z-rows of x-coefficient vectors (lowest first).
using Bi = std::vector<std::vector<Symbol>>;

// C(m, j) mod 2 == 1  <=>  j's bits are a subset of m's (Lucas).
inline bool binom_odd(unsigned m, unsigned j) { return (m & j) == j; }

// Hasse derivative D^(a,beta) g evaluated at (x0, y0).
Symbol hasse_eval(const Field& f, const Bi& g, Symbol x0, Symbol y0,
                  unsigned a, unsigned beta) {
  Symbol total = 0;
  Symbol ypow = 1;
  for (unsigned b = beta; b < g.size(); ++b) {
    if (binom_odd(b, beta)) {
      const auto& row = g[b];
      Symbol inner = 0, xpow = 1;
      for (unsigned i = a; i < row.size(); ++i) {
        if (row[i] != 0 && binom_odd(i, a))
          inner = Field::add(inner, f.mul(row[i], xpow));
        xpow = f.mul(xpow, x0);
      }
      total = Field::add(total, f.mul(inner, ypow));
    }
    if (y0 == 0) break;  // y0^(b-beta) = 0 for all later rows
    ypow = f.mul(ypow, y0);
  }
  return total;
}

// Koetter's pointwise interpolation. Returns the minimal-order nonzero
// candidate satisfying all constraints; its weighted degree must not exceed
// bound_d (counting guarantee), else the parameters are inconsistent.
Bi koetter_interpolate(const Field& f, const std::vector<Symbol>& xs,
                       const std::vector<Symbol>& ys, unsigned r, unsigned k1,
                       unsigned lz, std::uint64_t bound_d) {
  const unsigned ncand = lz + 1;
  // Candidate j starts as z^j; its leading monomial keeps z-degree j
  // throughout (updates only add strictly lower-order polynomials), so the
  // order rank is (lead_wdeg[j], j) and all ranks stay distinct.
  std::vector<Bi> g(ncand, Bi(ncand));
  std::vector<std::uint64_t> lead_wdeg(ncand);
  for (unsigned j = 0; j < ncand; ++j) {
    g[j][j] = {1};
    lead_wdeg[j] = std::uint64_t(k1) * j;
  }

  std::vector<Symbol> disc(ncand);
  for (std::size_t p = 0; p < xs.size(); ++p) {
    const Symbol x0 = xs[p], y0 = ys[p];
    for (unsigned s = 0; s < r; ++s) {
      for (unsigned beta = 0; beta <= s; ++beta) {
        const unsigned a = s - beta;
        unsigned jmin = ncand;
        for (unsigned j = 0; j < ncand; ++j) {
          disc[j] = hasse_eval(f, g[j], x0, y0, a, beta);
          if (disc[j] != 0 &&
              (jmin == ncand || lead_wdeg[j] < lead_wdeg[jmin] ||
               (lead_wdeg[j] == lead_wdeg[jmin] && j < jmin)))
            jmin = j;
        }
        if (jmin == ncand) continue;  // constraint already satisfied
        const Bi& gm = g[jmin];
        for (unsigned j = 0; j < ncand; ++j) {
          if (j == jmin || disc[j] == 0) continue;
          const Symbol scale = f.div(disc[j], disc[jmin]);
          Bi& gj = g[j];
          for (unsigned b = 0; b < ncand; ++b) {
            const auto& src = gm[b];
            if (src.empty()) continue;
            auto& dst = gj[b];
            if (dst.size() < src.size()) dst.resize(src.size(), 0);
            for (std::size_t i = 0; i < src.size(); ++i)
              if (src[i] != 0)
                dst[i] = Field::add(dst[i], f.mul(scale, src[i]));
          }
        }
        // g[jmin] *= (x - x0)
        for (unsigned b = 0; b < ncand; ++b) {
          auto& row = g[jmin][b];
          if (row.empty()) continue;
          row.push_back(0);
          for (std::size_t i = row.size() - 1; i-- > 0;) {
            const Symbol v = row[i];
            if (v != 0) {
              row[i + 1] = Field::add(row[i + 1], v);
              row[i] = f.mul(v, x0);
            }
          }
        }
        ++lead_wdeg[jmin];
      }
    }
  }

  unsigned best = 0;
  for (unsigned j = 1; j < ncand; ++j)
    if (lead_wdeg[j] < lead_wdeg[best]) best = j;
  if (lead_wdeg[best] > bound_d)
    throw std::logic_error("koetter_interpolate: degree bound violated");
  return std::move(g[best]);
}

void strip_x_power(Bi& q) {
  std::size_t s = SIZE_MAX;
  for (const auto& row : q) {
    if (row.empty()) continue;
    std::size_t first = 0;
    while (first < row.size() && row[first] == 0) ++first;
    if (first == row.size()) continue;
    s = std::min(s, first);
    if (s == 0) return;
  }
  if (s == SIZE_MAX) return;  // zero polynomial; callers prevent this
  for (auto& row : q) {
    if (row.empty()) continue;
    row.erase(row.begin(), row.begin() + std::min(s, row.size()));
  }
}

// q(x, x*z + gamma)
Bi substitute_shift(const Field& f, const Bi& q, Symbol gamma) {
  const unsigned rows = unsigned(q.size());
  Bi out(rows);
  for (unsigned j = 0; j < rows; ++j) {
    std::vector<Symbol> acc;
    Symbol gpow = 1;  // gamma^(b-j)
    for (unsigned b = j; b < rows; ++b) {
      if (binom_odd(b, j) && !q[b].empty() && gpow != 0) {
        if (acc.size() < q[b].size()) acc.resize(q[b].size(), 0);
        for (std::size_t i = 0; i < q[b].size(); ++i)
          if (q[b][i] != 0)
            acc[i] = Field::add(acc[i], f.mul(gpow, q[b][i]));
      }
      gpow = f.mul(gpow, gamma);
    }
    while (!acc.empty() && acc.back() == 0) acc.pop_back();
    if (!acc.empty()) {
      acc.insert(acc.begin(), j, 0);  // shift by x^j
      out[j] = std::move(acc);
    }
  }
  return out;
}

// Roth-Ruckenstein: all f (deg < k) with q(x, f(x)) == 0.
void rr_roots(const Field& f, Bi q, unsigned k, std::vector<Symbol>& prefix,
              std::vector<Vec>& out) {
  strip_x_power(q);
  // Constant-in-x part p(z) = q(0, z); roots of p are candidate next coeffs.
  std::vector<Symbol> p(q.size(), 0);
  bool pzero = true;
  for (std::size_t b = 0; b < q.size(); ++b)
    if (!q[b].empty()) {
      p[b] = q[b][0];
      pzero &= (p[b] == 0);
    }
  if (pzero) return;  // cannot happen after strip unless q == 0

  const std::uint32_t qsize = f.size();
  for (std::uint32_t gv = 0; gv < qsize; ++gv) {
    const Symbol gamma = Symbol(gv);
    Symbol acc = 0;
    for (std::size_t b = p.size(); b-- > 0;) acc = Field::add(f.mul(acc, gamma), p[b]);
    if (acc != 0) continue;
    if (prefix.size() + 1 == k) {
      // Tail is the constant gamma: need q(x, gamma) == 0 identically.
      std::vector<Symbol> full;
      Symbol gpow = 1;
      for (std::size_t b = 0; b < q.size(); ++b) {
        if (!q[b].empty() && gpow != 0) {
          if (full.size() < q[b].size()) full.resize(q[b].size(), 0);
          for (std::size_t i = 0; i < q[b].size(); ++i)
            if (q[b][i] != 0) full[i] = Field::add(full[i], f.mul(gpow, q[b][i]));
        }
        gpow = f.mul(gpow, gamma);
      }
      bool allzero = true;
      for (Symbol c : full) allzero &= (c == 0);
      if (allzero) {
        Vec poly = prefix;
        poly.push_back(gamma);
        out.push_back(std::move(poly));
      }
    } else {
      Bi q2 = substitute_shift(f, q, gamma);
      bool q2zero = true;
      for (const auto& row : q2) q2zero &= row.empty();
      if (!q2zero) {
        prefix.push_back(gamma);
        rr_roots(f, std::move(q2), k, prefix, out);
        prefix.pop_back();
      }
    }
  }
}

}  // namespace

std::vector<Vec> gs_list_decode(const Vec& y, const rs::Code& code,
                                const ListDecodeParams& params) {
  const unsigned n = code.n(), k = code.k();
  const Field& f = code.field();
  if (y.size() != n) throw std::invalid_argument("gs_list_decode: bad word length");
  if (code.first_root() != 1)
    throw std::invalid_argument("gs_list_decode: only b = 1 codes supported");
  if (k < 2) throw std::invalid_argument("gs_list_decode: need k >= 2");
  const unsigned t = params.radius;
  if (t < 1 || t > gs_max_radius(n, k))
    throw std::invalid_argument("gs_list_decode: radius outside [1, n - ceil(sqrt(nk))]");

  unsigned r = params.multiplicity;
  if (r == 0) {
    r = choose_multiplicity(n, k, t, params.max_multiplicity);
  } else if (!gs_feasible(n, k, t, r)) {
    throw std::invalid_argument("gs_list_decode: multiplicity too small for radius");
  }
  const std::uint64_t d = std::uint64_t(n - t) * r - 1;
  const unsigned lz = unsigned(d / (k - 1));

  // A shortened code is generalized RS: codewords are g(x_j) * z(x_j) with
  // deg g < k and z the vanishing polynomial of the removed positions (z is
  // never zero on the live points). Dividing y by z(x_j) reduces decoding to
  // the plain k-dimensional interpolation problem on the n live points; for
  // full-length codes z == 1.
  const unsigned nfull = code.parent_length();
  std::vector<Symbol> xs(n), ys(n), zmul(n, 1);
  for (unsigned j = 0; j < n; ++j) xs[j] = code.eval_point(j);
  for (unsigned j = 0; j < n; ++j)
    for (unsigned u = n; u < nfull; ++u)
      zmul[j] = f.mul(zmul[j], Field::add(xs[j], code.eval_point(u)));
  for (unsigned j = 0; j < n; ++j) ys[j] = f.div(y[j], zmul[j]);

  Bi q = koetter_interpolate(f, xs, ys, r, k - 1, lz, d);
  std::vector<Vec> polys;
  std::vector<Symbol> prefix;
  rr_roots(f, std::move(q), k, prefix, polys);

  std::vector<Vec> result;
  for (const auto& poly : polys) {
    Vec cw(n, 0);
    unsigned dist = 0;
    for (unsigned j = 0; j < n; ++j) {
      Symbol acc = 0;
      const Symbol x = xs[j];
      for (std::size_t i = poly.size(); i-- > 0;)
        acc = Field::add(f.mul(acc, x), poly[i]);
      cw[j] = f.mul(acc, zmul[j]);
      dist += (cw[j] != y[j]);
    }
    if (dist <= t) result.push_back(std::move(cw));
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

CandidateList list_error_patterns(const Vec& synd, const rs::Code& code,
                                  const ListDecodeParams& params,
                                  const std::vector<unsigned>& zero_positions) {
  const Vec y = syndrome_to_word(synd, code, zero_positions);
  std::vector<Vec> words = gs_list_decode(y, code, params);
  CandidateList out;
  for (auto& x : words) {
    Vec e(code.n());
    for (unsigned j = 0; j < code.n(); ++j) e[j] = Field::add(x[j], y[j]);
    out.patterns.push_back(std::move(e));
  }
  std::sort(out.patterns.begin(), out.patterns.end());
  if (out.patterns.size() > params.max_list) {
    out.patterns.resize(params.max_list);
    out.truncated = true;
  }
  return out;
}

CandidateList list_error_patterns(const Vec& synd, const rs::Code& code,
                                  const ListDecodeParams& params) {
  std::vector<unsigned> zp(code.k());
  for (unsigned i = 0; i < code.k(); ++i) zp[i] = code.redundancy() + i;
  return list_error_patterns(synd, code, params, zp);
}

BruteForceOracle::BruteForceOracle(const rs::Code& code) : code_(code) {
  const unsigned n = code.n(), k = code.k();
  const std::uint64_t q = code.field().size();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < k; ++i) {
    total *= q;
    if (total > (1ull << 24))
      throw std::invalid_argument("BruteForceOracle: q^k exceeds 2^24");
  }

  linalg::Matrix h(code.redundancy(), n);
  for (unsigned i = 0; i < code.redundancy(); ++i)
    for (unsigned j = 0; j < n; ++j) h.at(i, j) = code.h(i, j);
  auto basis = linalg::nullspace_basis(std::move(h), code.field());
  if (basis.size() != k)
    throw std::logic_error("BruteForceOracle: nullspace dimension != k");
  for (const auto& b : basis)
    if (!rs::is_codeword(b, code))
      throw std::logic_error("BruteForceOracle: basis vector fails check");

  count_ = std::size_t(total);
  words_.assign(count_ * n, 0);
  const Field& f = code.field();
  std::vector<unsigned> digits(k, 0);
  for (std::size_t idx = 0; idx < count_; ++idx) {
    Symbol* w = &words_[idx * n];
    for (unsigned d = 0; d < k; ++d) {
      const Symbol coeff = Symbol(digits[d]);
      if (coeff == 0) continue;
      const auto& b = basis[d];
      for (unsigned j = 0; j < n; ++j)
        w[j] = Field::add(w[j], f.mul(coeff, b[j]));
    }
    for (unsigned d = 0; d < k; ++d) {
      if (++digits[d] < q) break;
      digits[d] = 0;
    }
  }
}

CandidateList BruteForceOracle::list(const Vec& synd, unsigned t) const {
  const unsigned n = code_.n(), red = code_.redundancy();
  if (synd.size() != red) throw std::invalid_argument("BruteForceOracle: bad syndrome");
  const Field& f = code_.field();

  // Independent particular solution: eliminate on the first n-k columns of H.
  // (Deliberately not syndrome_to_word; this path must not share the code
  // under test.)
  std::vector<std::vector<Symbol>> aug(red, std::vector<Symbol>(red + 1, 0));
  for (unsigned i = 0; i < red; ++i) {
    for (unsigned j = 0; j < red; ++j) aug[i][j] = code_.h(i, j);
    aug[i][red] = synd[i];
  }
  for (unsigned col = 0; col < red; ++col) {
    unsigned piv = col;
    while (piv < red && aug[piv][col] == 0) ++piv;
    if (piv == red) throw std::logic_error("BruteForceOracle: singular system");
    std::swap(aug[piv], aug[col]);
    const Symbol s = f.inv(aug[col][col]);
    for (unsigned j = col; j <= red; ++j) aug[col][j] = f.mul(aug[col][j], s);
    for (unsigned r2 = 0; r2 < red; ++r2) {
      if (r2 == col || aug[r2][col] == 0) continue;
      const Symbol mfac = aug[r2][col];
      for (unsigned j = col; j <= red; ++j)
        aug[r2][j] = Field::add(aug[r2][j], f.mul(mfac, aug[col][j]));
    }
  }
  Vec y0(n, 0);
  for (unsigned j = 0; j < red; ++j) y0[j] = aug[j][red];
  if (rs::syndrome(y0, code_) != synd)
    throw std::logic_error("BruteForceOracle: particular solution check failed");

  CandidateList out;
  for (std::size_t idx = 0; idx < count_; ++idx) {
    const Symbol* w = &words_[idx * n];
    unsigned wt = 0;
    for (unsigned j = 0; j < n && wt <= t; ++j) wt += (w[j] != y0[j]);
    if (wt > t) continue;
    Vec e(n);
    for (unsigned j = 0; j < n; ++j) e[j] = Field::add(w[j], y0[j]);
    out.patterns.push_back(std::move(e));
  }
  std::sort(out.patterns.begin(), out.patterns.end());
  return out;
}

CandidateList brute_force_list(const Vec& synd, const rs::Code& code, unsigned t) {
  return BruteForceOracle(code).list(synd, t);
}

}  // namespace ncv::listdec
