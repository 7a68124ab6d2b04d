#include "ncv/linalg.hpp"

#include <stdexcept>

namespace ncv::linalg {

using gf::Field;
using gf::Symbol;

namespace {

// Forward elimination on [A | B]. Returns pivot (row, col) pairs.
// After return, rows below/above pivots are cleared (full reduction).
std::vector<std::pair<unsigned, unsigned>> reduce(Matrix& a, Matrix& b, const Field& f) {
  std::vector<std::pair<unsigned, unsigned>> pivots;
  unsigned row = 0;
  for (unsigned col = 0; col < a.cols && row < a.rows; ++col) {
    unsigned p = row;
    while (p < a.rows && a.at(p, col) == 0) ++p;
    if (p == a.rows) continue;
    if (p != row) {
      for (unsigned c = 0; c < a.cols; ++c) std::swap(a.at(p, c), a.at(row, c));
      for (unsigned c = 0; c < b.cols; ++c) std::swap(b.at(p, c), b.at(row, c));
    }
    const Symbol s = f.inv(a.at(row, col));
    for (unsigned c = col; c < a.cols; ++c) a.at(row, c) = f.mul(a.at(row, c), s);
    for (unsigned c = 0; c < b.cols; ++c) b.at(row, c) = f.mul(b.at(row, c), s);
    for (unsigned r = 0; r < a.rows; ++r) {
      if (r == row) continue;
      const Symbol m = a.at(r, col);
      if (m == 0) continue;
      for (unsigned c = col; c < a.cols; ++c)
        a.at(r, c) = Field::add(a.at(r, c), f.mul(m, a.at(row, c)));
      for (unsigned c = 0; c < b.cols; ++c)
        b.at(r, c) = Field::add(b.at(r, c), f.mul(m, b.at(row, c)));
    }
    pivots.emplace_back(row, col);
    ++row;
  }
  return pivots;
}

}  // namespace

unsigned rank(Matrix m, const Field& f) {
  Matrix empty(m.rows, 0);
  return unsigned(reduce(m, empty, f).size());
}

std::optional<std::vector<Symbol>> solve(Matrix a, std::vector<Symbol> b, const Field& f) {
  if (b.size() != a.rows) throw std::invalid_argument("linalg::solve: size mismatch");
  Matrix rhs(a.rows, 1);
  for (unsigned r = 0; r < a.rows; ++r) rhs.at(r, 0) = b[r];
  auto pivots = reduce(a, rhs, f);
  // Any zero row of A with nonzero rhs means inconsistency.
  for (unsigned r = unsigned(pivots.size()); r < a.rows; ++r)
    if (rhs.at(r, 0) != 0) return std::nullopt;
  std::vector<Symbol> x(a.cols, 0);
  for (auto [r, c] : pivots) x[c] = rhs.at(r, 0);
  return x;
}

std::optional<Matrix> solve_full_column_rank(Matrix a, Matrix b, const Field& f) {
  if (a.rows != b.rows) throw std::invalid_argument("linalg: row count mismatch");
  auto pivots = reduce(a, b, f);
  if (pivots.size() != a.cols) return std::nullopt;
  for (unsigned r = unsigned(pivots.size()); r < a.rows; ++r)
    for (unsigned c = 0; c < b.cols; ++c)
      if (b.at(r, c) != 0) return std::nullopt;
  Matrix x(a.cols, b.cols);
  for (auto [r, c] : pivots)
    for (unsigned j = 0; j < b.cols; ++j) x.at(c, j) = b.at(r, j);
  return x;
}

std::vector<std::vector<Symbol>> nullspace_basis(Matrix a, const Field& f) {
  const unsigned cols = a.cols;
  Matrix empty(a.rows, 0);
  auto pivots = reduce(a, empty, f);
  std::vector<bool> is_pivot(cols, false);
  for (auto [r, c] : pivots) is_pivot[c] = true;
  std::vector<std::vector<Symbol>> basis;
  for (unsigned fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Symbol> x(cols, 0);
    x[fc] = 1;
    for (auto [r, c] : pivots) x[c] = a.at(r, fc);  // -A = A in char 2
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace ncv::linalg
