// linalg.hpp - dense Gaussian elimination over GF(2^w).
#pragma once

#include <optional>
#include <vector>

#include "ncv/gf.hpp"

namespace ncv::linalg {

// Row-major dense matrix of field symbols.
struct Matrix {
  unsigned rows = 0;
  unsigned cols = 0;
  std::vector<gf::Symbol> a;

  Matrix() = default;
  Matrix(unsigned r, unsigned c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}
  gf::Symbol& at(unsigned r, unsigned c) { return a[std::size_t(r) * cols + c]; }
  gf::Symbol at(unsigned r, unsigned c) const { return a[std::size_t(r) * cols + c]; }
};

unsigned rank(Matrix m, const gf::Field& f);

// Solve A x = b. Pivoting is deterministic: for each column, the first row
// (lowest index) with a nonzero entry. Returns nullopt when inconsistent;
// otherwise one solution with free variables set to zero.
std::optional<std::vector<gf::Symbol>> solve(Matrix a, std::vector<gf::Symbol> b,
                                             const gf::Field& f);

// Solve A X = B column-wise for a full-column-rank A (rows >= cols allowed).
// Returns nullopt if rank(A) < A.cols or any column of B is inconsistent.
std::optional<Matrix> solve_full_column_rank(Matrix a, Matrix b, const gf::Field& f);

// Basis of the right nullspace {x : A x = 0}, one vector per free column,
// in ascending free-column order.
std::vector<std::vector<gf::Symbol>> nullspace_basis(Matrix a, const gf::Field& f);

}  // namespace ncv::linalg
