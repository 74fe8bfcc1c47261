#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <vector>

#include "graphcoh/rational.hpp"

namespace graphcoh {

using SparseVector = std::map<std::size_t, Rational>;

struct Triplet {
  std::size_t row;
  std::size_t col;
  Rational value;
};

/// Column-major sparse matrix over the rationals. Zero entries are never stored.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }

  void add(std::size_t row, std::size_t col, const Rational& value);
  Rational at(std::size_t row, std::size_t col) const;
  const SparseVector& column(std::size_t col) const { return columns_.at(col); }

  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  /// Row-major ordered list of nonzero entries.
  std::vector<Triplet> triplets() const;

  SparseVector apply(const SparseVector& x) const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

/// Reduced row echelon form; `pivots[r]` is the pivot column of row r.
struct RowEchelon {
  std::vector<SparseVector> rows;
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;
};

/**
 * Gauss-Jordan elimination over Q. In each column the pivot is the candidate
 * row with the smallest numerator plus denominator bit size (ties: lowest
 * row). The result is the unique RREF, so downstream bases are deterministic.
 */
RowEchelon reduced_row_echelon(const SparseMatrix& m);

std::size_t rank(const SparseMatrix& m);

/// Kernel basis read off the RREF: one vector per free column, with a 1 there.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

/// TSV lines "row<TAB>col<TAB>p/q", 1-based.
void write_triplets(std::ostream& os, const SparseMatrix& m);

}  // namespace graphcoh
