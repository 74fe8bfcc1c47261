#include "graphcoh/linalg.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace graphcoh {

void SparseMatrix::add(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_ || col >= columns_.size()) {
    throw std::out_of_range("sparse matrix index out of range");
  }
  if (value == 0) {
    return;
  }
  auto& column = columns_[col];
  auto [it, inserted] = column.try_emplace(row, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) {
      column.erase(it);
    }
  }
}

Rational SparseMatrix::at(std::size_t row, std::size_t col) const {
  const auto& column = columns_.at(col);
  auto it = column.find(row);
  return it == column.end() ? Rational(0) : it->second;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) {
    n += c.size();
  }
  return n;
}

std::vector<Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> out;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& [r, v] : columns_[c]) {
      out.push_back({r, c, v});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Triplet& a, const Triplet& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
  return out;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  SparseVector y;
  for (const auto& [c, xc] : x) {
    for (const auto& [r, v] : columns_.at(c)) {
      y[r] += v * xc;
    }
  }
  std::erase_if(y, [](const auto& kv) { return kv.second == 0; });
  return y;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product shape mismatch");
  }
  SparseMatrix out(a.rows(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    out.columns_[c] = a.apply(b.columns_[c]);
  }
  return out;
}

namespace {

std::size_t height(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

}  // namespace

RowEchelon reduced_row_echelon(const SparseMatrix& m) {
  std::vector<SparseVector> rows(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& [r, v] : m.column(c)) {
      rows[r].emplace(c, v);
    }
  }

  RowEchelon out;
  out.cols = m.cols();
  std::vector<char> used(rows.size(), 0);
  std::vector<std::size_t> pivot_rows;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t pivot = rows.size();
    std::size_t best_height = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r]) {
        continue;
      }
      auto it = rows[r].find(c);
      if (it == rows[r].end()) {
        continue;
      }
      const std::size_t h = height(it->second);
      if (pivot == rows.size() || h < best_height) {
        pivot = r;
        best_height = h;
      }
    }
    if (pivot == rows.size()) {
      continue;
    }
    used[pivot] = 1;
    SparseVector& prow = rows[pivot];
    const Rational inv = 1 / prow.at(c);
    for (auto& [_, v] : prow) {
      v *= inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot) {
        continue;
      }
      auto it = rows[r].find(c);
      if (it == rows[r].end()) {
        continue;
      }
      const Rational factor = it->second;
      for (const auto& [col, v] : prow) {
        auto [slot, inserted] = rows[r].try_emplace(col, -factor * v);
        if (!inserted) {
          slot->second -= factor * v;
          if (slot->second == 0) {
            rows[r].erase(slot);
          }
        }
      }
    }
    out.pivots.push_back(c);
    pivot_rows.push_back(pivot);
  }
  for (std::size_t r : pivot_rows) {
    out.rows.push_back(std::move(rows[r]));
  }
  return out;
}

std::size_t rank(const SparseMatrix& m) { return reduced_row_echelon(m).pivots.size(); }

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
  const RowEchelon rref = reduced_row_echelon(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t c : rref.pivots) {
    is_pivot[c] = 1;
  }
  std::vector<SparseVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) {
      continue;
    }
    SparseVector x;
    x[f] = 1;
    for (std::size_t r = 0; r < rref.rows.size(); ++r) {
      auto it = rref.rows[r].find(f);
      if (it != rref.rows[r].end()) {
        x[rref.pivots[r]] = -it->second;
      }
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

void write_triplets(std::ostream& os, const SparseMatrix& m) {
  for (const Triplet& t : m.triplets()) {
    os << t.row + 1 << '\t' << t.col + 1 << '\t' << to_fraction_string(t.value) << '\n';
  }
}

}  // namespace graphcoh
