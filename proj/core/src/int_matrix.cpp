#include "hypertrees/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hypertrees {

IntMatrix IntMatrix::identity(std::size_t n) { return scalar(n, 1); }

IntMatrix IntMatrix::scalar(std::size_t n, const Integer& c) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  // Row-sparsity index of rhs, so the inner loop only touches nonzeros.
  std::vector<std::vector<std::size_t>> rhs_nz(rhs.rows_);
  for (std::size_t l = 0; l < rhs.rows_; ++l)
    for (std::size_t j = 0; j < rhs.cols_; ++j)
      if (rhs.at(l, j) != 0) rhs_nz[l].push_back(j);

  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t l = 0; l < cols_; ++l) {
      const Integer& a = at(i, l);
      if (a == 0) continue;
      for (std::size_t j : rhs_nz[l]) out.at(i, j) += a * rhs.at(l, j);
    }
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix sum: shape mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
  return out;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> row_idx,
                               std::span<const std::size_t> col_idx) const {
  IntMatrix out(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i) {
    if (row_idx[i] >= rows_) throw std::out_of_range("submatrix: row index");
    for (std::size_t j = 0; j < col_idx.size(); ++j) {
      if (col_idx[j] >= cols_) throw std::out_of_range("submatrix: col index");
      out.at(i, j) = at(row_idx[i], col_idx[j]);
    }
  }
  return out;
}

Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square input");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t t = 0; t + 1 < n; ++t) {
    if (m.at(t, t) == 0) {
      std::size_t p = t + 1;
      while (p < n && m.at(p, t) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(t, j), m.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = t + 1; i < n; ++i) {
      for (std::size_t j = t + 1; j < n; ++j) {
        // Bareiss update: division by the previous pivot is exact.
        m.at(i, j) = (m.at(i, j) * m.at(t, t) - m.at(i, t) * m.at(t, j)) / prev;
      }
      m.at(i, t) = 0;
    }
    prev = m.at(t, t);
  }
  return sign * m.at(n - 1, n - 1);
}

std::size_t rank(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m.at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m.at(r, j), m.at(p, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j)) / prev;
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    ++r;
  }
  return r;
}

}  // namespace hypertrees
