#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hypertrees/numeric.hpp"

namespace hypertrees {

/// Dense matrix over arbitrary-precision integers. Desk-scale sizes only;
/// no overflow semantics to worry about.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  static IntMatrix identity(std::size_t n);
  static IntMatrix scalar(std::size_t n, const Integer& c);

  IntMatrix transposed() const;
  /// Zero-skipping product; boundary matrices are very sparse.
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  IntMatrix submatrix(std::span<const std::size_t> row_idx,
                      std::span<const std::size_t> col_idx) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Integer> a_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(IntMatrix m);

/// Rank over Q, by fraction-free elimination with column skipping.
std::size_t rank(IntMatrix m);

}  // namespace hypertrees
