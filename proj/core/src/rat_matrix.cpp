#include "hypertrees/rat_matrix.hpp"

#include <stdexcept>
#include <vector>

namespace hypertrees {

RatMatrix::RatMatrix(IntMatrix numerator, Integer denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw std::invalid_argument("RatMatrix: zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    for (std::size_t i = 0; i < num_.rows(); ++i)
      for (std::size_t j = 0; j < num_.cols(); ++j) num_.at(i, j) = -num_.at(i, j);
  }
}

Rational RatMatrix::at(std::size_t i, std::size_t j) const {
  return Rational(num_.at(i, j), den_);
}

bool RatMatrix::is_symmetric() const {
  if (rows() != cols()) return false;
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = i + 1; j < cols(); ++j)
      if (num_.at(i, j) != num_.at(j, i)) return false;
  return true;
}

bool RatMatrix::is_idempotent() const {
  if (rows() != cols()) return false;
  // (N/d)^2 == N/d  <=>  N*N == d*N
  IntMatrix sq = num_ * num_;
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (sq.at(i, j) != den_ * num_.at(i, j)) return false;
  return true;
}

Rational RatMatrix::trace() const {
  Integer t = 0;
  for (std::size_t i = 0; i < rows() && i < cols(); ++i) t += num_.at(i, i);
  return Rational(t, den_);
}

RatMatrix RatMatrix::identity(std::size_t n) {
  return RatMatrix(IntMatrix::identity(n), 1);
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
  if (rows() != rhs.rows() || cols() != rhs.cols())
    throw std::invalid_argument("RatMatrix difference: shape mismatch");
  IntMatrix out(rows(), cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      out.at(i, j) = num_.at(i, j) * rhs.den_ - rhs.num_.at(i, j) * den_;
  RatMatrix r(std::move(out), den_ * rhs.den_);
  r.reduce();
  return r;
}

bool RatMatrix::equals(const RatMatrix& rhs) const {
  if (rows() != rhs.rows() || cols() != rhs.cols()) return false;
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (num_.at(i, j) * rhs.den_ != rhs.num_.at(i, j) * den_) return false;
  return true;
}

void RatMatrix::reduce() {
  Integer g = den_;
  for (std::size_t i = 0; i < num_.rows() && g != 1; ++i)
    for (std::size_t j = 0; j < num_.cols() && g != 1; ++j)
      if (num_.at(i, j) != 0) g = gcd(g, num_.at(i, j));
  if (g <= 1) return;
  den_ /= g;
  for (std::size_t i = 0; i < num_.rows(); ++i)
    for (std::size_t j = 0; j < num_.cols(); ++j)
      if (num_.at(i, j) != 0) num_.at(i, j) /= g;
}

Rational principal_minor(const RatMatrix& m, std::span<const std::size_t> s) {
  if (s.empty()) return Rational(1);
  std::vector<std::size_t> idx(s.begin(), s.end());
  Integer d = determinant(m.numerator().submatrix(idx, idx));
  return Rational(d, int_pow(m.denominator(), static_cast<unsigned long>(idx.size())));
}

RatMatrix schur_condition(const RatMatrix& k, std::size_t index, bool keep) {
  const std::size_t n = k.rows();
  if (k.cols() != n) throw std::invalid_argument("schur_condition: non-square kernel");
  if (index >= n) throw std::out_of_range("schur_condition: index");
  const IntMatrix& a = k.numerator();
  const Integer& d = k.denominator();
  // keep: K' = K - K_.i K_i. / K_ii,        pivot = a_ii
  // drop: K' = K - K_.i K_i. / (K_ii - 1),  pivot = a_ii - d
  Integer pivot = keep ? a.at(index, index) : a.at(index, index) - d;
  if (pivot == 0) throw conditioning_error(index, keep);

  IntMatrix out(n - 1, n - 1);
  std::size_t oi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == index) continue;
    std::size_t oj = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == index) continue;
      out.at(oi, oj) = a.at(i, j) * pivot - a.at(i, index) * a.at(index, j);
      ++oj;
    }
    ++oi;
  }
  RatMatrix r(std::move(out), d * pivot);
  r.reduce();
  return r;
}

}  // namespace hypertrees
