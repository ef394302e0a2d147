#pragma once

#include <span>

#include "hypertrees/errors.hpp"
#include "hypertrees/int_matrix.hpp"

namespace hypertrees {

/// Rational matrix as an integer numerator matrix over one positive common
/// denominator. Reduction by the collective gcd is lazy: callers that
/// iterate (the chain-rule sampler) invoke reduce() once per step.
class RatMatrix {
 public:
  RatMatrix() : den_(1) {}
  RatMatrix(IntMatrix numerator, Integer denominator);

  std::size_t rows() const { return num_.rows(); }
  std::size_t cols() const { return num_.cols(); }
  const IntMatrix& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }

  Rational at(std::size_t i, std::size_t j) const;
  bool is_symmetric() const;
  /// Exact idempotency test (M * M == M).
  bool is_idempotent() const;
  Rational trace() const;

  static RatMatrix identity(std::size_t n);
  RatMatrix operator-(const RatMatrix& rhs) const;
  bool equals(const RatMatrix& rhs) const;

  /// Divide numerators and denominator by their collective gcd.
  void reduce();

 private:
  IntMatrix num_;
  Integer den_;
};

/// det M_{S,S} as an exact rational; S lists row/col indices. Empty S
/// yields 1.
Rational principal_minor(const RatMatrix& m, std::span<const std::size_t> s);

/// Chain-rule conditioning of a determinantal kernel on the element at
/// `index`. keep = condition on inclusion (requires K_ii != 0); otherwise
/// condition on exclusion (requires K_ii != 1). Returns the conditioned
/// kernel restricted to the remaining indices, in order.
/// Throws conditioning_error on a probability-0/1 event.
RatMatrix schur_condition(const RatMatrix& k, std::size_t index, bool keep);

}  // namespace hypertrees
