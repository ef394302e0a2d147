#pragma once

#include <vector>

#include "hypertrees/int_matrix.hpp"

namespace hypertrees {

/// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix under
/// unimodular row/column operations. All factors positive; r is the rank.
struct SNFResult {
  std::vector<Integer> factors;

  std::size_t rank() const { return factors.size(); }
  /// Product of the invariant factors exceeding 1: the order of the
  /// torsion subgroup of coker when the cokernel is finite.
  Integer torsion_order() const;

  friend bool operator==(const SNFResult&, const SNFResult&) = default;
};

/// Pivoting: smallest nonzero magnitude, with full row/column gcd
/// reduction, which keeps entries small on the sparse +-1 boundary
/// blocks this project feeds it.
SNFResult smith_normal_form(IntMatrix m);

}  // namespace hypertrees
