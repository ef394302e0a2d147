#pragma once

#include <vector>

#include "hypertrees/boundary.hpp"
#include "hypertrees/rat_matrix.hpp"

namespace hypertrees::measure {

/// The exact projection kernel of nu_{n,k}: a symmetric idempotent
/// rational matrix indexed by the k-faces of [n] in colex order, with
/// every entry an integer over the common denominator n.
struct Kernel {
  int n = 0;
  int k = 0;
  std::vector<Face> faces;
  RatMatrix matrix;

  std::size_t index_of(const Face& f) const;
};

/// P_{n,k} = (1/n) d_k^t d_k.
Kernel kernel_P(int n, int k);
/// Q_{n,k} = Id - P_{n,k} = (1/n) d_{k+1} d_{k+1}^t.
Kernel kernel_Q(int n, int k);

}  // namespace hypertrees::measure
