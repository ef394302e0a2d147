#pragma once

#include <span>
#include <vector>

#include "hypertrees/complex.hpp"
#include "hypertrees/int_matrix.hpp"

namespace hypertrees {

/// Integer matrix with duplicate-free face labels on rows and columns.
struct LabeledIntMatrix {
  std::vector<Face> rows;
  std::vector<Face> cols;
  IntMatrix entries;
};

/// Signed incidence block: entry (sigma, tau) is (-1)^j when sigma is tau
/// with its j-th smallest vertex removed, else 0. Rows and columns may be
/// arbitrary (duplicate-free) face sets, which is how general ambient
/// complexes enter the library.
IntMatrix boundary_submatrix(std::span<const Face> rows, std::span<const Face> cols);

/// The full simplicial boundary map of the (n-1)-simplex in dimension k:
/// rows indexed by C([n], k) and columns by C([n], k+1), both colex.
/// boundary_matrix(n, 0) is the 1 x n all-ones matrix.
LabeledIntMatrix boundary_matrix(int n, int k);

/// Boundary with the rows containing vertex n deleted; for k = 0 this is
/// boundary_matrix(n, 0) itself.
LabeledIntMatrix hat_boundary(int n, int k);

/// The d-faces of X under the implicit-skeleton convention: all of
/// C([n], d+1) for -1 <= d < k, the stored faces at d == k, nothing
/// outside [-1, k].
std::vector<Face> chain_faces(const Complex& x, int d);

}  // namespace hypertrees
