#include "hypertrees/kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypertrees::measure {

std::size_t Kernel::index_of(const Face& f) const {
  auto it = std::lower_bound(faces.begin(), faces.end(), f);
  if (it == faces.end() || *it != f)
    throw std::invalid_argument("kernel: face is not a k-face of [n]");
  return static_cast<std::size_t>(it - faces.begin());
}

Kernel kernel_P(int n, int k) {
  if (k < 0 || k + 1 > n) throw std::invalid_argument("kernel_P: k out of range");
  LabeledIntMatrix d = boundary_matrix(n, k);
  Kernel out;
  out.n = n;
  out.k = k;
  out.faces = std::move(d.cols);
  out.matrix = RatMatrix(d.entries.transposed() * d.entries, n);
  return out;
}

Kernel kernel_Q(int n, int k) {
  Kernel p = kernel_P(n, k);
  p.matrix = RatMatrix::identity(p.matrix.rows()) - p.matrix;
  return p;
}

}  // namespace hypertrees::measure
