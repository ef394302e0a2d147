#include "hypertrees/boundary.hpp"

#include <map>
#include <stdexcept>

namespace hypertrees {

IntMatrix boundary_submatrix(std::span<const Face> rows, std::span<const Face> cols) {
  std::map<Face, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!row_index.emplace(rows[i], i).second)
      throw std::invalid_argument("boundary_submatrix: duplicate row label");

  IntMatrix m(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Face& tau = cols[j];
    for (std::size_t v = 0; v < tau.size(); ++v) {
      auto it = row_index.find(tau.erased(v));
      if (it == row_index.end()) continue;
      m.at(it->second, j) = (v % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

LabeledIntMatrix boundary_matrix(int n, int k) {
  if (k < 0 || k > n - 1) throw std::invalid_argument("boundary_matrix: k out of range");
  LabeledIntMatrix out;
  out.rows = all_faces(n, k - 1);
  out.cols = all_faces(n, k);
  out.entries = boundary_submatrix(out.rows, out.cols);
  return out;
}

LabeledIntMatrix hat_boundary(int n, int k) {
  if (k < 0 || k > n - 1) throw std::invalid_argument("hat_boundary: k out of range");
  LabeledIntMatrix out;
  for (const Face& f : all_faces(n, k - 1))
    if (!f.contains(n)) out.rows.push_back(f);
  out.cols = all_faces(n, k);
  out.entries = boundary_submatrix(out.rows, out.cols);
  return out;
}

std::vector<Face> chain_faces(const Complex& x, int d) {
  if (d < -1 || d > x.k()) return {};
  if (d == x.k()) return x.faces();
  return all_faces(x.n(), d);
}

}  // namespace hypertrees
