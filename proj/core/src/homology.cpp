#include "hypertrees/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypertrees::homology {

HomologySummary chain_homology(const std::vector<Face>& below,
                               const std::vector<Face>& here,
                               const std::vector<Face>& above) {
  const long f = static_cast<long>(here.size());
  const long rank_here = static_cast<long>(rank(boundary_submatrix(below, here)));
  IntMatrix d_above = boundary_submatrix(here, above);
  SNFResult snf = smith_normal_form(std::move(d_above));

  HomologySummary out;
  out.betti = static_cast<int>(f - rank_here - static_cast<long>(snf.rank()));
  out.torsion_order = 1;
  for (const Integer& d : snf.factors)
    if (d > 1) out.torsion_order *= d;
  return out;
}

HomologySummary reduced_homology(const Complex& x, int j) {
  if (j < -1 || j > x.k()) throw std::invalid_argument("reduced_homology: j out of range");
  return chain_homology(chain_faces(x, j - 1), chain_faces(x, j), chain_faces(x, j + 1));
}

std::vector<Face> relative_faces(const Complex& x, const Complex& y, int d) {
  std::vector<Face> xs = chain_faces(x, d);
  std::vector<Face> ys = chain_faces(y, d);
  std::vector<Face> out;
  std::set_difference(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(out));
  return out;
}

namespace {

void require_subcomplex(const Complex& x, const Complex& y) {
  if (y.n() != x.n() || y.k() > x.k())
    throw std::invalid_argument("relative pair: Y is not a subcomplex of X");
  // only the top layer of Y can fail containment; lower layers are full
  std::vector<Face> xs = chain_faces(x, y.k());
  for (const Face& f : y.faces())
    if (!std::binary_search(xs.begin(), xs.end(), f))
      throw std::invalid_argument("relative pair: Y is not a subcomplex of X");
}

}  // namespace

HomologySummary relative_homology(const Complex& x, const Complex& y, int j) {
  require_subcomplex(x, y);
  if (j < -1 || j > x.k()) throw std::invalid_argument("relative_homology: j out of range");
  return chain_homology(relative_faces(x, y, j - 1), relative_faces(x, y, j),
                        relative_faces(x, y, j + 1));
}

const std::vector<Face>& FaceChain::at(int d) const {
  static const std::vector<Face> empty;
  const int idx = d - lo;
  if (idx < 0 || idx >= static_cast<int>(layers.size())) return empty;
  return layers[static_cast<std::size_t>(idx)];
}

FaceChain FaceChain::of_complex(const Complex& x) {
  FaceChain c;
  c.lo = -1;
  for (int d = -1; d <= x.k(); ++d) c.layers.push_back(chain_faces(x, d));
  return c;
}

HomologySummary chain_homology_at(const FaceChain& chain, int j) {
  return chain_homology(chain.at(j - 1), chain.at(j), chain.at(j + 1));
}

bool euler_check(const Complex& x) {
  long faces_sum = 0;
  long betti_sum = 0;
  for (int j = -1; j <= x.k(); ++j) {
    const int sign = (j % 2 == 0) ? 1 : -1;
    faces_sum += sign * static_cast<long>(chain_faces(x, j).size());
    betti_sum += sign * reduced_homology(x, j).betti;
  }
  return faces_sum == betti_sum;
}

bool euler_check_pair(const Complex& x, const Complex& y) {
  long faces_sum = 0;
  long betti_sum = 0;
  for (int j = -1; j <= x.k(); ++j) {
    const int sign = (j % 2 == 0) ? 1 : -1;
    faces_sum += sign * static_cast<long>(relative_faces(x, y, j).size());
    betti_sum += sign * relative_homology(x, y, j).betti;
  }
  return faces_sum == betti_sum;
}

bool hodge_check(int n, int k) {
  if (k < 0 || k > n - 1) throw std::invalid_argument("hodge_check: k out of range");
  IntMatrix d_k = boundary_matrix(n, k).entries;
  IntMatrix lhs = d_k * d_k.transposed();
  if (k >= 1) {
    IntMatrix d_km1 = boundary_matrix(n, k - 1).entries;
    lhs = lhs + d_km1.transposed() * d_km1;
  }
  return lhs == IntMatrix::scalar(lhs.rows(), n);
}

}  // namespace hypertrees::homology
