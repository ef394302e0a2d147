#include "hypertrees/face.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypertrees {

Face::Face(std::vector<int> ascending_vertices) : verts_(std::move(ascending_vertices)) {
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (verts_[i] < 1) throw std::invalid_argument("face vertex out of range (must be >= 1)");
    if (i > 0 && verts_[i] <= verts_[i - 1])
      throw std::invalid_argument("face vertices must be strictly ascending");
  }
}

bool Face::contains(int v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

Face Face::erased(std::size_t i) const {
  std::vector<int> v = verts_;
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
  return Face(std::move(v));
}

Face Face::inserted(int v) const {
  std::vector<int> out = verts_;
  auto it = std::lower_bound(out.begin(), out.end(), v);
  if (it != out.end() && *it == v) throw std::invalid_argument("vertex already in face");
  out.insert(it, v);
  return Face(std::move(out));
}

std::strong_ordering operator<=>(const Face& a, const Face& b) {
  if (a.verts_.size() != b.verts_.size()) return a.verts_.size() <=> b.verts_.size();
  // colex: the face whose largest differing vertex is smaller comes first
  for (std::size_t i = a.verts_.size(); i-- > 0;) {
    if (a.verts_[i] != b.verts_[i]) return a.verts_[i] <=> b.verts_[i];
  }
  return std::strong_ordering::equal;
}

Face make_face(std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (vertices[i] == vertices[i + 1]) throw std::invalid_argument("duplicate vertex in face");
  }
  return Face(std::move(vertices));
}

std::vector<Face> all_faces(int n, int dim) {
  std::vector<Face> out;
  if (dim < -1 || dim + 1 > n) return out;
  if (dim == -1) {
    out.emplace_back();
    return out;
  }
  const int m = dim + 1;
  std::vector<int> idx(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  // colex successor: bump the lowest position that can move without
  // disturbing the positions above it
  while (true) {
    out.emplace_back(Face(idx));
    int i = 0;
    while (i < m && idx[static_cast<std::size_t>(i)] ==
                        (i + 1 < m ? idx[static_cast<std::size_t>(i + 1)] - 1 : n))
      ++i;
    if (i == m) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) idx[static_cast<std::size_t>(j)] = j + 1;
  }
  return out;
}

std::size_t colex_rank(const Face& f) {
  Integer r = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    r += binomial(f[i] - 1, static_cast<long>(i) + 1);
  return static_cast<std::size_t>(r);
}

}  // namespace hypertrees
