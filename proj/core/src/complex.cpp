#include "hypertrees/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypertrees {

Complex::Complex(int n, int k, std::vector<Face> kfaces)
    : n_(n), k_(k), faces_(std::move(kfaces)) {
  if (n < 0) throw std::invalid_argument("complex: n must be nonnegative");
  if (k < -1 || k + 1 > n) throw std::invalid_argument("complex: dimension out of range");
  for (const Face& f : faces_) {
    if (f.dim() != k) throw std::invalid_argument("complex: face of wrong dimension");
    if (f.max_vertex() > n) throw std::invalid_argument("complex: face vertex exceeds n");
  }
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
}

bool Complex::contains(const Face& f) const {
  return std::binary_search(faces_.begin(), faces_.end(), f);
}

std::strong_ordering operator<=>(const Complex& a, const Complex& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.k_ <=> b.k_; c != 0) return c;
  return a.faces_ <=> b.faces_;
}

Complex complete_complex(int n, int k) { return Complex(n, k, all_faces(n, k)); }

Complex cone(int apex, const Complex& base) {
  if (apex != base.n() + 1)
    throw std::invalid_argument("cone: apex must be the fresh largest vertex");
  std::vector<Face> out;
  out.reserve(base.face_count());
  for (const Face& f : base.faces()) out.push_back(f.inserted(apex));
  return Complex(apex, base.k() + 1, std::move(out));
}

Complex link(int v, const Complex& X) {
  if (v != X.n()) throw std::invalid_argument("link: v must be the designated last vertex");
  std::vector<Face> out;
  for (const Face& f : X.faces()) {
    if (!f.contains(v)) continue;
    std::vector<int> rest;
    rest.reserve(f.size() - 1);
    for (int u : f.vertices())
      if (u != v) rest.push_back(u);
    out.emplace_back(Face(std::move(rest)));
  }
  return Complex(X.n() - 1, X.k() - 1, std::move(out));
}

Complex proj(int v, const Complex& X) {
  if (v != X.n()) throw std::invalid_argument("proj: v must be the designated last vertex");
  std::vector<Face> out;
  for (const Face& f : X.faces())
    if (!f.contains(v)) out.push_back(f);
  return Complex(X.n() - 1, X.k(), std::move(out));
}

Complex simplex_link(const Complex& X, int j) {
  if (j < 0 || j > X.k() + 1 || j >= X.n())
    throw std::invalid_argument("simplex_link: j out of range");
  const int n = X.n();
  std::vector<Face> out;
  for (const Face& f : X.faces()) {
    std::vector<int> rest;
    rest.reserve(f.size());
    bool all_present = true;
    for (int u : f.vertices()) {
      if (u > n - j) continue;
      rest.push_back(u);
    }
    // f must contain every vertex of {n-j+1..n}
    all_present = (f.size() - rest.size() == static_cast<std::size_t>(j));
    if (all_present) out.emplace_back(Face(std::move(rest)));
  }
  return Complex(n - j, X.k() - j, std::move(out));
}

Complex face_union(const Complex& a, const Complex& b) {
  if (a.n() != b.n() || a.k() != b.k())
    throw std::invalid_argument("face_union: mismatched (n, k)");
  std::vector<Face> out = a.faces();
  out.insert(out.end(), b.faces().begin(), b.faces().end());
  return Complex(a.n(), a.k(), std::move(out));
}

Complex face_difference(const Complex& a, const Complex& b) {
  if (a.n() != b.n() || a.k() != b.k())
    throw std::invalid_argument("face_difference: mismatched (n, k)");
  std::vector<Face> out;
  for (const Face& f : a.faces())
    if (!b.contains(f)) out.push_back(f);
  return Complex(a.n(), a.k(), std::move(out));
}

}  // namespace hypertrees
