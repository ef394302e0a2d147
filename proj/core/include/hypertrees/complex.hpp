#pragma once

#include <compare>
#include <vector>

#include "hypertrees/face.hpp"

namespace hypertrees {

/// A k-dimensional complex on the vertex set [n], stored as its set of
/// k-faces. The full (k-1)-skeleton is implicit and never materialized.
class Complex {
 public:
  /// The empty complex on no vertices.
  Complex() : n_(0), k_(-1) {}
  /// Faces are sorted into colex order and deduplicated; every face must
  /// have dimension k and vertices in [1, n].
  Complex(int n, int k, std::vector<Face> kfaces);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t face_count() const { return faces_.size(); }
  bool contains(const Face& f) const;

  friend bool operator==(const Complex& a, const Complex& b) = default;
  friend std::strong_ordering operator<=>(const Complex& a, const Complex& b);

 private:
  int n_;
  int k_;
  std::vector<Face> faces_;  // colex-sorted, unique
};

/// K_n^k viewed as its top layer: every k-face on [n].
Complex complete_complex(int n, int k);

/// Dimension-raising cone: each face of base gains the fresh apex vertex.
/// Requires apex == base.n() + 1. The lower cone faces land in the
/// implicit skeleton of the result.
Complex cone(int apex, const Complex& base);

/// Link of the designated last vertex v == X.n(): faces of X containing v,
/// with v removed. A (k-1)-complex on [n-1].
Complex link(int v, const Complex& X);

/// Projection away from the last vertex v == X.n(): faces of X avoiding v.
/// A k-complex on [n-1].
Complex proj(int v, const Complex& X);

/// Link of the (j-1)-simplex {n-j+1, ..., n}: a (k-j)-complex on [n-j].
Complex simplex_link(const Complex& X, int j);

/// Union / difference of the k-face sets (same n and k required).
Complex face_union(const Complex& a, const Complex& b);
Complex face_difference(const Complex& a, const Complex& b);

}  // namespace hypertrees
