#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "hypertrees/numeric.hpp"

namespace hypertrees {

/// An abstract j-face: a strictly ascending tuple of vertices from [n].
/// The empty tuple is the unique (-1)-face.
///
/// Faces compare in colexicographic order, which is the column/row order
/// used by every matrix in the project.
class Face {
 public:
  Face() = default;
  explicit Face(std::vector<int> ascending_vertices);

  int dim() const { return static_cast<int>(verts_.size()) - 1; }
  std::size_t size() const { return verts_.size(); }
  const std::vector<int>& vertices() const { return verts_; }
  int operator[](std::size_t i) const { return verts_[i]; }

  bool contains(int v) const;
  int max_vertex() const { return verts_.empty() ? 0 : verts_.back(); }

  /// Face with vertex at position i removed (the boundary summand).
  Face erased(std::size_t i) const;
  /// Face with a fresh vertex v inserted (v must not be present).
  Face inserted(int v) const;

  friend bool operator==(const Face& a, const Face& b) { return a.verts_ == b.verts_; }
  /// Colexicographic: compare reversed vertex tuples.
  friend std::strong_ordering operator<=>(const Face& a, const Face& b);

 private:
  std::vector<int> verts_;
};

/// Canonicalize raw input: sorts ascending, rejects duplicates and
/// vertices < 1. Range against a concrete n is enforced where a complex
/// or matrix is built.
Face make_face(std::vector<int> vertices);

/// All faces of the given dimension on [n], in colex order.
/// dim == -1 yields the single empty face.
std::vector<Face> all_faces(int n, int dim);

/// Position of a face within all_faces(n, dim); independent of n.
std::size_t colex_rank(const Face& f);

}  // namespace hypertrees
