#pragma once

#include <vector>

#include "hypertrees/boundary.hpp"
#include "hypertrees/complex.hpp"
#include "hypertrees/snf.hpp"

namespace hypertrees::homology {

/// One homology group, reported as rank of the free part plus the order
/// of the torsion subgroup. That is all the determinantal measure needs;
/// full invariant-factor lists stay available through smith_normal_form.
struct HomologySummary {
  int betti = 0;
  Integer torsion_order = 1;

  friend bool operator==(const HomologySummary&, const HomologySummary&) = default;
};

/// Homology of one slot of a chain complex given three consecutive layers
/// of basis faces: betti = dim ker d_here - rank d_above, torsion from the
/// SNF of d_above.
HomologySummary chain_homology(const std::vector<Face>& below,
                               const std::vector<Face>& here,
                               const std::vector<Face>& above);

/// Reduced homology of a k-complex (implicit full skeleton) in dimension
/// j, -1 <= j <= k. The dimension -1 slot exists and is always trivial.
HomologySummary reduced_homology(const Complex& x, int j);

/// Relative homology of the pair (X, Y) for Y a subcomplex of X given in
/// the same implicit-skeleton convention. Y may have dimension k or lower;
/// the same face-set-difference code path covers both.
HomologySummary relative_homology(const Complex& x, const Complex& y, int j);

/// Faces of X \ Y in dimension d under the implicit-skeleton convention.
std::vector<Face> relative_faces(const Complex& x, const Complex& y, int d);

/// General layered pair for callers that need an ambient complex other
/// than the one a Complex implies (e.g. a literal simplicial cone):
/// layers[d] holds the d-faces, for d = lo .. lo + layers.size() - 1.
struct FaceChain {
  int lo = -1;
  std::vector<std::vector<Face>> layers;

  const std::vector<Face>& at(int d) const;
  static FaceChain of_complex(const Complex& x);
};
HomologySummary chain_homology_at(const FaceChain& chain, int j);

/// Lemma-homalg identity: alternating face-count sum equals alternating
/// Betti sum, including f_{-1} = 1 for absolute complexes.
bool euler_check(const Complex& x);
bool euler_check_pair(const Complex& x, const Complex& y);

/// Exact verification of d_k d_k^t + d_{k-1}^t d_{k-1} = n Id.
bool hodge_check(int n, int k);

}  // namespace hypertrees::homology
