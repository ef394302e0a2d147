#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "hypertrees/complex.hpp"
#include "hypertrees/homology.hpp"

namespace hypertrees::trees {

/// A candidate rooted pair: forest F of dimension k on [n] together with
/// a root complex R of dimension k-1 on [n]. The complement of R is taken
/// with respect to all of C([n], k).
struct RootedPair {
  Complex forest;
  Complex root;
};

/// X is a k-hypertree: C(n-1, k) top faces and independent boundary
/// columns. The third two-of-three condition (vanishing beta_{k-1}) is
/// cross-checked in the test suite.
bool is_tree(const Complex& x);

struct RootedForestCheck {
  bool verdict = false;
  /// |det boundary(complement-of-root, F)| = |H_{k-1}(F, R)| when the
  /// block is square and nonsingular.
  std::optional<Integer> torsion;
};
RootedForestCheck is_rooted_forest(const RootedPair& pair);

/// Relative-forest test against an explicit ambient complex (two of:
/// face-count/rank match, beta_{k-1}(X,Y) = beta_{k-1}(ambient,Y),
/// beta_k(X,Y) = 0).
bool is_relative_forest(const Complex& x, const Complex& y, const Complex& ambient);

/// The binomial correspondence and its inverse.
std::pair<Complex, Complex> phi(const Complex& x);
Complex phi_inverse(const Complex& f, const Complex& r);

struct TreeRecord {
  Complex complex;
  Integer torsion;  // |H~_{k-1}| = |det hat-boundary block|
};

/// Every k-hypertree on [n] together with its torsion order, in colex
/// subset order. Candidate subsets are pruned by incremental column
/// independence, so the visited count stays near the forest count.
/// Throws budget_error when C(C(n,k+1), C(n-1,k)) exceeds the budget.
std::vector<TreeRecord> enumerate_trees(int n, int k, double budget = 1e7);

/// Streaming variant; records arrive in the same deterministic order.
void enumerate_trees(int n, int k, double budget,
                     const std::function<void(const Complex&, const Integer&)>& fn);

/// Torsion order of H_{k-1} computed from the Smith normal form of the
/// full top boundary of T; an SNF-route alternative to the determinant.
Integer snf_torsion(const Complex& t);

/// |det of the hat-boundary block on T's faces|: equals |H~_{k-1}(T)| for
/// hypertrees, 0 for everything else with the right face count.
Integer det_torsion(const Complex& t);

/// Theorem-submain surface: the element-wise bijection
/// phi : T_{n,k} -> F^root_{n-1,k}, with homology summaries matched
/// dimension by dimension.
struct SubmainReport {
  bool bijective = false;
  bool homology_match = false;
  std::size_t tree_count = 0;
  std::size_t rooted_forest_count = 0;
  bool ok() const { return bijective && homology_match; }
};
SubmainReport submain_check(int n, int k, double budget = 1e7);

}  // namespace hypertrees::trees
