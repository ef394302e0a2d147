#pragma once

#include <span>
#include <vector>

#include "hypertrees/kernel.hpp"
#include "hypertrees/trees.hpp"

namespace hypertrees::measure {

/// nu_{n,k}(T) = det(hat-boundary restricted to T)^2 / n^C(n-2,k);
/// zero for anything that is not a hypertree.
Rational nu_mass(const Complex& t);

/// nu(T contains B) = det P_{B,B} (Lyons' inclusion minors).
Rational inclusion_prob(std::span<const Face> b, int n, int k);
/// nu(T avoids every face of A) = det Q_{A,A}.
Rational exclusion_prob(std::span<const Face> a, int n, int k);

/// Cauchy-Binet bridge between the kernel minors and rooted-forest sums:
///   det Q_{A,A} = n^-|A|  sum over B with (B, complement(A)) rooted of det^2 d_{A,B}
///   det P_{B,B} = n^-|B|  sum over A with (B, complement(A)) rooted of det^2 d_{A,B}
/// Both sides are computed independently and compared exactly.
struct BridgeReport {
  Rational q_minor, q_sum;
  Rational p_minor, p_sum;
  bool ok() const { return q_minor == q_sum && p_minor == p_sum; }
};
/// a: set of (k-1)-faces for the exclusion identity; b: set of k-faces for
/// the inclusion identity.
BridgeReport bridge_check(int n, int k, std::span<const Face> a, std::span<const Face> b,
                          double budget = 1e7);

/// The enumeration identity behind the measure, three independent routes:
/// det of hat-d hat-d^t, the Cauchy-Binet sum of squared minors, and the
/// SNF torsion-squared sum over hypertrees.
struct KalaiVerdict {
  Integer det_route;
  Integer cauchy_binet_route;
  Integer torsion_route;
  Integer closed_form;  // n^C(n-2,k)
  bool equal = false;
};
KalaiVerdict kalai_sum_verify(int n, int k, double budget = 1e7);

/// Exact negative-association spot check over all face pairs:
/// nu(f,g in T) <= nu(f in T) nu(g in T), every probability obtained by
/// enumeration and cross-checked against the kernel minors.
struct NegAssocReport {
  bool ok = false;
  bool minors_agree = false;
  std::size_t pairs_checked = 0;
};
NegAssocReport negative_association_check(int n, int k, double budget = 1e7);

}  // namespace hypertrees::measure
