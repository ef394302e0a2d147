#pragma once

#include <cstdint>
#include <vector>

#include "hypertrees/law_table.hpp"
#include "hypertrees/trees.hpp"

namespace hypertrees::coupling {

/// Product Bernoulli mass of the Linial-Meshulam complex Y_k(n, p).
Rational lm_mass(int n, int k, const Rational& p, const Complex& x);
/// Full LM law table; gated by 2^#faces against the budget.
LawTable lm_law(int n, int k, const Rational& p, double budget = 1e7);

/// nu_{n,k} as an exact law table, from enumeration.
LawTable nu_law(int n, int k, double budget = 1e7);

/// Pushforward of nu_{n,k} through Link(n, .) / Proj(n, .), against the
/// structure-theorem models (sample the smaller tree, then add each
/// missing (k-1)-face / delete each k-face independently with prob 1/n).
LawTable link_law_exact(int n, int k, double budget = 1e7);
LawTable model_link_law(int n, int k, double budget = 1e7);
LawTable proj_law_exact(int n, int k, double budget = 1e7);
LawTable model_proj_law(int n, int k, double budget = 1e7);
bool link_law_check(int n, int k, double budget = 1e7);
bool proj_law_check(int n, int k, double budget = 1e7);

/// Law of the link of the (j-1)-simplex {n-j+1..n} against the iterated
/// model T_{n-j,k-j} union Y_{k-j}(n-j, j/n).
LawTable simplex_link_law_exact(int n, int k, int j, double budget = 1e7);
LawTable model_simplex_link_law(int n, int k, int j, double budget = 1e7);
bool simplex_link_law_check(int n, int k, int j, double budget = 1e7);

/// The probability-merge step of the iterated link law:
/// 1/(n-j) + j/n - j/(n(n-j)) == (j+1)/n, exact rationals.
bool binomial_merge_identity(int n, int j);

/// Both displays of the projection/link mass recursion, verified for
/// every F in C_{n-1,k} and every E in C_{n-1,k-1}.
struct IncrReport {
  bool proj_ok = false;
  bool link_ok = false;
  bool ok() const { return proj_ok && link_ok; }
};
IncrReport incr_identity_check(int n, int k, double budget = 1e7);

/// The explicit couplings pi (projection side), lambda (link side) and
/// the joint density pi * lambda / nu, with every check exact.
class CouplingLab {
 public:
  CouplingLab(int n, int k, double budget = 1e7);

  Rational pi_density(const Complex& t, const Complex& t_small, const Complex& y_small) const;
  Rational lambda_density(const Complex& t, const Complex& t_link, const Complex& y_link) const;

  struct Report {
    bool pi_marginals_ok = false;
    bool lambda_marginals_ok = false;
    bool joint_sums_to_one = false;
    bool joint_marginals_ok = false;
    bool pairwise_independence_ok = false;
    bool support_event_ok = false;
    bool conditional_independence_ok = false;
    bool ok() const {
      return pi_marginals_ok && lambda_marginals_ok && joint_sums_to_one &&
             joint_marginals_ok && pairwise_independence_ok && support_event_ok &&
             conditional_independence_ok;
    }
  };
  Report verify() const;

  int n() const { return n_; }
  int k() const { return k_; }

 private:
  struct Atom {
    Complex t_small;   // T' in C_{n-1,k}
    Complex y_small;   // Y' in C_{n-1,k}
    Complex t_link;    // T'' in C_{n-1,k-1}
    Complex y_link;    // Y'' in C_{n-1,k-1}
    Rational pi;
    Rational lambda;
    Rational joint;
  };

  int n_, k_;
  std::vector<trees::TreeRecord> trees_;          // T_{n,k}
  std::vector<Rational> mass_;                    // nu of each tree
  LawTable proj_push_, link_push_;                // nu(S : Proj/Link = .)
  std::vector<trees::TreeRecord> small_trees_;    // T_{n-1,k}
  std::vector<trees::TreeRecord> link_trees_;     // T_{n-1,k-1}

  std::vector<std::vector<Atom>> support_;        // per tree index

  Rational nu_of(const Complex& t) const;
};

/// Corollary-split surface: the restricted rooted forests are exactly
/// T_{n,k} x T_{n,k-1}, and relative torsion factors as the product of
/// the absolute torsions.
struct SplitReport {
  bool set_identity_ok = false;
  bool torsion_identity_ok = false;
  std::size_t pairs_checked = 0;
  bool ok() const { return set_identity_ok && torsion_identity_ok; }
};
SplitReport split_identity_check(int n, int k, double budget = 1e7);
/// Torsion product identity over `samples` random tree pairs (for sizes
/// where the exhaustive pair set is too large).
SplitReport split_torsion_spotcheck(int n, int k, std::size_t samples, std::uint64_t seed,
                                    double budget = 1e7);

/// Per-tree three-way mass identity nu(T) = det^2 / n^C = |H|^2 / n^C
/// via the binomial correspondence.
bool newdef_check(int n, int k, double budget = 1e7);

/// nu factorization over trees whose projection and link are both trees.
struct ProductReport {
  bool ok = false;
  std::size_t qualifying = 0;
};
ProductReport split_product_check(int n, int k, double budget = 1e7);

}  // namespace hypertrees::coupling
