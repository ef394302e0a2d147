#include "hypertrees/measure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "hypertrees/errors.hpp"
#include "hypertrees/subsets.hpp"

namespace hypertrees::measure {

namespace {

void check_combination_budget(std::size_t total, std::size_t m, double budget,
                              const char* what) {
  const Integer count = binomial(static_cast<long>(total), static_cast<long>(m));
  if (Rational(count) > Rational(budget))
    throw budget_error(what, static_cast<double>(count), budget);
}

}  // namespace

Rational nu_mass(const Complex& t) {
  const Integer d = trees::det_torsion(t);
  if (d == 0) return Rational(0);
  return Rational(d * d, int_pow(Integer(t.n()),
                                 static_cast<unsigned long>(binomial(t.n() - 2, t.k()))));
}

Rational inclusion_prob(std::span<const Face> b, int n, int k) {
  Kernel p = kernel_P(n, k);
  std::vector<std::size_t> idx;
  idx.reserve(b.size());
  for (const Face& f : b) idx.push_back(p.index_of(f));
  return principal_minor(p.matrix, idx);
}

Rational exclusion_prob(std::span<const Face> a, int n, int k) {
  Kernel q = kernel_Q(n, k);
  std::vector<std::size_t> idx;
  idx.reserve(a.size());
  for (const Face& f : a) idx.push_back(q.index_of(f));
  return principal_minor(q.matrix, idx);
}

BridgeReport bridge_check(int n, int k, std::span<const Face> a, std::span<const Face> b,
                          double budget) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("bridge_check: k out of range");
  BridgeReport rep;
  const std::vector<Face> kfaces = all_faces(n, k);          // columns of d_k
  const std::vector<Face> km1faces = all_faces(n, k - 1);    // rows of d_k
  const Integer npow_a = int_pow(Integer(n), static_cast<unsigned long>(a.size()));
  const Integer npow_b = int_pow(Integer(n), static_cast<unsigned long>(b.size()));

  // exclusion side: A is a set of (k-1)-faces, the complement complex is
  // the candidate root, and B' ranges over k-face sets of matching size
  rep.q_minor = exclusion_prob(a, n, k - 1);
  {
    check_combination_budget(kfaces.size(), a.size(), budget, "bridge_check: B subsets");
    std::vector<Face> abar_faces;
    for (const Face& f : km1faces)
      if (std::find(a.begin(), a.end(), f) == a.end()) abar_faces.push_back(f);
    const Complex abar(n, k - 1, abar_faces);
    std::vector<Face> arows(a.begin(), a.end());
    Integer total = 0;
    for_each_combination(kfaces.size(), a.size(), [&](const std::vector<std::size_t>& sel) {
      std::vector<Face> bf;
      bf.reserve(sel.size());
      for (std::size_t i : sel) bf.push_back(kfaces[i]);
      Complex forest(n, k, bf);
      if (!trees::is_rooted_forest({forest, abar}).verdict) return;
      Integer d = determinant(boundary_submatrix(arows, bf));
      total += d * d;
    });
    rep.q_sum = Rational(total, npow_a);
  }

  // inclusion side: B is a set of k-faces; A' ranges over (k-1)-face sets
  rep.p_minor = inclusion_prob(b, n, k);
  {
    check_combination_budget(km1faces.size(), b.size(), budget, "bridge_check: A subsets");
    std::vector<Face> bcols(b.begin(), b.end());
    Complex forest(n, k, bcols);
    Integer total = 0;
    for_each_combination(km1faces.size(), b.size(), [&](const std::vector<std::size_t>& sel) {
      std::vector<Face> af;
      af.reserve(sel.size());
      for (std::size_t i : sel) af.push_back(km1faces[i]);
      std::vector<Face> complement;
      for (const Face& f : km1faces)
        if (std::find(af.begin(), af.end(), f) == af.end()) complement.push_back(f);
      if (!trees::is_rooted_forest({forest, Complex(n, k - 1, complement)}).verdict) return;
      Integer d = determinant(boundary_submatrix(af, bcols));
      total += d * d;
    });
    rep.p_sum = Rational(total, npow_b);
  }
  return rep;
}

KalaiVerdict kalai_sum_verify(int n, int k, double budget) {
  KalaiVerdict v;
  LabeledIntMatrix hat = hat_boundary(n, k);
  v.det_route = determinant(hat.entries * hat.entries.transposed());
  v.closed_form = int_pow(Integer(n), static_cast<unsigned long>(binomial(n - 2, k)));
  v.cauchy_binet_route = 0;
  v.torsion_route = 0;
  trees::enumerate_trees(n, k, budget, [&](const Complex& t, const Integer& tor) {
    v.cauchy_binet_route += tor * tor;
    const Integer snf_tor = trees::snf_torsion(t);
    v.torsion_route += snf_tor * snf_tor;
  });
  v.equal = v.det_route == v.cauchy_binet_route && v.cauchy_binet_route == v.torsion_route &&
            v.torsion_route == v.closed_form;
  return v;
}

NegAssocReport negative_association_check(int n, int k, double budget) {
  NegAssocReport rep;
  const std::vector<Face> faces = all_faces(n, k);
  const std::size_t m = faces.size();
  std::vector<Rational> single(m, Rational(0));
  std::map<std::pair<std::size_t, std::size_t>, Rational> pair_prob;

  trees::enumerate_trees(n, k, budget, [&](const Complex& t, const Integer& tor) {
    const Rational mass(tor * tor,
                        int_pow(Integer(n), static_cast<unsigned long>(binomial(n - 2, k))));
    std::vector<std::size_t> idx;
    for (const Face& f : t.faces()) idx.push_back(colex_rank(f));
    for (std::size_t i = 0; i < idx.size(); ++i) {
      single[idx[i]] += mass;
      for (std::size_t j = i + 1; j < idx.size(); ++j)
        pair_prob[{std::min(idx[i], idx[j]), std::max(idx[i], idx[j])}] += mass;
    }
  });

  Kernel p = kernel_P(n, k);
  rep.ok = true;
  rep.minors_agree = true;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t one[] = {i};
    if (principal_minor(p.matrix, one) != single[i]) rep.minors_agree = false;
    for (std::size_t j = i + 1; j < m; ++j) {
      auto it = pair_prob.find({i, j});
      const Rational joint = it == pair_prob.end() ? Rational(0) : it->second;
      if (joint > single[i] * single[j]) rep.ok = false;
      const std::size_t two[] = {i, j};
      if (principal_minor(p.matrix, two) != joint) rep.minors_agree = false;
      ++rep.pairs_checked;
    }
  }
  return rep;
}

}  // namespace hypertrees::measure
