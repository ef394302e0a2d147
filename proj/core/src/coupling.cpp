#include "hypertrees/coupling.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hypertrees/errors.hpp"
#include "hypertrees/homology.hpp"
#include "hypertrees/measure.hpp"
#include "hypertrees/rng.hpp"
#include "hypertrees/subsets.hpp"

namespace hypertrees::coupling {

namespace {

Rational rat_pow(const Rational& base, std::size_t e) {
  Rational r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

// n^e for possibly negative e
Rational rat_npow(int n, long e) {
  if (e >= 0) return Rational(int_pow(Integer(n), static_cast<unsigned long>(e)));
  return Rational(1, int_pow(Integer(n), static_cast<unsigned long>(-e)));
}

void check_pow2_budget(std::size_t bits, double budget, const char* what) {
  if (bits >= 63 || static_cast<double>(std::uint64_t{1} << bits) > budget)
    throw budget_error(what, bits >= 63 ? 9e18 : static_cast<double>(std::uint64_t{1} << bits),
                       budget);
}

Complex mask_complex(int n, int k, const std::vector<Face>& faces, std::uint64_t mask) {
  std::vector<Face> sel;
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (mask & (std::uint64_t{1} << i)) sel.push_back(faces[i]);
  return Complex(n, k, std::move(sel));
}

}  // namespace

Rational lm_mass(int n, int k, const Rational& p, const Complex& x) {
  if (x.n() != n || x.k() != k) throw std::invalid_argument("lm_mass: complex shape mismatch");
  const std::size_t total = static_cast<std::size_t>(binomial(n, k + 1));
  return rat_pow(p, x.face_count()) * rat_pow(Rational(1) - p, total - x.face_count());
}

LawTable lm_law(int n, int k, const Rational& p, double budget) {
  const std::vector<Face> faces = all_faces(n, k);
  check_pow2_budget(faces.size(), budget, "lm_law: state space exceeds budget");
  LawTable law;
  for_each_subset(faces.size(), [&](std::uint64_t mask) {
    Complex x = mask_complex(n, k, faces, mask);
    law.add(x, lm_mass(n, k, p, x));
  });
  law.finalize();
  return law;
}

LawTable nu_law(int n, int k, double budget) {
  LawTable law;
  const Integer denom = int_pow(Integer(n), static_cast<unsigned long>(binomial(n - 2, k)));
  trees::enumerate_trees(n, k, budget, [&](const Complex& t, const Integer& tor) {
    law.add(t, Rational(tor * tor, denom));
  });
  law.finalize();
  return law;
}

LawTable link_law_exact(int n, int k, double budget) {
  LawTable law;
  const Integer denom = int_pow(Integer(n), static_cast<unsigned long>(binomial(n - 2, k)));
  trees::enumerate_trees(n, k, budget, [&](const Complex& t, const Integer& tor) {
    law.add(link(n, t), Rational(tor * tor, denom));
  });
  law.finalize();
  return law;
}

LawTable proj_law_exact(int n, int k, double budget) {
  LawTable law;
  const Integer denom = int_pow(Integer(n), static_cast<unsigned long>(binomial(n - 2, k)));
  trees::enumerate_trees(n, k, budget, [&](const Complex& t, const Integer& tor) {
    law.add(proj(n, t), Rational(tor * tor, denom));
  });
  law.finalize();
  return law;
}

LawTable model_link_law(int n, int k, double budget) {
  // sample T'' ~ nu_{n-1,k-1}, then add each missing (k-1)-face with
  // probability 1/n
  const Rational p(1, n);
  const std::vector<Face> layer = all_faces(n - 1, k - 1);
  LawTable law;
  for (const auto& rec : trees::enumerate_trees(n - 1, k - 1, budget)) {
    const Rational base = measure::nu_mass(rec.complex);
    std::vector<Face> missing;
    for (const Face& f : layer)
      if (!rec.complex.contains(f)) missing.push_back(f);
    check_pow2_budget(missing.size(), budget, "model_link_law: additions exceed budget");
    for_each_subset(missing.size(), [&](std::uint64_t mask) {
      std::vector<Face> sel = rec.complex.faces();
      std::size_t added = 0;
      for (std::size_t i = 0; i < missing.size(); ++i) {
        if (mask & (std::uint64_t{1} << i)) {
          sel.push_back(missing[i]);
          ++added;
        }
      }
      law.add(Complex(n - 1, k - 1, std::move(sel)),
              base * rat_pow(p, added) * rat_pow(Rational(1) - p, missing.size() - added));
    });
  }
  law.finalize();
  return law;
}

LawTable model_proj_law(int n, int k, double budget) {
  // sample T' ~ nu_{n-1,k}, then delete each face with probability 1/n
  const Rational p(1, n);
  LawTable law;
  for (const auto& rec : trees::enumerate_trees(n - 1, k, budget)) {
    const Rational base = measure::nu_mass(rec.complex);
    const std::vector<Face>& faces = rec.complex.faces();
    check_pow2_budget(faces.size(), budget, "model_proj_law: deletions exceed budget");
    for_each_subset(faces.size(), [&](std::uint64_t mask) {
      std::vector<Face> kept;
      std::size_t deleted = 0;
      for (std::size_t i = 0; i < faces.size(); ++i) {
        if (mask & (std::uint64_t{1} << i))
          ++deleted;
        else
          kept.push_back(faces[i]);
      }
      law.add(Complex(n - 1, k, std::move(kept)),
              base * rat_pow(p, deleted) * rat_pow(Rational(1) - p, faces.size() - deleted));
    });
  }
  law.finalize();
  return law;
}

bool link_law_check(int n, int k, double budget) {
  return link_law_exact(n, k, budget) == model_link_law(n, k, budget);
}

bool proj_law_check(int n, int k, double budget) {
  return proj_law_exact(n, k, budget) == model_proj_law(n, k, budget);
}

LawTable simplex_link_law_exact(int n, int k, int j, double budget) {
  if (j < 1 || j > k) throw std::invalid_argument("simplex_link_law: need 1 <= j <= k");
  LawTable law;
  const Integer denom = int_pow(Integer(n), static_cast<unsigned long>(binomial(n - 2, k)));
  trees::enumerate_trees(n, k, budget, [&](const Complex& t, const Integer& tor) {
    law.add(simplex_link(t, j), Rational(tor * tor, denom));
  });
  law.finalize();
  return law;
}

LawTable model_simplex_link_law(int n, int k, int j, double budget) {
  if (j < 1 || j > k) throw std::invalid_argument("simplex_link_law: need 1 <= j <= k");
  const Rational p(j, n);
  const std::vector<Face> layer = all_faces(n - j, k - j);
  LawTable law;
  for (const auto& rec : trees::enumerate_trees(n - j, k - j, budget)) {
    const Rational base = measure::nu_mass(rec.complex);
    std::vector<Face> missing;
    for (const Face& f : layer)
      if (!rec.complex.contains(f)) missing.push_back(f);
    check_pow2_budget(missing.size(), budget, "model_simplex_link_law: additions exceed budget");
    for_each_subset(missing.size(), [&](std::uint64_t mask) {
      std::vector<Face> sel = rec.complex.faces();
      std::size_t added = 0;
      for (std::size_t i = 0; i < missing.size(); ++i) {
        if (mask & (std::uint64_t{1} << i)) {
          sel.push_back(missing[i]);
          ++added;
        }
      }
      law.add(Complex(n - j, k - j, std::move(sel)),
              base * rat_pow(p, added) * rat_pow(Rational(1) - p, missing.size() - added));
    });
  }
  law.finalize();
  return law;
}

bool simplex_link_law_check(int n, int k, int j, double budget) {
  return simplex_link_law_exact(n, k, j, budget) == model_simplex_link_law(n, k, j, budget);
}

bool binomial_merge_identity(int n, int j) {
  if (j <= 0 || j >= n) throw std::invalid_argument("binomial_merge_identity: bad (n, j)");
  const Rational lhs =
      Rational(1, n - j) + Rational(j, n) - Rational(j, Integer(n) * (n - j));
  return lhs == Rational(j + 1, n);
}

IncrReport incr_identity_check(int n, int k, double budget) {
  IncrReport rep;
  const LawTable proj_push = proj_law_exact(n, k, budget);
  const LawTable link_push = link_law_exact(n, k, budget);
  const long c_pow = static_cast<long>(binomial(n - 2, k));
  const Rational keep = Rational(n - 1, n);

  // projection side, over every F in C_{n-1,k}
  {
    const std::vector<Face> faces = all_faces(n - 1, k);
    check_pow2_budget(faces.size(), budget, "incr_identity_check: F space exceeds budget");
    const auto small = trees::enumerate_trees(n - 1, k, budget);
    rep.proj_ok = true;
    for_each_subset(faces.size(), [&](std::uint64_t mask) {
      if (!rep.proj_ok) return;
      const Complex f = mask_complex(n - 1, k, faces, mask);
      Rational contain = 0;
      for (const auto& rec : small) {
        bool sup = true;
        for (const Face& face : f.faces())
          if (!rec.complex.contains(face)) {
            sup = false;
            break;
          }
        if (sup) contain += measure::nu_mass(rec.complex);
      }
      const Rational rhs = contain * rat_pow(keep, f.face_count()) *
                           rat_npow(n, static_cast<long>(f.face_count()) - c_pow);
      if (proj_push.mass_of(f) != rhs) rep.proj_ok = false;
    });
  }

  // link side, over every E in C_{n-1,k-1}
  {
    const std::vector<Face> faces = all_faces(n - 1, k - 1);
    check_pow2_budget(faces.size(), budget, "incr_identity_check: E space exceeds budget");
    const auto small = trees::enumerate_trees(n - 1, k - 1, budget);
    rep.link_ok = true;
    for_each_subset(faces.size(), [&](std::uint64_t mask) {
      if (!rep.link_ok) return;
      const Complex e = mask_complex(n - 1, k - 1, faces, mask);
      Rational contained = 0;
      for (const auto& rec : small) {
        bool sub = true;
        for (const Face& face : rec.complex.faces())
          if (!e.contains(face)) {
            sub = false;
            break;
          }
        if (sub) contained += measure::nu_mass(rec.complex);
      }
      const std::size_t ebar = faces.size() - e.face_count();
      const Rational rhs = contained * rat_pow(keep, ebar) *
                           rat_npow(n, static_cast<long>(ebar) - c_pow);
      if (link_push.mass_of(e) != rhs) rep.link_ok = false;
    });
  }
  return rep;
}

CouplingLab::CouplingLab(int n, int k, double budget) : n_(n), k_(k) {
  if (k < 1 || k >= n - 1)
    throw std::invalid_argument("CouplingLab: Theorem requires 1 <= k < n-1");
  trees_ = trees::enumerate_trees(n, k, budget);
  const Integer denom = int_pow(Integer(n), static_cast<unsigned long>(binomial(n - 2, k)));
  mass_.reserve(trees_.size());
  for (const auto& rec : trees_) {
    mass_.push_back(Rational(rec.torsion * rec.torsion, denom));
    proj_push_.add(proj(n, rec.complex), mass_.back());
    link_push_.add(link(n, rec.complex), mass_.back());
  }
  proj_push_.finalize();
  link_push_.finalize();
  small_trees_ = trees::enumerate_trees(n - 1, k, budget);
  link_trees_ = trees::enumerate_trees(n - 1, k - 1, budget);

  const Rational p(1, n);
  const std::vector<Face> top_layer = all_faces(n - 1, k);
  const std::vector<Face> low_layer = all_faces(n - 1, k - 1);

  struct Half {
    Complex tree;
    Complex binom;
    Rational density;
  };

  support_.resize(trees_.size());
  for (std::size_t ti = 0; ti < trees_.size(); ++ti) {
    const Complex f = proj(n, trees_[ti].complex);
    const Complex e = link(n, trees_[ti].complex);

    // projection side: T' must contain F; Y' matches T' \ F inside T' and
    // is unconstrained outside T'
    std::vector<Half> pi_side;
    for (const auto& rec : small_trees_) {
      bool sup = true;
      for (const Face& face : f.faces())
        if (!rec.complex.contains(face)) {
          sup = false;
          break;
        }
      if (!sup) continue;
      const Rational nu_small = measure::nu_mass(rec.complex);
      std::vector<Face> fixed;
      for (const Face& face : rec.complex.faces())
        if (!f.contains(face)) fixed.push_back(face);
      std::vector<Face> free_faces;
      for (const Face& face : top_layer)
        if (!rec.complex.contains(face)) free_faces.push_back(face);
      check_pow2_budget(free_faces.size(), budget, "CouplingLab: Y' space exceeds budget");
      for_each_subset(free_faces.size(), [&](std::uint64_t mask) {
        std::vector<Face> ysel = fixed;
        for (std::size_t i = 0; i < free_faces.size(); ++i)
          if (mask & (std::uint64_t{1} << i)) ysel.push_back(free_faces[i]);
        Complex y(n - 1, k, std::move(ysel));
        const Rational pi =
            lm_mass(n - 1, k, p, y) * nu_small * mass_[ti] / proj_push_.mass_of(f);
        pi_side.push_back(Half{rec.complex, std::move(y), pi});
      });
    }

    // link side: T'' inside E; Y'' covers E \ T'' plus any part of T''
    std::vector<Half> lam_side;
    for (const auto& rec : link_trees_) {
      bool sub = true;
      for (const Face& face : rec.complex.faces())
        if (!e.contains(face)) {
          sub = false;
          break;
        }
      if (!sub) continue;
      const Rational nu_link = measure::nu_mass(rec.complex);
      std::vector<Face> fixed;
      for (const Face& face : e.faces())
        if (!rec.complex.contains(face)) fixed.push_back(face);
      const std::vector<Face>& inner = rec.complex.faces();
      check_pow2_budget(inner.size(), budget, "CouplingLab: Y'' space exceeds budget");
      for_each_subset(inner.size(), [&](std::uint64_t mask) {
        std::vector<Face> ysel = fixed;
        for (std::size_t i = 0; i < inner.size(); ++i)
          if (mask & (std::uint64_t{1} << i)) ysel.push_back(inner[i]);
        Complex y(n - 1, k - 1, std::move(ysel));
        const Rational lam =
            lm_mass(n - 1, k - 1, p, y) * nu_link * mass_[ti] / link_push_.mass_of(e);
        lam_side.push_back(Half{rec.complex, std::move(y), lam});
      });
    }

    // cross product: joint = pi * lambda / nu(T)
    std::vector<Atom> crossed;
    crossed.reserve(pi_side.size() * lam_side.size());
    for (const Half& pa : pi_side)
      for (const Half& la : lam_side)
        crossed.push_back(Atom{pa.tree, pa.binom, la.tree, la.binom, pa.density, la.density,
                               pa.density * la.density / mass_[ti]});
    support_[ti] = std::move(crossed);
  }
}

Rational CouplingLab::nu_of(const Complex& t) const { return measure::nu_mass(t); }

Rational CouplingLab::pi_density(const Complex& t, const Complex& t_small,
                                 const Complex& y_small) const {
  const Rational nu_t = nu_of(t);
  if (nu_t == 0) return 0;
  const Complex f = proj(n_, t);
  if (face_difference(t_small, y_small) != f) return 0;
  const Rational denom = proj_push_.mass_of(f);
  if (denom == 0) return 0;
  return lm_mass(n_ - 1, k_, Rational(1, n_), y_small) * nu_of(t_small) * nu_t / denom;
}

Rational CouplingLab::lambda_density(const Complex& t, const Complex& t_link,
                                     const Complex& y_link) const {
  const Rational nu_t = nu_of(t);
  if (nu_t == 0) return 0;
  const Complex e = link(n_, t);
  if (face_union(t_link, y_link) != e) return 0;
  const Rational denom = link_push_.mass_of(e);
  if (denom == 0) return 0;
  return lm_mass(n_ - 1, k_ - 1, Rational(1, n_), y_link) * nu_of(t_link) * nu_t / denom;
}

CouplingLab::Report CouplingLab::verify() const {
  Report rep;
  const Rational p(1, n_);

  const LawTable nu_top = nu_law(n_, k_);
  const LawTable nu_small = nu_law(n_ - 1, k_);
  const LawTable nu_link = nu_law(n_ - 1, k_ - 1);
  const LawTable mu_small = lm_law(n_ - 1, k_, p);
  const LawTable mu_link = lm_law(n_ - 1, k_ - 1, p);

  // pi marginals: project the joint support down to (T, T', Y')
  {
    LawTable t_marg, ts_marg, ys_marg;
    std::map<std::pair<Complex, Complex>, Rational> pair_marg;
    for (std::size_t ti = 0; ti < trees_.size(); ++ti) {
      std::map<std::pair<Complex, Complex>, Rational> seen;
      for (const Atom& a : support_[ti]) seen[{a.t_small, a.y_small}] = a.pi;
      for (const auto& [key, pi] : seen) {
        t_marg.add(trees_[ti].complex, pi);
        ts_marg.add(key.first, pi);
        ys_marg.add(key.second, pi);
        pair_marg[key] += pi;
      }
    }
    t_marg.finalize();
    ts_marg.finalize();
    ys_marg.finalize();
    rep.pi_marginals_ok = (t_marg == nu_top) && (ts_marg == nu_small) && (ys_marg == mu_small);
    rep.pairwise_independence_ok = true;
    for (const auto& [key, mass] : pair_marg)
      if (mass != nu_small.mass_of(key.first) * mu_small.mass_of(key.second))
        rep.pairwise_independence_ok = false;
  }

  // lambda marginals
  {
    LawTable t_marg, tl_marg, yl_marg;
    std::map<std::pair<Complex, Complex>, Rational> pair_marg;
    for (std::size_t ti = 0; ti < trees_.size(); ++ti) {
      std::map<std::pair<Complex, Complex>, Rational> seen;
      for (const Atom& a : support_[ti]) seen[{a.t_link, a.y_link}] = a.lambda;
      for (const auto& [key, lam] : seen) {
        t_marg.add(trees_[ti].complex, lam);
        tl_marg.add(key.first, lam);
        yl_marg.add(key.second, lam);
        pair_marg[key] += lam;
      }
    }
    t_marg.finalize();
    tl_marg.finalize();
    yl_marg.finalize();
    rep.lambda_marginals_ok =
        (t_marg == nu_top) && (tl_marg == nu_link) && (yl_marg == mu_link);
    for (const auto& [key, mass] : pair_marg)
      if (mass != nu_link.mass_of(key.first) * mu_link.mass_of(key.second))
        rep.pairwise_independence_ok = false;
  }

  // joint density: total mass, all five marginals, the a.s. union event,
  // conditional independence given T
  Rational total = 0;
  LawTable jt, jts, jtl, jys, jyl;
  rep.support_event_ok = true;
  rep.conditional_independence_ok = true;
  for (std::size_t ti = 0; ti < trees_.size(); ++ti) {
    const Complex& t = trees_[ti].complex;
    Rational pi_sum = 0, lam_sum = 0;
    std::map<std::pair<Complex, Complex>, Rational> seen_pi, seen_lam;
    for (const Atom& a : support_[ti]) {
      total += a.joint;
      jt.add(t, a.joint);
      jts.add(a.t_small, a.joint);
      jtl.add(a.t_link, a.joint);
      jys.add(a.y_small, a.joint);
      jyl.add(a.y_link, a.joint);
      if (trees::phi_inverse(face_difference(a.t_small, a.y_small),
                             face_union(a.t_link, a.y_link)) != t)
        rep.support_event_ok = false;
      seen_pi[{a.t_small, a.y_small}] = a.pi;
      seen_lam[{a.t_link, a.y_link}] = a.lambda;
      // factorized conditional: joint/nu == (pi/nu)(lambda/nu)
      if (a.joint * mass_[ti] != a.pi * a.lambda) rep.conditional_independence_ok = false;
    }
    for (const auto& [key, pi] : seen_pi) pi_sum += pi;
    for (const auto& [key, lam] : seen_lam) lam_sum += lam;
    // both conditionals are proper distributions given T
    if (pi_sum != mass_[ti] || lam_sum != mass_[ti]) rep.conditional_independence_ok = false;
  }
  rep.joint_sums_to_one = (total == 1);
  jt.finalize();
  jts.finalize();
  jtl.finalize();
  jys.finalize();
  jyl.finalize();
  rep.joint_marginals_ok = (jt == nu_top) && (jts == nu_small) && (jtl == nu_link) &&
                           (jys == mu_small) && (jyl == mu_link);
  return rep;
}

SplitReport split_identity_check(int n, int k, double budget) {
  SplitReport rep;
  const std::vector<Face> kfaces = all_faces(n, k);
  const std::vector<Face> km1faces = all_faces(n, k - 1);
  const std::size_t f_size = static_cast<std::size_t>(binomial(n - 1, k));
  const std::size_t e_size = static_cast<std::size_t>(binomial(n - 1, k - 1));
  const Integer pair_count = binomial(static_cast<long>(kfaces.size()),
                                      static_cast<long>(f_size)) *
                             binomial(static_cast<long>(km1faces.size()),
                                      static_cast<long>(e_size));
  if (Rational(pair_count) > Rational(budget))
    throw budget_error("split_identity_check: pair space exceeds budget",
                       static_cast<double>(pair_count), budget);

  rep.set_identity_ok = true;
  rep.torsion_identity_ok = true;
  for_each_combination(kfaces.size(), f_size, [&](const std::vector<std::size_t>& fi) {
    std::vector<Face> ff;
    ff.reserve(fi.size());
    for (std::size_t i : fi) ff.push_back(kfaces[i]);
    const Complex f(n, k, ff);
    const bool f_tree = trees::is_tree(f);
    for_each_combination(km1faces.size(), e_size, [&](const std::vector<std::size_t>& ei) {
      std::vector<Face> ee;
      ee.reserve(ei.size());
      for (std::size_t i : ei) ee.push_back(km1faces[i]);
      const Complex e(n, k - 1, ee);
      ++rep.pairs_checked;
      const bool rooted = trees::is_rooted_forest({f, e}).verdict;
      const bool product = f_tree && trees::is_tree(e);
      if (rooted != product) rep.set_identity_ok = false;
      if (rooted) {
        const Integer rel = homology::relative_homology(f, e, k - 1).torsion_order;
        const Integer lhs = homology::reduced_homology(f, k - 1).torsion_order;
        const Integer rhs = homology::reduced_homology(e, k - 2).torsion_order;
        if (rel != lhs * rhs) rep.torsion_identity_ok = false;
      }
    });
  });
  return rep;
}

SplitReport split_torsion_spotcheck(int n, int k, std::size_t samples, std::uint64_t seed,
                                    double budget) {
  SplitReport rep;
  rep.set_identity_ok = true;  // not exercised on the sampled route
  const auto ts = trees::enumerate_trees(n, k, budget);
  const auto tps = trees::enumerate_trees(n, k - 1, budget);
  Rng rng(seed);
  rep.torsion_identity_ok = true;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto& t = ts[rng.below(ts.size())].complex;
    const auto& tp = tps[rng.below(tps.size())].complex;
    ++rep.pairs_checked;
    const Integer rel = homology::relative_homology(t, tp, k - 1).torsion_order;
    const Integer lhs = homology::reduced_homology(t, k - 1).torsion_order;
    const Integer rhs = homology::reduced_homology(tp, k - 2).torsion_order;
    if (rel != lhs * rhs) rep.torsion_identity_ok = false;
  }
  return rep;
}

bool newdef_check(int n, int k, double budget) {
  const std::vector<Face> layer = all_faces(n - 1, k - 1);
  const Integer denom = int_pow(Integer(n), static_cast<unsigned long>(binomial(n - 2, k)));
  bool ok = true;
  trees::enumerate_trees(n, k, budget, [&](const Complex& t, const Integer&) {
    if (!ok) return;
    auto [f, e] = trees::phi(t);
    std::vector<Face> ebar;
    for (const Face& face : layer)
      if (!e.contains(face)) ebar.push_back(face);
    const Integer det = determinant(boundary_submatrix(ebar, f.faces()));
    const auto rel = homology::relative_homology(f, e, k - 1);
    const Rational mass = measure::nu_mass(t);
    ok = mass == Rational(det * det, denom) &&
         mass == Rational(rel.torsion_order * rel.torsion_order, denom) && rel.betti == 0;
  });
  return ok;
}

ProductReport split_product_check(int n, int k, double budget) {
  ProductReport rep;
  rep.ok = true;
  const Rational factor = rat_pow(Rational(n - 1, n),
                                  static_cast<std::size_t>(binomial(n - 2, k)));
  trees::enumerate_trees(n, k, budget, [&](const Complex& t, const Integer&) {
    const auto [f, e] = trees::phi(t);
    if (!trees::is_tree(f) || !trees::is_tree(e)) return;  // hypothesis gate
    ++rep.qualifying;
    const Rational lhs = measure::nu_mass(t);
    const Rational rhs = measure::nu_mass(f) * measure::nu_mass(e) * factor;
    if (lhs != rhs) rep.ok = false;
  });
  return rep;
}

}  // namespace hypertrees::coupling
