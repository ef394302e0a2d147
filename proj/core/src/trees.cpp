#include "hypertrees/trees.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "hypertrees/errors.hpp"
#include "hypertrees/parallel.hpp"

namespace hypertrees::trees {

bool is_tree(const Complex& x) {
  const Integer want = binomial(x.n() - 1, x.k());
  if (Integer(x.face_count()) != want) return false;
  IntMatrix top = boundary_submatrix(all_faces(x.n(), x.k() - 1), x.faces());
  return rank(std::move(top)) == x.face_count();
}

RootedForestCheck is_rooted_forest(const RootedPair& pair) {
  const Complex& f = pair.forest;
  const Complex& r = pair.root;
  if (r.n() != f.n() || r.k() != f.k() - 1)
    throw std::invalid_argument("is_rooted_forest: root must be a (k-1)-complex on [n]");
  std::vector<Face> rbar;
  for (const Face& s : all_faces(f.n(), f.k() - 1))
    if (!r.contains(s)) rbar.push_back(s);

  RootedForestCheck out;
  IntMatrix block = boundary_submatrix(rbar, f.faces());
  if (rbar.size() == f.face_count()) {
    Integer det = determinant(std::move(block));
    out.verdict = det != 0;
    if (out.verdict) out.torsion = abs(det);
    return out;
  }
  // non-square: the count condition fails, so both Betti conditions must
  // hold for a two-of-three verdict, which a rank bound rules out
  const std::size_t rk = rank(std::move(block));
  out.verdict = (rk == rbar.size()) && (rk == f.face_count());
  return out;
}

bool is_relative_forest(const Complex& x, const Complex& y, const Complex& ambient) {
  if (ambient.n() != x.n() || ambient.k() != x.k())
    throw std::invalid_argument("is_relative_forest: ambient must match (n, k)");
  for (const Face& f : x.faces())
    if (!ambient.contains(f))
      throw std::invalid_argument("is_relative_forest: X not contained in ambient");

  const int k = x.k();
  const long y_top = (y.k() == k) ? static_cast<long>(y.face_count()) : 0;

  std::vector<Face> rows = homology::relative_faces(ambient, y, k - 1);
  std::vector<Face> cols = homology::relative_faces(ambient, y, k);
  const long rank_ambient =
      static_cast<long>(rank(boundary_submatrix(rows, cols)));

  const bool c_count = static_cast<long>(x.face_count()) - y_top == rank_ambient;
  const bool c_lower = homology::relative_homology(x, y, k - 1).betti ==
                       homology::relative_homology(ambient, y, k - 1).betti;
  const bool c_top = homology::relative_homology(x, y, k).betti == 0;
  return (c_count ? 1 : 0) + (c_lower ? 1 : 0) + (c_top ? 1 : 0) >= 2;
}

std::pair<Complex, Complex> phi(const Complex& x) {
  if (x.k() < 1) throw std::invalid_argument("phi: requires k >= 1");
  return {proj(x.n(), x), link(x.n(), x)};
}

Complex phi_inverse(const Complex& f, const Complex& r) {
  if (r.n() != f.n() || r.k() != f.k() - 1)
    throw std::invalid_argument("phi_inverse: expected (F, R) in C_{n-1,k} x C_{n-1,k-1}");
  const int n = f.n() + 1;
  std::vector<Face> faces = f.faces();
  faces.reserve(faces.size() + r.face_count());
  for (const Face& s : r.faces()) faces.push_back(s.inserted(n));
  return Complex(n, f.k(), std::move(faces));
}

namespace {

// Incremental fraction-free elimination over a fixed row set. Columns are
// adopted one at a time; each adoption records the transformed column and
// its pivot so later columns can be reduced against the prefix. The last
// pivot of a full square selection is +-det of the selected block.
class ColumnEliminator {
 public:
  explicit ColumnEliminator(const IntMatrix& m) : rows_(m.rows()) {
    cols_.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::vector<Integer> c(rows_);
      for (std::size_t i = 0; i < rows_; ++i) c[i] = m.at(i, j);
      cols_.push_back(std::move(c));
    }
    frozen_.assign(rows_, npos);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  std::size_t depth() const { return steps_.size(); }
  const Integer& last_pivot() const { return steps_.back().pivot; }

  /// Reduce column j against the adopted prefix; returns false when the
  /// column is dependent (then the state is unchanged).
  bool try_push(std::size_t j) {
    std::vector<Integer> v = cols_[j];
    Integer prev = 1;
    for (std::size_t s = 0; s < steps_.size(); ++s) {
      const Step& st = steps_[s];
      const Integer coeff = v[st.pivot_row];
      for (std::size_t i = 0; i < rows_; ++i) {
        if (frozen_[i] <= s) continue;
        v[i] = (st.pivot * v[i] - coeff * st.u[i]) / prev;
      }
      prev = st.pivot;
    }
    std::size_t pr = npos;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (frozen_[i] == npos && v[i] != 0) {
        pr = i;
        break;
      }
    }
    if (pr == npos) return false;
    frozen_[pr] = steps_.size();
    Integer piv = v[pr];
    steps_.push_back(Step{std::move(v), pr, std::move(piv)});
    return true;
  }

  void pop() {
    frozen_[steps_.back().pivot_row] = npos;
    steps_.pop_back();
  }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  struct Step {
    std::vector<Integer> u;
    std::size_t pivot_row;
    Integer pivot;
  };
  std::size_t rows_;
  std::vector<std::vector<Integer>> cols_;
  std::vector<std::size_t> frozen_;  // step index at which the row froze
  std::vector<Step> steps_;
};

struct EnumSetup {
  IntMatrix hat;
  std::vector<Face> col_faces;
  std::size_t target;
};

EnumSetup enum_setup(int n, int k, double budget) {
  if (k < 0 || k > n - 1) throw std::invalid_argument("enumerate_trees: k out of range");
  LabeledIntMatrix hat = hat_boundary(n, k);
  EnumSetup s{std::move(hat.entries), std::move(hat.cols),
              static_cast<std::size_t>(binomial(n - 1, k))};
  const Integer subsets = binomial(static_cast<long>(s.col_faces.size()),
                                   static_cast<long>(s.target));
  if (Rational(subsets) > Rational(budget))
    throw budget_error("enumerate_trees: subset space exceeds budget",
                       static_cast<double>(subsets), budget);
  return s;
}

void dfs(ColumnEliminator& elim, const EnumSetup& setup, std::vector<std::size_t>& chosen,
         std::size_t next_col, int n, int k,
         const std::function<void(const Complex&, const Integer&)>& fn) {
  if (chosen.size() == setup.target) {
    std::vector<Face> faces;
    faces.reserve(chosen.size());
    for (std::size_t c : chosen) faces.push_back(setup.col_faces[c]);
    fn(Complex(n, k, std::move(faces)), abs(elim.last_pivot()));
    return;
  }
  const std::size_t need = setup.target - chosen.size();
  for (std::size_t c = next_col; c + need <= elim.cols(); ++c) {
    if (!elim.try_push(c)) continue;
    chosen.push_back(c);
    dfs(elim, setup, chosen, c + 1, n, k, fn);
    chosen.pop_back();
    elim.pop();
  }
}

}  // namespace

void enumerate_trees(int n, int k, double budget,
                     const std::function<void(const Complex&, const Integer&)>& fn) {
  EnumSetup setup = enum_setup(n, k, budget);
  if (setup.target == 0) {
    fn(Complex(n, k, {}), 1);
    return;
  }
  const std::size_t first_max = setup.col_faces.size() - setup.target;

  if (thread_budget() <= 1 || first_max == 0) {
    ColumnEliminator elim(setup.hat);
    std::vector<std::size_t> chosen;
    dfs(elim, setup, chosen, 0, n, k, fn);
    return;
  }

  // Partition the subset space by the first chosen column; partitions run
  // concurrently and merge in colex order.
  std::vector<std::vector<TreeRecord>> parts(first_max + 1);
  parallel_for(first_max + 1, [&](std::size_t c0) {
    ColumnEliminator elim(setup.hat);
    std::vector<std::size_t> chosen;
    if (!elim.try_push(c0)) return;
    chosen.push_back(c0);
    dfs(elim, setup, chosen, c0 + 1, n, k,
        [&](const Complex& t, const Integer& tor) {
          parts[c0].push_back(TreeRecord{t, tor});
        });
  });
  for (const auto& part : parts)
    for (const TreeRecord& rec : part) fn(rec.complex, rec.torsion);
}

std::vector<TreeRecord> enumerate_trees(int n, int k, double budget) {
  std::vector<TreeRecord> out;
  enumerate_trees(n, k, budget,
                  [&](const Complex& t, const Integer& tor) { out.push_back({t, tor}); });
  return out;
}

Integer det_torsion(const Complex& t) {
  const int n = t.n(), k = t.k();
  if (Integer(t.face_count()) != binomial(n - 1, k)) return 0;
  LabeledIntMatrix hat = hat_boundary(n, k);
  std::vector<std::size_t> cols;
  cols.reserve(t.face_count());
  for (const Face& f : t.faces()) cols.push_back(colex_rank(f));
  std::vector<std::size_t> rows(hat.rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return abs(determinant(hat.entries.submatrix(rows, cols)));
}

Integer snf_torsion(const Complex& t) {
  IntMatrix top = boundary_submatrix(all_faces(t.n(), t.k() - 1), t.faces());
  SNFResult snf = smith_normal_form(std::move(top));
  Integer order = 1;
  for (const Integer& d : snf.factors)
    if (d > 1) order *= d;
  return order;
}

namespace {

// All subsets of `faces` as complexes, by bitmask; only for small layers.
std::vector<Complex> all_subcomplexes(int n, int k, double budget) {
  const std::vector<Face> faces = all_faces(n, k);
  if (faces.size() >= 8 * sizeof(std::size_t) ||
      static_cast<double>(std::size_t{1} << faces.size()) > budget)
    throw budget_error("subset space exceeds budget",
                       faces.size() < 64 ? static_cast<double>(std::size_t{1} << faces.size())
                                         : std::numeric_limits<double>::infinity(),
                       budget);
  std::vector<Complex> out;
  out.reserve(std::size_t{1} << faces.size());
  for (std::size_t mask = 0; mask < (std::size_t{1} << faces.size()); ++mask) {
    std::vector<Face> sel;
    for (std::size_t i = 0; i < faces.size(); ++i)
      if (mask & (std::size_t{1} << i)) sel.push_back(faces[i]);
    out.emplace_back(n, k, std::move(sel));
  }
  return out;
}

}  // namespace

SubmainReport submain_check(int n, int k, double budget) {
  SubmainReport rep;
  std::vector<TreeRecord> ts = enumerate_trees(n, k, budget);
  rep.tree_count = ts.size();

  // brute-force the rooted forests of the reduced vertex set
  std::vector<Complex> fs = all_subcomplexes(n - 1, k, budget);
  std::vector<Complex> rs = all_subcomplexes(n - 1, k - 1, budget);
  std::vector<std::pair<Complex, Complex>> rooted;
  for (const Complex& f : fs)
    for (const Complex& r : rs)
      if (is_rooted_forest(RootedPair{f, r}).verdict) rooted.emplace_back(f, r);
  rep.rooted_forest_count = rooted.size();

  std::sort(rooted.begin(), rooted.end());
  std::vector<std::pair<Complex, Complex>> images;
  images.reserve(ts.size());
  rep.homology_match = true;
  for (const TreeRecord& rec : ts) {
    auto [f, r] = phi(rec.complex);
    if (phi_inverse(f, r) != rec.complex) {
      rep.bijective = false;
      return rep;
    }
    for (int j = -1; j <= k; ++j) {
      if (homology::reduced_homology(rec.complex, j) !=
          homology::relative_homology(f, r, j)) {
        rep.homology_match = false;
        break;
      }
    }
    images.emplace_back(std::move(f), std::move(r));
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  rep.bijective = (images.size() == ts.size()) && (images == rooted);
  return rep;
}

}  // namespace hypertrees::trees
