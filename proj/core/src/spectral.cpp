#include "hypertrees/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hypertrees/boundary.hpp"
#include "hypertrees/errors.hpp"
#include "hypertrees/parallel.hpp"
#include "hypertrees/rng.hpp"

namespace hypertrees::spectral {

namespace {

constexpr double kResidualTarget = 1e-10;
constexpr double kResidualCertificate = 1e-9;

// y = (Id - D^{-1/2} A D^{-1/2}) x through the adjacency lists
struct LaplacianOp {
  const Graph& g;
  std::vector<double> inv_sqrt_deg;  // 1-indexed

  explicit LaplacianOp(const Graph& graph) : g(graph) {
    inv_sqrt_deg.assign(static_cast<std::size_t>(g.n()) + 1, 0.0);
    for (int v = 1; v <= g.n(); ++v)
      inv_sqrt_deg[static_cast<std::size_t>(v)] =
          1.0 / std::sqrt(static_cast<double>(g.degree(v)));
  }

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const {
    Eigen::VectorXd y(g.n());
    for (int v = 1; v <= g.n(); ++v) {
      double s = 0.0;
      for (int u : g.neighbors(v)) s += x(u - 1) * inv_sqrt_deg[static_cast<std::size_t>(u)];
      y(v - 1) = x(v - 1) - inv_sqrt_deg[static_cast<std::size_t>(v)] * s;
    }
    return y;
  }
};

// rank over GF(p); entries of boundary blocks are tiny so overflow-free
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  const Integer pbig(p);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      Integer v = m.at(i, j) % pbig;
      if (v < 0) v += pbig;
      a[i][j] = v.convert_to<std::uint64_t>();
    }
  }
  auto mulmod = [p](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % p);
  };
  auto powmod = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return r;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    const std::uint64_t inv = powmod(a[r][c], p - 2);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = mulmod(a[r][j], inv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        std::uint64_t sub = mulmod(f, a[r][j]);
        a[i][j] = (a[i][j] + p - sub) % p;
      }
    }
    ++r;
  }
  return r;
}

std::size_t rank_via_primes(const IntMatrix& m) {
  return std::max(rank_mod_p(m, 2147483647ULL), rank_mod_p(m, 2147483629ULL));
}

}  // namespace

Eigen::MatrixXd normalized_laplacian(const Graph& g) {
  const int n = g.n();
  for (int v = 1; v <= n; ++v)
    if (g.degree(v) == 0)
      throw std::invalid_argument("normalized_laplacian: isolated vertex");
  Eigen::MatrixXd l = Eigen::MatrixXd::Identity(n, n);
  for (int u = 1; u <= n; ++u) {
    const double du = static_cast<double>(g.degree(u));
    for (int v : g.neighbors(u)) {
      const double dv = static_cast<double>(g.degree(v));
      l(u - 1, v - 1) = -1.0 / std::sqrt(du * dv);
    }
  }
  return l;
}

Eigen::VectorXd spectrum_dense(const Graph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(normalized_laplacian(g),
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

SpectralReport lambda2(const Graph& g) {
  const int n = g.n();
  if (n < 2) throw std::invalid_argument("lambda2: need at least two vertices");
  SpectralReport rep;
  rep.min_degree = g.min_degree();
  rep.avg_degree = g.avg_degree();
  auto [comp, ncomp] = g.components();
  rep.connected = (ncomp == 1);

  if (!rep.connected) {
    // 0 has multiplicity ncomp >= 2, so lambda2 = 0 exactly; certify with
    // the component indicator when the operator is defined everywhere
    rep.lambda2 = 0.0;
    rep.residual = 0.0;
    if (rep.min_degree > 0) {
      LaplacianOp op(g);
      Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
      for (int v = 1; v <= n; ++v)
        if (comp[static_cast<std::size_t>(v)] == 1)
          y(v - 1) = std::sqrt(static_cast<double>(g.degree(v)));
      y.normalize();
      rep.residual = op.apply(y).norm();
    }
    return rep;
  }

  LaplacianOp op(g);
  Eigen::VectorXd v1(n);
  for (int v = 1; v <= n; ++v) v1(v - 1) = std::sqrt(static_cast<double>(g.degree(v)));
  v1.normalize();

  Rng rng(0x9d2c5680u, static_cast<std::uint64_t>(n));
  Eigen::VectorXd q(n);
  for (int i = 0; i < n; ++i) q(i) = rng.next_double() - 0.5;
  q -= v1.dot(q) * v1;
  if (q.norm() < 1e-12) throw convergence_error("lambda2: degenerate start vector", 1.0);
  q.normalize();

  const int maxit = std::min(n - 1, 600);
  std::vector<Eigen::VectorXd> basis;
  basis.reserve(static_cast<std::size_t>(maxit));
  std::vector<double> alpha, beta;
  Eigen::VectorXd prev = Eigen::VectorXd::Zero(n);
  double last_residual = 1.0;

  for (int it = 1; it <= maxit; ++it) {
    basis.push_back(q);
    Eigen::VectorXd w = op.apply(q);
    const double a = q.dot(w);
    alpha.push_back(a);
    w -= a * q;
    if (!beta.empty()) w -= beta.back() * prev;
    for (int pass = 0; pass < 2; ++pass) {
      w -= v1.dot(w) * v1;
      for (const auto& b : basis) w -= b.dot(w) * b;
    }
    const double bnorm = w.norm();
    const bool exhausted = bnorm < 1e-13;

    const int m = static_cast<int>(alpha.size());
    if (exhausted || it % 5 == 0 || it == maxit || m >= n - 1) {
      Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
      for (int i = 0; i < m; ++i) {
        tri(i, i) = alpha[static_cast<std::size_t>(i)];
        if (i + 1 < m)
          tri(i, i + 1) = tri(i + 1, i) = beta[static_cast<std::size_t>(i)];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
      const Eigen::VectorXd s = es.eigenvectors().col(0);
      Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
      for (int i = 0; i < m; ++i) y += s(i) * basis[static_cast<std::size_t>(i)];
      y.normalize();
      const double theta = es.eigenvalues()(0);
      last_residual = (op.apply(y) - theta * y).norm();
      if (last_residual <= kResidualTarget || (exhausted && last_residual <= kResidualCertificate)) {
        rep.lambda2 = theta;
        rep.residual = last_residual;
        rep.iterations = it;
        return rep;
      }
      if (exhausted)
        throw convergence_error("lambda2: Krylov space exhausted before certificate",
                                last_residual);
    }
    prev = q;
    q = w / bnorm;
    beta.push_back(bnorm);
  }
  throw convergence_error("lambda2: iteration limit reached", last_residual);
}

bool is_pure(const Complex& x) {
  const Integer total = binomial(x.n(), x.k());
  std::vector<bool> covered(static_cast<std::size_t>(total), false);
  for (const Face& f : x.faces())
    for (std::size_t v = 0; v < f.size(); ++v) covered[colex_rank(f.erased(v))] = true;
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

double updown_gap(const Complex& x) {
  const int n = x.n(), k = x.k();
  if (k < 1) throw std::invalid_argument("updown_gap: need k >= 1");
  if (x.face_count() > 3000)
    throw budget_error("updown_gap: too many top faces",
                       static_cast<double>(x.face_count()), 3000.0);
  const std::vector<Face> rows = all_faces(n, k - 1);
  const IntMatrix d = boundary_submatrix(rows, x.faces());

  std::vector<double> weight(rows.size(), 0.0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    long deg = 0;
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (d.at(i, j) != 0) ++deg;
    if (deg == 0)
      throw std::invalid_argument("updown_gap: a codimension-1 face lies in no top face");
    weight[i] = static_cast<double>(deg);
  }

  const IntMatrix updown = d * d.transposed();
  const Eigen::Index nn = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd l(nn, nn);
  for (Eigen::Index i = 0; i < nn; ++i)
    for (Eigen::Index j = 0; j < nn; ++j)
      l(i, j) = static_cast<double>(updown.at(static_cast<std::size_t>(i),
                                              static_cast<std::size_t>(j))) /
                std::sqrt(weight[static_cast<std::size_t>(i)] *
                          weight[static_cast<std::size_t>(j)]);

  const std::size_t zero_count = rows.size() - rank_via_primes(d);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(l, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  if (zero_count >= rows.size())
    throw std::invalid_argument("updown_gap: operator has no nonzero spectrum");
  if (zero_count > 0 && ev(static_cast<Eigen::Index>(zero_count - 1)) > 1e-8)
    throw convergence_error("updown_gap: zero-space mismatch",
                            ev(static_cast<Eigen::Index>(zero_count - 1)));
  const double gap = ev(static_cast<Eigen::Index>(zero_count));
  if (gap < 1e-8)
    throw convergence_error("updown_gap: ambiguous smallest nonzero eigenvalue", gap);
  return gap;
}

Graph face_link_graph(const Complex& x, const Face& tau) {
  const int n = x.n();
  std::vector<int> label(static_cast<std::size_t>(n) + 1, 0);
  int next = 0;
  for (int v = 1; v <= n; ++v)
    if (!tau.contains(v)) label[static_cast<std::size_t>(v)] = ++next;

  std::vector<std::pair<int, int>> edges;
  for (const Face& f : x.faces()) {
    bool contains = true;
    for (int v : tau.vertices())
      if (!f.contains(v)) {
        contains = false;
        break;
      }
    if (!contains) continue;
    std::vector<int> rest;
    for (int v : f.vertices())
      if (!tau.contains(v)) rest.push_back(v);
    if (rest.size() != 2) continue;
    edges.emplace_back(label[static_cast<std::size_t>(rest[0])],
                       label[static_cast<std::size_t>(rest[1])]);
  }
  return Graph(next, edges);
}

GarlandReport garland_report(const Complex& x, bool compute_actual) {
  const int k = x.k();
  if (k < 2) throw std::invalid_argument("garland_report: requires k >= 2");
  if (!is_pure(x)) throw std::invalid_argument("garland_report: complex is not pure");

  GarlandReport rep;
  double min_gap = 2.0;
  for (const Face& tau : all_faces(x.n(), k - 2)) {
    GarlandLinkRow row;
    row.tau = tau;
    const Graph link = face_link_graph(x, tau);
    if (link.min_degree() == 0) {
      row.isolated = true;
      row.connected = false;
      row.lambda0 = 0.0;
      rep.vacuous = true;
    } else {
      const SpectralReport sr = lambda2(link);
      row.connected = sr.connected;
      row.lambda0 = sr.lambda2;
    }
    min_gap = std::min(min_gap, row.lambda0);
    rep.links.push_back(std::move(row));
  }
  rep.eps_star = 1.0 - min_gap;
  rep.bound = 1.0 - k * rep.eps_star;
  if (rep.bound <= 0.0) rep.vacuous = true;

  if (compute_actual && x.face_count() <= 3000) rep.actual_gap = updown_gap(x);
  rep.consistent =
      rep.vacuous || !rep.actual_gap.has_value() || *rep.actual_gap >= rep.bound - 1e-8;
  return rep;
}

ZukReport zuk_report(const Complex& x) {
  if (x.k() != 2) throw std::invalid_argument("zuk_report: requires a pure 2-complex");
  if (!is_pure(x)) throw std::invalid_argument("zuk_report: complex is not pure");
  ZukReport rep;
  rep.verdict = true;
  for (int v = 1; v <= x.n(); ++v) {
    ZukRow row;
    row.vertex = v;
    const Graph link = face_link_graph(x, Face({v}));
    if (link.min_degree() == 0) {
      row.connected = false;
      row.lambda0 = 0.0;
    } else {
      const SpectralReport sr = lambda2(link);
      row.connected = sr.connected;
      row.lambda0 = sr.lambda2;
    }
    if (!row.connected || row.lambda0 <= 0.5) rep.verdict = false;
    rep.rows.push_back(row);
  }
  return rep;
}

std::vector<SweepRow> sweep(const SweepConfig& config) {
  struct Task {
    int n, m;
    Rational p;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  std::uint64_t counter = 0;
  if (config.generator == SweepConfig::Generator::link_union) {
    for (int n : config.n_values)
      for (int m : config.m_values)
        for (int run = 0; run < config.runs; ++run)
          tasks.push_back(Task{n, m, Rational(0), config.seed + counter++});
  } else {
    for (int n : config.n_values)
      for (const Rational& p : config.p_values)
        for (int run = 0; run < config.runs; ++run)
          tasks.push_back(Task{n, 0, p, config.seed + counter++});
  }

  std::vector<SweepRow> rows(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    const Task& t = tasks[i];
    Graph g = (config.generator == SweepConfig::Generator::link_union)
                  ? sample_link_union(t.n, config.k, t.m, t.seed)
                  : er_baseline(t.n, t.p, t.seed);
    SweepRow row;
    row.n = t.n;
    row.k = config.k;
    row.m = t.m;
    row.p = static_cast<double>(t.p);
    row.seed = t.seed;
    row.min_deg = g.min_degree();
    row.avg_deg = g.avg_degree();
    if (g.connected()) {
      const SpectralReport sr = lambda2(g);
      row.lambda2 = sr.lambda2;
      row.connected = true;
      row.residual = sr.residual;
    } else {
      row.lambda2 = 0.0;
      row.connected = false;
      row.residual = 0.0;
    }
    rows[i] = row;
  });
  return rows;
}

}  // namespace hypertrees::spectral
