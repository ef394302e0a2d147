#include "hypertrees/sampler.hpp"

#include <Eigen/Dense>
#include <stdexcept>

#include "hypertrees/errors.hpp"
#include "hypertrees/measure.hpp"
#include "hypertrees/parallel.hpp"

namespace hypertrees::measure {

std::string method_name(SampleMethod m) {
  switch (m) {
    case SampleMethod::exact: return "exact";
    case SampleMethod::floating: return "float";
    case SampleMethod::ust: return "ust";
  }
  return "?";
}

SampleMethod method_from_name(const std::string& name) {
  if (name == "exact") return SampleMethod::exact;
  if (name == "float") return SampleMethod::floating;
  if (name == "ust") return SampleMethod::ust;
  throw std::invalid_argument("unknown sample method: " + name);
}

ExactChainSampler::ExactChainSampler(int n, int k) : n_(n), k_(k) {
  Kernel p = kernel_P(n, k);
  faces_ = std::move(p.faces);
  kernel_ = std::move(p.matrix);
}

Rational ExactChainSampler::current_prob() const {
  if (done()) throw std::logic_error("sampler already finished");
  return kernel_.at(0, 0);
}

void ExactChainSampler::step(bool include) {
  const Rational p = current_prob();
  trajectory_ *= include ? p : Rational(1) - p;
  if (include) chosen_.push_back(faces_[offset_]);
  kernel_ = schur_condition(kernel_, 0, include);
  ++offset_;
}

Complex ExactChainSampler::result() const {
  if (!done()) throw std::logic_error("sampler not finished");
  return Complex(n_, k_, chosen_);
}

std::vector<std::pair<int, int>> wilson_ust(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("wilson_ust: n must be positive");
  std::vector<bool> in_tree(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> succ(static_cast<std::size_t>(n) + 1, 0);
  in_tree[1] = true;  // root
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (int start = 2; start <= n; ++start) {
    if (in_tree[static_cast<std::size_t>(start)]) continue;
    int cur = start;
    while (!in_tree[static_cast<std::size_t>(cur)]) {
      // uniform neighbor on K_n: any vertex but the current one
      int nxt = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1))) + 1;
      if (nxt >= cur) ++nxt;
      succ[static_cast<std::size_t>(cur)] = nxt;
      cur = nxt;
    }
    cur = start;  // retrace the loop-erased path
    while (!in_tree[static_cast<std::size_t>(cur)]) {
      in_tree[static_cast<std::size_t>(cur)] = true;
      const int nxt = succ[static_cast<std::size_t>(cur)];
      edges.emplace_back(std::min(cur, nxt), std::max(cur, nxt));
      cur = nxt;
    }
  }
  return edges;
}

namespace {

Complex sample_exact(int n, int k, Rng& rng) {
  ExactChainSampler chain(n, k);
  while (!chain.done()) chain.step(bernoulli_exact(rng, chain.current_prob()));
  return chain.result();
}

Complex sample_float(int n, int k, Rng& rng) {
  const Kernel p = kernel_P(n, k);
  const std::size_t m = p.matrix.rows();
  Eigen::MatrixXd kmat(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      kmat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          static_cast<double>(p.matrix.numerator().at(i, j)) * inv_n;

  constexpr double kTol = 1e-8;
  std::vector<Face> chosen;
  // active block is kmat.bottomRightCorner(live, live); face t has local index 0
  for (std::size_t t = 0; t < m; ++t) {
    const Eigen::Index live = static_cast<Eigen::Index>(m - t);
    auto block = kmat.bottomRightCorner(live, live);
    const double prob = block(0, 0);
    if (prob < -kTol || prob > 1.0 + kTol)
      throw convergence_error("float sampler: conditional probability out of range", prob);
    const bool include = rng.next_double() < std::min(1.0, std::max(0.0, prob));
    const double pivot = include ? prob : prob - 1.0;
    if (include) chosen.push_back(p.faces[t]);
    if (live == 1) break;
    auto rest = kmat.bottomRightCorner(live - 1, live - 1);
    if (pivot == 0.0)
      throw convergence_error("float sampler: degenerate pivot", pivot);
    rest -= (block.col(0).tail(live - 1) * block.row(0).tail(live - 1)) / pivot;
    rest = ((rest + rest.transpose()) * 0.5).eval();  // damp asymmetry drift
  }
  return Complex(n, k, std::move(chosen));
}

}  // namespace

SampleRecord sample(int n, int k, std::uint64_t seed, std::uint64_t draw_index,
                    SampleMethod method, const SampleBudget& budget) {
  const Integer nfaces = binomial(n, k + 1);
  Rng rng(seed, draw_index);
  Complex t(n, k, {});
  switch (method) {
    case SampleMethod::exact:
      if (nfaces > Integer(budget.exact_max_faces))
        throw budget_error("exact sampler: too many faces", static_cast<double>(nfaces),
                           static_cast<double>(budget.exact_max_faces));
      t = sample_exact(n, k, rng);
      break;
    case SampleMethod::floating:
      if (nfaces > Integer(budget.float_max_faces))
        throw budget_error("float sampler: too many faces", static_cast<double>(nfaces),
                           static_cast<double>(budget.float_max_faces));
      t = sample_float(n, k, rng);
      break;
    case SampleMethod::ust: {
      if (k != 1) throw std::invalid_argument("ust method requires k = 1");
      std::vector<Face> faces;
      for (auto [u, v] : wilson_ust(n, rng)) faces.push_back(Face({u, v}));
      t = Complex(n, 1, std::move(faces));
      break;
    }
  }
  if (!trees::is_tree(t))
    throw std::logic_error("sampler postcondition violated: draw is not a hypertree");

  SampleRecord rec;
  rec.torsion = (method == SampleMethod::ust) ? Integer(1) : trees::det_torsion(t);
  rec.complex = std::move(t);
  rec.seed = seed;
  rec.draw_index = draw_index;
  rec.method = method;
  return rec;
}

std::vector<SampleRecord> sample_many(int n, int k, std::uint64_t seed, std::size_t count,
                                      SampleMethod method, const SampleBudget& budget) {
  std::vector<SampleRecord> out(count);
  parallel_for(count, [&](std::size_t i) {
    out[i] = sample(n, k, seed, static_cast<std::uint64_t>(i), method, budget);
  });
  return out;
}

}  // namespace hypertrees::measure
