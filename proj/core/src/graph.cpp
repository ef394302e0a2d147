#include "hypertrees/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "hypertrees/sampler.hpp"

namespace hypertrees::spectral {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
  std::vector<std::pair<int, int>> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    if (u < 1 || v < 1 || u > n || v > n) throw std::invalid_argument("Graph: vertex out of range");
    es.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  for (auto [u, v] : es) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  edge_count_ = es.size();
}

int Graph::min_degree() const {
  int m = n_ > 0 ? degree(1) : 0;
  for (int v = 2; v <= n_; ++v) m = std::min(m, degree(v));
  return m;
}

double Graph::avg_degree() const {
  if (n_ == 0) return 0.0;
  return 2.0 * static_cast<double>(edge_count_) / static_cast<double>(n_);
}

std::pair<std::vector<int>, int> Graph::components() const {
  std::vector<int> comp(static_cast<std::size_t>(n_) + 1, 0);
  int count = 0;
  std::vector<int> stack;
  for (int s = 1; s <= n_; ++s) {
    if (comp[static_cast<std::size_t>(s)] != 0) continue;
    ++count;
    stack.push_back(s);
    comp[static_cast<std::size_t>(s)] = count;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : neighbors(v)) {
        if (comp[static_cast<std::size_t>(u)] == 0) {
          comp[static_cast<std::size_t>(u)] = count;
          stack.push_back(u);
        }
      }
    }
  }
  return {std::move(comp), count};
}

bool Graph::connected() const { return n_ <= 1 || components().second == 1; }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 1; u <= n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph er_baseline(int n, const Rational& p, std::uint64_t seed) {
  if (p < 0 || p > 1) throw std::invalid_argument("er_baseline: p outside [0, 1]");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (bernoulli_exact(rng, p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Rational link_union_er_prob(int n, int k, int m) {
  // p = 1 - (1 - (k-1)/(n+k-1))^m = 1 - (n/(n+k-1))^m
  Rational keep(n, n + k - 1);
  Rational acc = 1;
  for (int i = 0; i < m; ++i) acc *= keep;
  return Rational(1) - acc;
}

Rational link_union_edge_prob(int n, int k, int m) {
  Rational not_er = Rational(1) - link_union_er_prob(n, k, m);
  Rational keep(n - 2, n);  // a fixed edge misses one UST with prob 1 - 2/n
  Rational acc = 1;
  for (int i = 0; i < m; ++i) acc *= keep;
  return Rational(1) - not_er * acc;
}

Graph sample_link_union(int n, int k, int m, std::uint64_t seed) {
  if (n < 3 || m < 1 || k < 2)
    throw std::invalid_argument("sample_link_union: need n >= 3, m >= 1, k >= 2");
  std::vector<std::pair<int, int>> edges;
  // stream 0 drives the binomial part, streams 1..m the spanning trees
  const Rational p = link_union_er_prob(n, k, m);
  {
    Rng rng(seed, 0);
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (bernoulli_exact(rng, p)) edges.emplace_back(u, v);
  }
  for (int i = 1; i <= m; ++i) {
    Rng rng(seed, static_cast<std::uint64_t>(i));
    auto tree = measure::wilson_ust(n, rng);
    edges.insert(edges.end(), tree.begin(), tree.end());
  }
  return Graph(n, edges);
}

}  // namespace hypertrees::spectral
