#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hypertrees/numeric.hpp"
#include "hypertrees/rng.hpp"

namespace hypertrees::spectral {

/// Simple undirected graph on vertices 1..n, adjacency-list backed.
class Graph {
 public:
  explicit Graph(int n = 0);
  Graph(int n, std::span<const std::pair<int, int>> edges);

  int n() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  int min_degree() const;
  double avg_degree() const;
  bool connected() const;
  /// Component id per vertex (1-indexed; slot 0 unused) and count.
  std::pair<std::vector<int>, int> components() const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  int n_;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<int>> adj_;
};

/// Erdos-Renyi binomial graph with an exact rational edge probability.
Graph er_baseline(int n, const Rational& p, std::uint64_t seed);

/// The link-union graph L_m^{k,k-1}(n): m independent uniform spanning
/// trees of K_n superimposed on one binomial graph Y(n, p) with
/// p = 1 - (1 - (k-1)/(n+k-1))^m. By the iterated link law this is the
/// law of the (k-2)-simplex link of a union of m independent
/// (n+k-1, k)-hypertrees, which is what makes n ~ 1000 reachable.
Graph sample_link_union(int n, int k, int m, std::uint64_t seed);

/// The binomial-part probability p above, exact.
Rational link_union_er_prob(int n, int k, int m);
/// The overall edge marginal q = 1 - (1-p)(1 - 2/n)^m, exact.
Rational link_union_edge_prob(int n, int k, int m);

}  // namespace hypertrees::spectral
