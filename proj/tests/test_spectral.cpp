#include <doctest.h>

#include <cmath>

#include "hypertrees/errors.hpp"
#include "hypertrees/sampler.hpp"
#include "hypertrees/spectral.hpp"

using namespace hypertrees;
using namespace hypertrees::spectral;

namespace {

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u < n; ++u) edges.emplace_back(u, u + 1);
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("lambda2 closed forms") {
  CHECK(lambda2(complete_graph(4)).lambda2 == doctest::Approx(4.0 / 3.0).epsilon(1e-10));
  CHECK(lambda2(complete_graph(10)).lambda2 == doctest::Approx(10.0 / 9.0).epsilon(1e-10));
  CHECK(lambda2(path_graph(3)).lambda2 == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("disconnected graphs take the zero pathway") {
  Graph two_edges(4, std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
  auto rep = lambda2(two_edges);
  CHECK_FALSE(rep.connected);
  CHECK(rep.lambda2 == 0.0);
  CHECK(rep.residual <= 1e-9);
}

TEST_CASE("isolated vertices break normalization") {
  Graph g(3, std::vector<std::pair<int, int>>{{1, 2}});
  CHECK_THROWS_AS(normalized_laplacian(g), std::invalid_argument);
}

TEST_CASE("lanczos agrees with the dense oracle") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    Graph g = er_baseline(60, Rational(1, 5), seed);
    if (!g.connected()) continue;
    const double dense = spectrum_dense(g)(1);
    const auto rep = lambda2(g);
    CHECK(std::fabs(rep.lambda2 - dense) < 1e-7);
    CHECK(rep.residual <= 1e-9);
  }
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    Graph g = sample_link_union(200, 2, 8, seed);
    const double dense = spectrum_dense(g)(1);
    const auto rep = lambda2(g);
    CHECK(std::fabs(rep.lambda2 - dense) < 1e-7);
  }
}

TEST_CASE("link union construction") {
  CHECK(link_union_edge_prob(10, 2, 1) == Rational(3, 11));
  CHECK(link_union_er_prob(10, 2, 1) == Rational(1, 11));
  CHECK_THROWS_AS(sample_link_union(10, 2, 0, 1), std::invalid_argument);

  Graph g = sample_link_union(30, 2, 3, 7);
  CHECK(g.connected());  // the union contains a spanning tree
  CHECK(g.min_degree() >= 1);

  // empirical edge frequency within 3 sigma of q over many draws
  const Rational q = link_union_edge_prob(20, 2, 4);
  const double qd = static_cast<double>(q);
  long hits = 0;
  const int draws = 400;
  const long pairs = 190;
  for (int i = 0; i < draws; ++i)
    hits += static_cast<long>(sample_link_union(20, 2, 4, 1000 + i).edge_count());
  const double total = static_cast<double>(draws * pairs);
  const double sigma = std::sqrt(total * qd * (1 - qd));
  CHECK(std::fabs(static_cast<double>(hits) - total * qd) < 3 * sigma);
}

TEST_CASE("er baseline") {
  Graph empty = er_baseline(8, Rational(0), 1);
  CHECK(empty.edge_count() == 0);
  auto rep = lambda2(empty);
  CHECK(rep.lambda2 == 0.0);
  CHECK_FALSE(rep.connected);
  Graph full = er_baseline(10, Rational(1), 1);
  CHECK(full.edge_count() == 45);
  CHECK(lambda2(full).lambda2 == doctest::Approx(10.0 / 9.0).epsilon(1e-10));
}

TEST_CASE("purity detection") {
  CHECK(is_pure(complete_complex(5, 2)));
  // one triangle on [4] leaves e.g. the edge {2,4} uncovered
  CHECK_FALSE(is_pure(Complex(4, 2, {make_face({1, 2, 3})})));
}

TEST_CASE("updown gap reduces to the graph gap at k=1") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    Rng rng(seed);
    auto edges = measure::wilson_ust(8, rng);
    std::vector<Face> faces;
    for (auto [u, v] : edges) faces.push_back(make_face({u, v}));
    // add a few extra edges so the spectrum is interesting
    Complex x = face_union(Complex(8, 1, faces),
                           Complex(8, 1, {make_face({1, 5}), make_face({2, 7})}));
    std::vector<std::pair<int, int>> gedges;
    for (const Face& f : x.faces()) gedges.emplace_back(f[0], f[1]);
    const double via_graph = lambda2(Graph(8, gedges)).lambda2;
    CHECK(updown_gap(x) == doctest::Approx(via_graph).epsilon(1e-9));
  }
}

TEST_CASE("garland bound holds on hypertree unions") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    std::vector<Face> faces;
    for (std::uint64_t i = 0; i < 3; ++i) {
      auto rec = measure::sample(12, 2, seed, i, measure::SampleMethod::floating);
      for (const Face& f : rec.complex.faces()) faces.push_back(f);
    }
    Complex x(12, 2, std::move(faces));
    if (!is_pure(x)) continue;
    auto rep = garland_report(x);
    REQUIRE(rep.actual_gap.has_value());
    CHECK(rep.consistent);
    if (!rep.vacuous) CHECK(*rep.actual_gap >= rep.bound - 1e-8);
  }
  CHECK_THROWS_AS(garland_report(complete_complex(4, 1)), std::invalid_argument);
}

TEST_CASE("zuk criterion table") {
  // the full 2-skeleton on [6]: every vertex link is K_5
  auto rep = zuk_report(complete_complex(6, 2));
  CHECK(rep.verdict);
  for (const auto& row : rep.rows)
    CHECK(row.lambda0 == doctest::Approx(5.0 / 4.0).epsilon(1e-9));

  // remove every triangle through {5,6}: their links lose a vertex
  std::vector<Face> faces;
  for (const Face& f : all_faces(6, 2))
    if (!(f.contains(5) && f.contains(6))) faces.push_back(f);
  auto rep2 = zuk_report(Complex(6, 2, faces));
  CHECK(rep2.verdict);  // links stay connected, gaps stay above 1/2
  CHECK_THROWS_AS(zuk_report(complete_complex(5, 1)), std::invalid_argument);
}

TEST_CASE("sweep grid emits deterministic rows") {
  SweepConfig cfg;
  cfg.n_values = {24, 30};
  cfg.m_values = {2, 4};
  cfg.runs = 2;
  cfg.seed = 5;
  auto rows = sweep(cfg);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0].n == 24);
  CHECK(rows[0].m == 2);
  auto again = sweep(cfg);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].lambda2 == again[i].lambda2);
    CHECK(rows[i].seed == again[i].seed);
  }
}
