#include <doctest.h>

#include <algorithm>

#include "hypertrees/homology.hpp"
#include "hypertrees/rng.hpp"
#include "hypertrees/trees.hpp"

using namespace hypertrees;
using homology::HomologySummary;

namespace {

Complex rp2_six_vertex() {
  std::vector<Face> faces;
  for (auto v : {std::vector<int>{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                 {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}})
    faces.push_back(make_face(v));
  return Complex(6, 2, std::move(faces));
}

}  // namespace

TEST_CASE("reduced homology of small complexes") {
  Complex tree(3, 1, {make_face({1, 2}), make_face({1, 3})});
  CHECK(homology::reduced_homology(tree, 0) == HomologySummary{0, 1});
  CHECK(homology::reduced_homology(tree, -1) == HomologySummary{0, 1});

  Complex cycle = complete_complex(3, 1);
  CHECK(homology::reduced_homology(cycle, 1) == HomologySummary{1, 1});
  CHECK(homology::reduced_homology(cycle, 0) == HomologySummary{0, 1});
}

TEST_CASE("the six-vertex projective plane has 2-torsion") {
  Complex rp2 = rp2_six_vertex();
  CHECK(homology::reduced_homology(rp2, 1) == HomologySummary{0, 2});
  CHECK(homology::reduced_homology(rp2, 2) == HomologySummary{0, 1});
  CHECK(trees::is_tree(rp2));
  CHECK(trees::det_torsion(rp2) == 2);
  CHECK(trees::snf_torsion(rp2) == 2);
}

TEST_CASE("relative homology against a vertex equals reduced homology") {
  Complex x(3, 1, {make_face({1, 2}), make_face({1, 3})});
  Complex pt(3, 0, {make_face({1})});
  for (int j = 0; j <= 1; ++j)
    CHECK(homology::relative_homology(x, pt, j) == homology::reduced_homology(x, j));
}

TEST_CASE("rooted pair determinant matches relative torsion") {
  // (F, R) with F = {12, 13}, R = {{1}}: the ABD determinant route
  Complex f(3, 1, {make_face({1, 2}), make_face({1, 3})});
  Complex r(3, 0, {make_face({1})});
  auto rel = homology::relative_homology(f, r, 0);
  CHECK(rel == HomologySummary{0, 1});
  auto check = trees::is_rooted_forest({f, r});
  CHECK(check.verdict);
  CHECK(*check.torsion == 1);
}

TEST_CASE("infinite relative homology is reported through betti") {
  // X = Y = a single triangle treated relatively: C_k empty, nothing left
  Complex x(4, 2, {make_face({1, 2, 3})});
  auto rel = homology::relative_homology(x, x, 2);
  CHECK(rel.betti == 0);
  // a pair with free relative H_1: X one edge, Y nothing, on [3]
  Complex edges(3, 1, {make_face({1, 2})});
  Complex empty(3, 0, {});
  auto h = homology::relative_homology(edges, empty, 0);
  CHECK(h.betti > 0);
  CHECK(h.torsion_order == 1);
}

TEST_CASE("euler characteristic identity") {
  CHECK(homology::euler_check(complete_complex(3, 1)));
  CHECK(homology::euler_check(Complex(4, 0, {make_face({2})})));
  CHECK(homology::euler_check(rp2_six_vertex()));
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Face> faces;
    for (const Face& f : all_faces(5, 2))
      if (rng.next() & 1) faces.push_back(f);
    Complex x(5, 2, std::move(faces));
    CHECK(homology::euler_check(x));
    CHECK(homology::euler_check_pair(x, Complex(5, 0, {make_face({1})})));
  }
}

TEST_CASE("hodge identity at the pinned sizes") {
  CHECK(homology::hodge_check(3, 1));
  CHECK(homology::hodge_check(5, 0));
  CHECK(homology::hodge_check(8, 3));
  CHECK_THROWS_AS(homology::hodge_check(4, 4), std::invalid_argument);
}

TEST_CASE("excision instance: cone pairs match their rooted pairs") {
  // T = F u Cone(n, R) with explicit cone layers on the Y side
  Rng rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5, k = 2;
    std::vector<Face> ffaces;
    for (const Face& f : all_faces(n - 1, k))
      if (rng.next() & 1) ffaces.push_back(f);
    std::vector<Face> rfaces;
    for (const Face& f : all_faces(n - 1, k - 1))
      if (rng.next() & 1) rfaces.push_back(f);
    Complex f(n - 1, k, ffaces);
    Complex r(n - 1, k - 1, rfaces);
    Complex t = trees::phi_inverse(f, r);

    // literal cone complex layers: Y_k = coned R, Y_{k-1} = R u coned full
    // (k-2)-skeleton, everything below is full
    homology::FaceChain tx = homology::FaceChain::of_complex(t);
    homology::FaceChain ty;
    ty.lo = -1;
    ty.layers.push_back(all_faces(n, -1));
    ty.layers.push_back(all_faces(n, 0));
    {
      std::vector<Face> y1 = rfaces;
      for (const Face& s : all_faces(n - 1, k - 2)) y1.push_back(s.inserted(n));
      std::sort(y1.begin(), y1.end());
      ty.layers.push_back(std::move(y1));
    }
    {
      std::vector<Face> y2;
      for (const Face& s : rfaces) y2.push_back(s.inserted(n));
      std::sort(y2.begin(), y2.end());
      ty.layers.push_back(std::move(y2));
    }

    for (int j = -1; j <= k; ++j) {
      // relative chain of (T, Cone(n,R)) via explicit set difference
      homology::FaceChain diff;
      diff.lo = -1;
      for (int d = -1; d <= k; ++d) {
        std::vector<Face> out;
        const auto& xs = tx.at(d);
        const auto& ys = ty.at(d);
        std::set_difference(xs.begin(), xs.end(), ys.begin(), ys.end(),
                            std::back_inserter(out));
        diff.layers.push_back(std::move(out));
      }
      CHECK(homology::chain_homology_at(diff, j) == homology::relative_homology(f, r, j));
    }
  }
}
