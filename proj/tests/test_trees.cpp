#include <doctest.h>

#include "hypertrees/errors.hpp"
#include "hypertrees/homology.hpp"
#include "hypertrees/trees.hpp"

using namespace hypertrees;

TEST_CASE("is_tree on the pinned examples") {
  CHECK(trees::is_tree(Complex(3, 1, {make_face({1, 2}), make_face({1, 3})})));
  CHECK_FALSE(trees::is_tree(complete_complex(3, 1)));
  CHECK_FALSE(trees::is_tree(complete_complex(4, 2)));  // 4 faces, needs 3

  // every 3-of-4 triangle selection on [4] is a hypertree with torsion 1
  const auto faces = all_faces(4, 2);
  for (std::size_t skip = 0; skip < 4; ++skip) {
    std::vector<Face> sel;
    for (std::size_t i = 0; i < 4; ++i)
      if (i != skip) sel.push_back(faces[i]);
    Complex t(4, 2, sel);
    CHECK(trees::is_tree(t));
    CHECK(trees::det_torsion(t) == 1);
  }
}

TEST_CASE("rooted forest verdicts") {
  // square nonsingular block
  auto good = trees::is_rooted_forest(
      {Complex(3, 1, {make_face({1, 2}), make_face({1, 3})}), Complex(3, 0, {make_face({1})})});
  CHECK(good.verdict);
  CHECK(*good.torsion == 1);

  // size mismatch: falls through to the Betti checks and fails
  auto bad = trees::is_rooted_forest({Complex(2, 1, {make_face({1, 2})}), Complex(2, 0, {})});
  CHECK_FALSE(bad.verdict);

  // a k-cycle can never be part of a rooted forest
  auto cyc = trees::is_rooted_forest({complete_complex(3, 1), Complex(3, 0, {})});
  CHECK_FALSE(cyc.verdict);
}

TEST_CASE("relative forest two-of-three") {
  Complex ambient = complete_complex(4, 1);
  Complex x(4, 1, {make_face({1, 2}), make_face({1, 3}), make_face({1, 4})});
  Complex pt(4, 0, {make_face({1})});
  CHECK(trees::is_relative_forest(x, pt, ambient));
  CHECK(trees::is_relative_forest(ambient, ambient, ambient));
  Complex empty0(4, 0, {});
  CHECK_FALSE(trees::is_relative_forest(complete_complex(4, 1), empty0, ambient));
}

TEST_CASE("enumeration matches the classical counts") {
  auto t41 = trees::enumerate_trees(4, 1);
  CHECK(t41.size() == 16);
  Integer sum = 0;
  for (const auto& rec : t41) {
    CHECK(rec.torsion == 1);
    sum += rec.torsion * rec.torsion;
  }
  CHECK(sum == 16);

  Integer sum52 = 0;
  for (const auto& rec : trees::enumerate_trees(5, 2)) sum52 += rec.torsion * rec.torsion;
  CHECK(sum52 == 125);

  Integer sum63 = 0;
  for (const auto& rec : trees::enumerate_trees(6, 3)) sum63 += rec.torsion * rec.torsion;
  CHECK(sum63 == 1296);

  // dimension-0 trees are single vertices
  auto t50 = trees::enumerate_trees(5, 0);
  CHECK(t50.size() == 5);
}

TEST_CASE("enumeration budget trips") {
  CHECK_THROWS_AS(trees::enumerate_trees(6, 2, 100.0), budget_error);
}

TEST_CASE("enumerated torsion agrees with the SNF route") {
  for (const auto& rec : trees::enumerate_trees(5, 2))
    CHECK(rec.torsion == trees::snf_torsion(rec.complex));
}

TEST_CASE("all hypertrees carry C(n-1,k) top faces and trivial rational homology") {
  for (const auto& rec : trees::enumerate_trees(5, 2)) {
    CHECK(rec.complex.face_count() == 6);
    CHECK(homology::reduced_homology(rec.complex, 2).betti == 0);
    CHECK(homology::reduced_homology(rec.complex, 1).betti == 0);
  }
}

TEST_CASE("submain bijection at (4,1) and (5,2)") {
  auto r41 = trees::submain_check(4, 1);
  CHECK(r41.ok());
  CHECK(r41.tree_count == 16);
  CHECK(r41.rooted_forest_count == 16);

  auto r52 = trees::submain_check(5, 2);
  CHECK(r52.ok());
  CHECK(r52.tree_count == r52.rooted_forest_count);
}
