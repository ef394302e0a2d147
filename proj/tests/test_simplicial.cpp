#include <doctest.h>

#include "hypertrees/boundary.hpp"
#include "hypertrees/complex.hpp"
#include "hypertrees/rng.hpp"
#include "hypertrees/trees.hpp"

using namespace hypertrees;

TEST_CASE("make_face canonicalizes and validates") {
  CHECK(make_face({3, 1, 2}).vertices() == std::vector<int>{1, 2, 3});
  CHECK(make_face({}).dim() == -1);
  CHECK_THROWS_AS(make_face({2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make_face({0, 1}), std::invalid_argument);
}

TEST_CASE("colex order and ranks") {
  auto faces = all_faces(4, 1);
  REQUIRE(faces.size() == 6);
  CHECK(faces[0] == make_face({1, 2}));
  CHECK(faces[1] == make_face({1, 3}));
  CHECK(faces[2] == make_face({2, 3}));
  CHECK(faces[3] == make_face({1, 4}));
  for (std::size_t i = 0; i < faces.size(); ++i) CHECK(colex_rank(faces[i]) == i);
  CHECK(all_faces(5, -1).size() == 1);
  CHECK(all_faces(5, -1)[0].dim() == -1);
}

TEST_CASE("boundary matrix follows the orientation rule") {
  auto d0 = boundary_matrix(3, 0);
  REQUIRE(d0.entries.rows() == 1);
  REQUIRE(d0.entries.cols() == 3);
  for (std::size_t j = 0; j < 3; ++j) CHECK(d0.entries.at(0, j) == 1);

  auto d1 = boundary_matrix(3, 1);
  // rows {1},{2},{3}; cols {12},{13},{23}
  const int expect[3][3] = {{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(d1.entries.at(i, j) == expect[i][j]);

  // removing the middle vertex of {1,2,3} carries sign (-1)^1
  auto d2 = boundary_matrix(3, 2);
  const Face sigma = make_face({1, 3});
  std::size_t row = colex_rank(sigma);
  CHECK(d2.entries.at(row, 0) == -1);
}

TEST_CASE("hat boundary deletes the rows through n") {
  auto hat = hat_boundary(3, 1);
  REQUIRE(hat.rows.size() == 2);
  CHECK(hat.rows[0] == make_face({1}));
  CHECK(hat.rows[1] == make_face({2}));
  CHECK(determinant(hat.entries * hat.entries.transposed()) == 3);

  auto hat0 = hat_boundary(3, 0);
  CHECK(hat0.entries == boundary_matrix(3, 0).entries);

  auto hat4 = hat_boundary(4, 1);
  CHECK(determinant(hat4.entries * hat4.entries.transposed()) == 16);
}

TEST_CASE("chain identity d_{k-1} d_k = 0") {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      auto prod = boundary_matrix(n, k - 1).entries * boundary_matrix(n, k).entries;
      CHECK(prod == IntMatrix(prod.rows(), prod.cols()));
    }
  }
}

TEST_CASE("cone, link, proj") {
  Complex base(2, 0, {make_face({1}), make_face({2})});
  Complex coned = cone(3, base);
  CHECK(coned.faces() == std::vector<Face>{make_face({1, 3}), make_face({2, 3})});
  CHECK(cone(3, Complex(2, 0, {})).face_count() == 0);

  Complex x(3, 1, {make_face({1, 2}), make_face({1, 3})});
  CHECK(link(3, x) == Complex(2, 0, {make_face({1})}));
  CHECK(proj(3, x) == Complex(2, 1, {make_face({1, 2})}));
  CHECK_THROWS_AS(link(2, x), std::invalid_argument);

  Complex tetra = complete_complex(4, 2);
  CHECK(link(4, tetra) == complete_complex(3, 1));
  CHECK(proj(4, tetra) == Complex(3, 2, {make_face({1, 2, 3})}));
}

TEST_CASE("simplex_link of the top j vertices") {
  Complex tetra = complete_complex(4, 2);
  // link of the edge {3,4}: vertices completing it to a triangle
  Complex l = simplex_link(tetra, 2);
  CHECK(l == complete_complex(2, 0));
  CHECK(simplex_link(tetra, 1) == link(4, tetra));
}

TEST_CASE("phi round trip on random complexes") {
  Rng rng(20240811);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(8));   // up to 10
    const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    std::vector<Face> faces;
    for (const Face& f : all_faces(n, k))
      if (rng.next() & 1) faces.push_back(f);
    Complex x(n, k, std::move(faces));
    auto [f, r] = trees::phi(x);
    CHECK(f.face_count() + r.face_count() == x.face_count());
    CHECK(trees::phi_inverse(f, r) == x);
  }
}

TEST_CASE("cone over the full skeleton matches phi_inverse") {
  Complex f(4, 2, {make_face({1, 2, 3})});
  Complex r = complete_complex(4, 1);
  Complex lifted(5, 2, f.faces());
  CHECK(face_union(lifted, cone(5, r)) == trees::phi_inverse(f, r));
}
