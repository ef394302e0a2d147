#include <doctest.h>

#include "hypertrees/measure.hpp"
#include "hypertrees/rng.hpp"

using namespace hypertrees;

namespace {

Complex rp2_six_vertex() {
  std::vector<Face> faces;
  for (auto v : {std::vector<int>{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                 {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}})
    faces.push_back(make_face(v));
  return Complex(6, 2, std::move(faces));
}

}  // namespace

TEST_CASE("kernel invariants") {
  for (auto [n, k] : {std::pair{5, 2}, {6, 2}, {5, 1}, {4, 0}}) {
    measure::Kernel p = measure::kernel_P(n, k);
    CHECK(p.matrix.is_symmetric());
    CHECK(p.matrix.is_idempotent());
    CHECK(p.matrix.trace() == Rational(binomial(n - 1, k)));
    for (std::size_t i = 0; i < p.matrix.rows(); ++i)
      CHECK(p.matrix.at(i, i) == Rational(k + 1, n));
  }
}

TEST_CASE("P projects onto the hat-boundary row space") {
  measure::Kernel p = measure::kernel_P(5, 2);
  auto hat = hat_boundary(5, 2);
  // P * hat^t == hat^t exactly: (N/d) X = X  <=>  N X = d X
  IntMatrix lhs = p.matrix.numerator() * hat.entries.transposed();
  IntMatrix rhs = hat.entries.transposed();
  bool equal = true;
  for (std::size_t i = 0; i < lhs.rows() && equal; ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j)
      if (lhs.at(i, j) != p.matrix.denominator() * rhs.at(i, j)) {
        equal = false;
        break;
      }
  CHECK(equal);
}

TEST_CASE("nu masses") {
  for (const auto& rec : trees::enumerate_trees(5, 1))
    CHECK(measure::nu_mass(rec.complex) == Rational(1, 125));
  CHECK(measure::nu_mass(rp2_six_vertex()) == Rational(4, 46656));
  CHECK(measure::nu_mass(complete_complex(3, 1)) == 0);
}

TEST_CASE("inclusion and exclusion probabilities") {
  const Face f12 = make_face({1, 2});
  const Face f13 = make_face({1, 3});
  CHECK(measure::inclusion_prob(std::vector<Face>{f12}, 3, 1) == Rational(2, 3));
  CHECK(measure::inclusion_prob(std::vector<Face>{f12, f13}, 3, 1) == Rational(1, 3));
  CHECK(measure::exclusion_prob(std::vector<Face>{make_face({3})}, 3, 0) == Rational(2, 3));
}

TEST_CASE("inclusion equals complement-exclusion duality") {
  // det P_{B,B} with B on half the faces, against Q on the same set
  const auto faces = all_faces(4, 1);
  std::vector<Face> b{faces[0], faces[2]};
  const Rational direct = measure::inclusion_prob(b, 4, 1);
  Rational by_enum = 0;
  for (const auto& rec : trees::enumerate_trees(4, 1)) {
    if (rec.complex.contains(b[0]) && rec.complex.contains(b[1]))
      by_enum += measure::nu_mass(rec.complex);
  }
  CHECK(direct == by_enum);
}

TEST_CASE("every single-face inclusion is (k+1)/n") {
  for (auto [n, k] : {std::pair{5, 1}, {5, 2}, {6, 3}})
    for (const Face& f : all_faces(n, k))
      CHECK(measure::inclusion_prob(std::vector<Face>{f}, n, k) == Rational(k + 1, n));
}

TEST_CASE("bridge identities") {
  {
    auto rep = measure::bridge_check(3, 1, std::vector<Face>{make_face({3})},
                                     std::vector<Face>{make_face({1, 2})});
    CHECK(rep.ok());
    CHECK(rep.q_minor == Rational(2, 3));
    CHECK(rep.p_minor == Rational(2, 3));
  }
  {
    auto rep = measure::bridge_check(4, 1, std::vector<Face>{make_face({4})},
                                     std::vector<Face>{make_face({1, 2})});
    CHECK(rep.ok());
    CHECK(rep.p_minor == Rational(1, 2));
  }
  {
    // (5,2) with a random-ish A of size 2 and B of size 2
    auto rep = measure::bridge_check(
        5, 2, std::vector<Face>{make_face({1, 2}), make_face({3, 4})},
        std::vector<Face>{make_face({1, 2, 3}), make_face({2, 4, 5})});
    CHECK(rep.ok());
  }
}

TEST_CASE("kalai sum three ways") {
  auto v41 = measure::kalai_sum_verify(4, 1);
  CHECK(v41.equal);
  CHECK(v41.det_route == 16);
  auto v63 = measure::kalai_sum_verify(6, 3);
  CHECK(v63.equal);
  CHECK(v63.det_route == 1296);
  auto v50 = measure::kalai_sum_verify(5, 0);
  CHECK(v50.equal);
  CHECK(v50.det_route == 5);
}

TEST_CASE("negative association at (5,1)") {
  auto rep = measure::negative_association_check(5, 1);
  CHECK(rep.ok);
  CHECK(rep.minors_agree);
  CHECK(rep.pairs_checked == 45);
}

TEST_CASE("alternate root bases give the same masses") {
  // nu(T) = det d_{A,T}^2 / det (d d^t)_{A,A} for any (k-1)-root A; the
  // hat rows are one choice, the faces avoiding vertex 1 are another
  const int n = 5, k = 2;
  std::vector<Face> alt_rows;
  for (const Face& f : all_faces(n, k - 1))
    if (!f.contains(1)) alt_rows.push_back(f);
  IntMatrix alt = boundary_submatrix(alt_rows, all_faces(n, k));
  const Integer gram = determinant(alt * alt.transposed());
  CHECK(gram == int_pow(Integer(n), 3));  // full row rank root
  for (const auto& rec : trees::enumerate_trees(n, k)) {
    std::vector<std::size_t> cols;
    for (const Face& f : rec.complex.faces()) cols.push_back(colex_rank(f));
    std::vector<std::size_t> rows(alt_rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    const Integer d = determinant(alt.submatrix(rows, cols));
    CHECK(Rational(d * d, gram) == measure::nu_mass(rec.complex));
  }
}
