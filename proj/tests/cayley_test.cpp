#include <doctest.h>

#include "liegrade/cayley.hpp"
#include "liegrade/quaternionic.hpp"
#include "liegrade/quiver.hpp"

using namespace liegrade;

namespace {

std::size_t span_rank(const std::vector<Element>& xs, std::size_t dim) {
  std::vector<Vector> rows;
  for (const auto& x : xs) rows.push_back(x.coords());
  return rows.empty() ? 0 : rank(Matrix::from_rows(rows, dim));
}

bool supported_in(const Element& x, const std::vector<std::size_t>& piece) {
  std::vector<bool> in(x.size(), false);
  for (auto i : piece) in[i] = true;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!in[i] && sgn(x[i]) != 0) return false;
  return true;
}

ZGrading quiver_grading(std::vector<int> d) {
  const QuiverDims dims(std::move(d));
  return z_grading_from_labels(ChevalleyAlgebra::build(LieType{'A', dims.n() - 1}), labels_for_dims(dims));
}

std::vector<ZGrading> regular_sweep() {
  std::vector<ZGrading> out;
  auto add_labels = [&](const char* name, int top) {
    auto alg = ChevalleyAlgebra::build(LieType::parse(name));
    const int r = alg->root_system().rank();
    std::vector<int> p(r, 0);
    for (;;) {
      int k = 0;
      while (k < r && ++p[k] > top) p[k++] = 0;
      if (k == r) break;
      const ZGrading zg = z_grading_from_labels(alg, p);
      if (zg.piece(1).empty()) continue;
      if (jm_regular(make_vinberg_pair(zg, 1)).regular) out.push_back(zg);
    }
  };
  add_labels("A2", 2);
  add_labels("A3", 2);
  add_labels("B2", 2);
  add_labels("G2", 2);
  add_labels("A4", 1);
  add_labels("B3", 1);
  add_labels("C3", 1);
  add_labels("D4", 1);
  for (const auto* name : {"A3", "B3", "G2", "F4"}) out.push_back(build_quaternionic(LieType::parse(name)).grading);
  return out;
}

}  // namespace

TEST_CASE("(1,1,1) quiver grading") {
  const ZGrading zg = quiver_grading({1, 1, 1});
  const CayleyData cd = cayley_pair(zg);
  CHECK(cd.c_basis.empty());
  REQUIRE(cd.v_basis.size() == 1);
  const SlMatrices sl(zg.algebra());
  const Matrix v = quiver_to_standard(sl.to_matrix(cd.v_basis[0]));
  const Rational l = v(0, 0);
  CHECK(sgn(l) != 0);
  Matrix expected(3, 3);
  expected(0, 0) = l;
  expected(1, 1) = -2 * l;
  expected(2, 2) = l;
  CHECK(v == expected);
  CHECK(verify_iso_and_character(cd).holds());
  CHECK(bracket_projection_test(cd).theta_pair_candidate);
}

TEST_CASE("(2,2,2) quiver grading") {
  // At the identity-block e the centralizer is literally diag(X, X, X).
  const QuiverDims dims({2, 2, 2});
  const ZGrading zg = quiver_grading(dims.d);
  const SlMatrices sl(zg.algebra());
  const CayleyData cd = cayley_pair_at(zg, sl.from_matrix(quiver_to_standard(as_matrix(dims, canonical_open_element(dims)))));
  CHECK(cd.c_basis.size() == 3);
  CHECK(cd.v_basis.size() == 4);
  const IsoCharacterReport rep = verify_iso_and_character(cd);
  CHECK(rep.holds());
  CHECK(cd.iso_matrix.rows() == 4);
  CHECK(sgn(rep.iso_determinant) != 0);

  for (const auto& c : cd.c_basis) {
    const Matrix m = quiver_to_standard(sl.to_matrix(c));
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        if (i / 2 != j / 2)
          CHECK(sgn(m(i, j)) == 0);
        else
          CHECK(m(i, j) == m(i % 2, j % 2));
      }
    CHECK(sgn(m(0, 0) + m(1, 1)) == 0);
  }

  const ProjectionVerdict pv = bracket_projection_test(cd);
  CHECK_FALSE(pv.theta_pair_candidate);
  REQUIRE(pv.witness);
  REQUIRE(pv.parts);
  CHECK_FALSE(pv.parts->c.is_zero());
  CHECK_FALSE(pv.parts->v.is_zero());
  const auto [i, j] = *pv.witness;
  CHECK(pv.parts->c + pv.parts->v + pv.parts->w == zg.algebra().bracket(cd.v_basis[i], cd.v_basis[j]));
}

TEST_CASE("sl2 with its Hermitian grading") {
  const ZGrading zg = z_grading_from_labels(ChevalleyAlgebra::build(LieType::parse("A1")), {1});
  const CayleyData cd = cayley_pair(zg);
  CHECK(cd.c_basis.empty());
  REQUIRE(cd.v_basis.size() == 1);
  CHECK(span_rank({cd.v_basis[0], zg.algebra().basis_element(0)}, 3) == 1);
  CHECK(bracket_projection_test(cd).theta_pair_candidate);
}

TEST_CASE("quaternionic gradings") {
  const CayleyData cd = cayley_pair(build_quaternionic(LieType::parse("A2")).grading);
  CHECK(cd.v_basis.size() == 1);
  CHECK(verify_iso_and_character(cd).holds());
  CHECK(bracket_projection_test(cd).theta_pair_candidate);
  for (const auto* sp : {"C2", "C3"})
    CHECK_THROWS_AS(cayley_pair(build_quaternionic(LieType::parse(sp)).grading), PreconditionFailed);
  CHECK_THROWS_AS(cayley_pair(quiver_grading({2, 1})), PreconditionFailed);
}

TEST_CASE("a chosen element of the open orbit") {
  const ZGrading zg = quiver_grading({1, 1, 1});
  const auto& alg = zg.algebra();
  const Element e = Rational(3) * alg.root_vector({1, 0}) + Rational(-2) * alg.root_vector({0, 1});
  const CayleyData cd = cayley_pair_at(zg, e);
  CHECK(cd.triple.e == e);
  CHECK(cd.v_basis.size() == 1);
  CHECK_THROWS_AS(cayley_pair_at(zg, alg.root_vector({1, 0})), InvalidInput);
}

TEST_CASE("Cayley data invariants over JM-regular gradings") {
  const auto gradings = regular_sweep();
  CHECK(gradings.size() > 20);
  for (const auto& zg : gradings) {
    const auto& alg = zg.algebra();
    const auto& K = alg.killing();
    const std::size_t dim = alg.dim();
    const int m = zg.depth();
    CAPTURE(alg.root_system().lie_type().name());
    CAPTURE(zg.labels());

    for (std::uint64_t seed : {0u, 4u}) {
      const CayleyData cd = cayley_pair(zg, seed);
      const Sl2Triple& t = cd.triple;
      CHECK(t.h == Rational(2) * zg.zeta());
      const auto& g0 = cd.pair.g0;

      // Centralizer, against an independent rank count.
      std::vector<Vector> cols;
      for (auto i : g0) {
        Vector col = alg.bracket(alg.basis_element(i), t.e).coords();
        const Vector f = alg.bracket(alg.basis_element(i), t.f).coords();
        col.insert(col.end(), f.begin(), f.end());
        cols.push_back(col);
      }
      CHECK(cd.c_basis.size() == g0.size() - rank(Matrix::from_columns(cols, 2 * dim)));
      for (const auto& c : cd.c_basis) {
        CHECK(supported_in(c, g0));
        CHECK(alg.bracket(c, t.e).is_zero());
        CHECK(alg.bracket(c, t.f).is_zero());
        CHECK(sgn(K(c, t.h)) == 0);
        CHECK(sgn(toledo_character(cd.pair, c)) == 0);
      }

      // V is the image of ad(e)^{m-1} on g_{1-m}.
      CHECK(cd.v_basis.size() == zg.piece(1 - m).size());
      std::vector<Element> image;
      for (auto i : zg.piece(1 - m)) image.push_back(ad_power(alg, t.e, m - 1, alg.basis_element(i)));
      CHECK(span_rank(image, dim) == cd.v_basis.size());
      auto joined = image;
      joined.insert(joined.end(), cd.v_basis.begin(), cd.v_basis.end());
      CHECK(span_rank(joined, dim) == cd.v_basis.size());
      for (const auto& v : cd.v_basis) CHECK(supported_in(v, g0));

      auto cv = cd.c_basis;
      cv.insert(cv.end(), cd.v_basis.begin(), cd.v_basis.end());
      CHECK(span_rank(cv, dim) == cd.c_basis.size() + cd.v_basis.size());

      const IsoCharacterReport rep = verify_iso_and_character(cd);
      CHECK(rep.holds());
      CHECK(cd.iso_matrix.rows() == cd.iso_matrix.cols());

      // Theta candidate iff [V, V] lies in c.
      bool closed = true;
      for (std::size_t i = 0; i < cd.v_basis.size() && closed; ++i)
        for (std::size_t j = i + 1; j < cd.v_basis.size() && closed; ++j) {
          auto with = cd.c_basis;
          with.push_back(alg.bracket(cd.v_basis[i], cd.v_basis[j]));
          closed = span_rank(with, dim) == cd.c_basis.size();
        }
      CHECK(bracket_projection_test(cd).theta_pair_candidate == closed);
    }
  }
}
