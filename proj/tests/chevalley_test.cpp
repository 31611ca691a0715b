#include <doctest.h>

#include <random>

#include "liegrade/chevalley.hpp"
#include "liegrade/quiver.hpp"

using namespace liegrade;

namespace {

const std::vector<std::string> jacobi_types{"A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "G2", "F4", "E6"};

Element random_element(const ChevalleyAlgebra& alg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  Element x = alg.zero();
  for (std::size_t i = 0; i < alg.dim(); ++i) x[i] = d(rng);
  return x;
}

}  // namespace

TEST_CASE("sl2 relations") {
  auto alg = ChevalleyAlgebra::build(LieType::parse("A1"));
  REQUIRE(alg->dim() == 3);
  const Element h = alg->basis_element(0), e = alg->root_vector({1}), f = alg->root_vector({-1});
  CHECK(alg->bracket(h, e) == Rational(2) * e);
  CHECK(alg->bracket(h, f) == Rational(-2) * f);
  CHECK(alg->bracket(e, f) == h);
  CHECK(alg->killing_form(h, h) == 8);
  CHECK(alg->killing_trace(h, h) == 8);
  CHECK(alg->centralizer(std::vector<Element>{h, e, f},
                         std::vector<Element>{alg->basis_element(0), alg->basis_element(1), alg->basis_element(2)})
            .empty());
}

TEST_CASE("dimensions") {
  CHECK(ChevalleyAlgebra::build(LieType::parse("A2"))->dim() == 8);
  CHECK(ChevalleyAlgebra::build(LieType::parse("G2"))->dim() == 14);
  CHECK(ChevalleyAlgebra::build(LieType::parse("E6"))->dim() == 78);
}

TEST_CASE("A2 structure constant") {
  auto alg = ChevalleyAlgebra::build(LieType::parse("A2"));
  const int n = alg->structure_constant({1, 0}, {0, 1});
  CHECK(std::abs(n) == 1);
  CHECK(alg->bracket(alg->root_vector({1, 0}), alg->root_vector({0, 1})) == Rational(n) * alg->root_vector({1, 1}));
}

TEST_CASE("Jacobi identity on every basis triple") {
  for (const auto& name : jacobi_types) {
    CAPTURE(name);
    auto alg = ChevalleyAlgebra::build(LieType::parse(name), JacobiCheck::skip);
    CHECK_FALSE(alg->find_jacobi_violation(false).has_value());
  }
}

TEST_CASE("Jacobi identity on E7 and E8") {
  for (const auto* name : {"E7", "E8"}) {
    CAPTURE(name);
    auto alg = ChevalleyAlgebra::build(LieType::parse(name), JacobiCheck::skip);
    CHECK_FALSE(alg->find_jacobi_violation(true, 7, 5000).has_value());
#ifdef LIEGRADE_LARGE_E
    CHECK_FALSE(alg->find_jacobi_violation(false).has_value());
#endif
  }
}

TEST_CASE("structure constants") {
  for (const auto& name : jacobi_types) {
    CAPTURE(name);
    auto alg = ChevalleyAlgebra::build(LieType::parse(name));
    const auto& rs = alg->root_system();
    const auto& roots = rs.roots();
    for (const auto& a : roots)
      for (const auto& b : roots) {
        const int n = alg->structure_constant(a, b);
        CHECK(n == -alg->structure_constant(b, a));
        if (!rs.is_root(a + b)) {
          CHECK(n == 0);
          continue;
        }
        // |N_{a,b}| = p + 1 with p the length of the a-string below b.
        int p = 0;
        for (Root down = b - a; rs.is_root(down); down = down - a) ++p;
        CHECK(std::abs(n) == p + 1);
      }
    // [h_i, e_a] = <a, alpha_i^vee> e_a and [e_a, e_{-a}] in the Cartan.
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const Element e = alg->root_vector(roots[k]);
      for (int i = 0; i < rs.rank(); ++i)
        CHECK(alg->bracket(alg->basis_element(i), e) == Rational(rs.pairing(roots[k], i)) * e);
      const Element c = alg->bracket(e, alg->root_vector(negated(roots[k])));
      for (std::size_t j = alg->rank(); j < alg->dim(); ++j) CHECK(sgn(c[j]) == 0);
      CHECK(c == alg->coroot_element(roots[k]));
    }
  }
}

TEST_CASE("Killing form") {
  std::mt19937_64 rng(3);
  for (const auto& name : jacobi_types) {
    CAPTURE(name);
    auto alg = ChevalleyAlgebra::build(LieType::parse(name));
    const auto& K = alg->killing();
    for (int t = 0; t < 100; ++t) {
      const Element x = random_element(*alg, rng), y = random_element(*alg, rng), z = random_element(*alg, rng);
      CHECK(K(alg->bracket(x, y), z) == -K(y, alg->bracket(x, z)));
      if (t < 5) CHECK(K(x, y) == alg->killing_trace(x, y));
    }
    Matrix gram(alg->dim(), alg->dim());
    for (std::size_t i = 0; i < alg->dim(); ++i)
      for (std::size_t j = 0; j < alg->dim(); ++j)
        gram(i, j) = K(alg->basis_element(i), alg->basis_element(j));
    CHECK(rank(gram) == alg->dim());
    // The normalized form is the Killing form over twice the dual Coxeter number.
    const Rational ratio_k = K.cartan_gram()(0, 0) / alg->normalized().cartan_gram()(0, 0);
    for (std::size_t k = 0; k < alg->root_system().num_positive(); ++k)
      CHECK(K.root_pairs()[k] == ratio_k * alg->normalized().root_pairs()[k]);
    CHECK(K.dual_norm(alg->root_system().highest_root()) * ratio_k == 2);
  }
}

TEST_CASE("Killing form of sl_n is 2n tr(XY)") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 5; ++n) {
    auto alg = ChevalleyAlgebra::build(LieType{'A', n - 1});
    const SlMatrices sl(*alg);
    for (int t = 0; t < 20; ++t) {
      const Element x = random_element(*alg, rng), y = random_element(*alg, rng);
      CHECK(alg->killing_form(x, y) == Rational(2 * n) * (sl.to_matrix(x) * sl.to_matrix(y)).trace());
      CHECK(sl.to_matrix(alg->bracket(x, y)) == commutator(sl.to_matrix(x), sl.to_matrix(y)));
    }
  }
}

TEST_CASE("centralizers") {
  auto alg = ChevalleyAlgebra::build(LieType::parse("B3"));
  std::vector<Element> all;
  for (std::size_t i = 0; i < alg->dim(); ++i) all.push_back(alg->basis_element(i));
  CHECK(alg->centralizer(std::vector<Element>{alg->zero()}, all).size() == alg->dim());
  // The Cartan subalgebra is self-centralizing on a regular element.
  const Element reg = alg->cartan_element(std::vector<Rational>{1, 5, 17});
  const auto c = alg->centralizer(std::vector<Element>{reg}, all);
  CHECK(c.size() == alg->rank());
  for (const auto& x : c) CHECK(alg->bracket(x, reg).is_zero());
}
