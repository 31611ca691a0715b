#include <doctest.h>

#include <random>
#include <set>

#include "liegrade/quiver.hpp"
#include "liegrade/vinberg.hpp"

using namespace liegrade;

namespace {

Matrix diag(std::vector<Rational> v) {
  Matrix m(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m(i, i) = v[i];
  return m;
}

// Ranks of every product f_{j-1}...f_i computed from scratch.
std::vector<std::size_t> product_ranks(const QuiverDims& dims, const QuiverElement& x) {
  std::vector<std::size_t> out;
  const int m = dims.vertices();
  for (int i = 0; i < m; ++i) {
    Matrix p = Matrix::identity(dims.d[i]);
    for (int j = i + 1; j < m; ++j) {
      p = x.maps[j - 1] * p;
      out.push_back(rank(p));
    }
  }
  return out;
}

// Every linear-quiver representation is a sum of interval modules, so 0/1
// maps reach every orbit.
std::set<std::vector<std::size_t>> brute_force_rank_tuples(const QuiverDims& dims) {
  std::vector<std::pair<int, int>> slots;
  for (int j = 0; j + 1 < dims.vertices(); ++j)
    for (int r = 0; r < dims.d[j + 1]; ++r)
      for (int c = 0; c < dims.d[j]; ++c) slots.push_back({j, r * dims.d[j] + c});
  std::set<std::vector<std::size_t>> seen;
  for (unsigned long mask = 0; mask < (1UL << slots.size()); ++mask) {
    QuiverElement x = zero_element(dims);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (!((mask >> s) & 1)) continue;
      const auto [j, pos] = slots[s];
      x.maps[j](pos / dims.d[j], pos % dims.d[j]) = 1;
    }
    seen.insert(product_ranks(dims, x));
  }
  return seen;
}

std::vector<std::size_t> flatten(const RankTuple& r) {
  std::vector<std::size_t> out;
  for (const auto& [ij, v] : r) out.push_back(v);
  return out;
}

}  // namespace

TEST_CASE("dimension vectors") {
  const QuiverDims d({1, 1, 1});
  CHECK(d.n() == 3);
  CHECK(d.alpha() == 1);
  CHECK(QuiverDims({2, 1}).alpha() == ratio(1, 3));
  CHECK(QuiverDims({1, 2, 1}).offset(2) == 3);
  CHECK_THROWS_AS(QuiverDims({1}), InvalidInput);
  CHECK_THROWS_AS(QuiverDims({1, 0}), InvalidInput);
}

TEST_CASE("rank tuples") {
  const QuiverDims d({2, 1, 2});
  for (const auto& [ij, r] : rank_tuple(d, zero_element(d))) CHECK(r == 0);
  CHECK(rank_tuple(d, canonical_open_element(d)) == open_rank_tuple(d));

  const QuiverElement x{{Matrix{{1, 0}}, Matrix{{1}, {0}}}, std::nullopt};
  const RankTuple r = rank_tuple(d, x);
  CHECK(r.at({0, 1}) == 1);
  CHECK(r.at({1, 2}) == 1);
  CHECK(r.at({0, 2}) == 1);

  const QuiverElement bad{{Matrix{{1}}, Matrix{{1}}}, std::nullopt};
  CHECK_THROWS_AS(rank_tuple(d, bad), InvalidInput);
}

TEST_CASE("canonical open elements") {
  CHECK(canonical_open_element(QuiverDims({1, 1})).maps[0] == Matrix{{1}});
  const QuiverElement x = canonical_open_element(QuiverDims({1, 2, 1}));
  CHECK(x.maps[0] == Matrix{{1}, {0}});
  CHECK(x.maps[1] == Matrix{{1, 0}});
  const QuiverElement y = canonical_open_element(QuiverDims({2, 2, 2}));
  CHECK(y.maps[0] == Matrix::identity(2));
  CHECK(y.maps[1] == Matrix::identity(2));
}

TEST_CASE("orbit enumeration against brute force") {
  CHECK(enumerate_orbits(QuiverDims({1, 1})).size() == 2);
  // (r01, r12, r02) = (1, 1, 0) is infeasible: two nonzero scalars compose to
  // a nonzero scalar. The intervals [0][1][2], [01][2], [0][12], [012] remain.
  CHECK(enumerate_orbits(QuiverDims({1, 1, 1})).size() == 4);
  CHECK(enumerate_orbits(QuiverDims({2, 1})).size() == 2);

  for (const auto& dv : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {1, 2}, {1, 1, 1}, {2, 1, 1}, {1, 2, 1},
                                                       {2, 2}, {2, 1, 2}, {1, 1, 1, 1}, {2, 2, 1}}) {
    const QuiverDims dims(dv);
    CAPTURE(dv);
    const auto orbits = enumerate_orbits(dims);
    std::set<std::vector<std::size_t>> got;
    int maximal = 0;
    for (const auto& o : orbits) {
      CHECK(rank_tuple(dims, o.representative) == o.ranks);
      CHECK(product_ranks(dims, o.representative) == flatten(o.ranks));
      got.insert(flatten(o.ranks));
      maximal += o.ranks == open_rank_tuple(dims);
    }
    CHECK(got.size() == orbits.size());
    CHECK(got == brute_force_rank_tuples(dims));
    CHECK(maximal == 1);
  }
  CHECK_THROWS_AS(enumerate_orbits(QuiverDims({3, 3, 3, 3}), 10), InvalidInput);
}

TEST_CASE("Jordan h") {
  CHECK(jordan_h(QuiverDims({1, 1}), canonical_open_element(QuiverDims({1, 1}))) == diag({-1, 1}));
  CHECK(jordan_h(QuiverDims({1, 1, 1}), canonical_open_element(QuiverDims({1, 1, 1}))) == diag({-2, 0, 2}));
  CHECK(jordan_h(QuiverDims({1, 2, 1}), canonical_open_element(QuiverDims({1, 2, 1}))) == diag({-2, 0, 0, 2}));

  const QuiverDims d({2, 1});
  const QuiverElement tilted{{Matrix{{1, 1}}}, std::nullopt};
  CHECK_FALSE(basis_adapted(tilted));
  CHECK_THROWS_AS(jordan_h(d, tilted), InvalidInput);
  CHECK(orbit_h(d, tilted) == jordan_h(d, canonical_open_element(d)));

  for (const auto& dv : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {1, 2, 1}, {2, 2, 2}, {3, 1, 2}, {1, 3, 1, 2}}) {
    const QuiverDims dims(dv);
    const QuiverElement x = canonical_open_element(dims);
    const QuiverTriple t = jordan_triple(dims, x);
    const Matrix e = as_matrix(dims, x);
    CHECK(t.e == e);
    CHECK(sgn(t.h.trace()) == 0);
    CHECK(commutator(t.h, e) == e * Rational(2));
    CHECK(commutator(t.h, t.f) == t.f * Rational(-2));
    CHECK(commutator(e, t.f) == t.h);
  }
}

TEST_CASE("JM-regularity of quiver gradings") {
  CHECK(quiver_jm_regular(QuiverDims({1, 1, 1})));
  CHECK(quiver_jm_regular(QuiverDims({1, 3, 1})));
  CHECK_FALSE(quiver_jm_regular(QuiverDims({2, 1})));
  CHECK(quiver_jm_regular(QuiverDims({2, 2, 2})));
  CHECK(zeta_matrix(QuiverDims({2, 1})) == diag({ratio(-1, 3), ratio(-1, 3), ratio(2, 3)}));
}

TEST_CASE("Toledo invariants") {
  CHECK(toledo_invariant({{2, 3}, {0, 0}, 2}) == 0);
  CHECK(toledo_invariant({{1, 1, 1}, {1, 0, -1}, 2}) == -4);
  CHECK_THROWS_AS(toledo_invariant({{1, 1}, {1, 0}, 2}), InvalidInput);
  CHECK_THROWS_AS(toledo_invariant({{1, 1}, {1, -1}, 1}), InvalidInput);
  CHECK_THROWS_AS(toledo_invariant({{1, 1}, {1, -1, 0}, 2}), InvalidInput);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> rk(1, 6), dg(-9, 9), len(2, 5);
  for (int t = 0; t < 100; ++t) {
    const int p = rk(rng), q = rk(rng), a = dg(rng);
    CHECK(toledo_invariant({{p, q}, {a, -a}, 2}) == Rational(2 * (-p * a - q * a)) / Rational(p + q));

    const int m = len(rng);
    QuiverHiggsTopology top;
    int sum = 0;
    for (int j = 0; j < m; ++j) {
      top.ranks.push_back(rk(rng));
      top.degrees.push_back(j + 1 < m ? dg(rng) : -sum);
      sum += top.degrees.back();
    }
    QuiverHiggsTopology rev{{top.ranks.rbegin(), top.ranks.rend()}, {}, 2};
    for (auto it = top.degrees.rbegin(); it != top.degrees.rend(); ++it) rev.degrees.push_back(-*it);
    CHECK(toledo_invariant(rev) == toledo_invariant(top));
  }
}

TEST_CASE("pointwise maximality") {
  const QuiverDims d({1, 1, 1});
  CHECK(pointwise_maximality(d, canonical_open_element(d)));
  CHECK_FALSE(pointwise_maximality(d, zero_element(d)));
  CHECK_FALSE(pointwise_maximality(d, QuiverElement{{Matrix{{1}}, Matrix{{0}}}, std::nullopt}));
  CHECK_THROWS_AS(pointwise_maximality(QuiverDims({2, 1}), zero_element(QuiverDims({2, 1}))), PreconditionFailed);
}

TEST_CASE("block scalar stabilizers") {
  const QuiverDims d({1, 1, 1});
  CHECK(block_scalar_stabilizer_order(d, canonical_open_element(d)) == 3);
  CHECK(block_scalar_stabilizer_order(QuiverDims({2, 2, 2}), canonical_open_element(QuiverDims({2, 2, 2}))) == 6);
  CHECK(block_scalar_stabilizer_order(d, zero_element(d)) == 0);
}

TEST_CASE("labels and dimension vectors") {
  CHECK(labels_for_dims(QuiverDims({1, 1, 1})) == std::vector<int>{1, 1});
  CHECK(labels_for_dims(QuiverDims({1, 2, 1})) == std::vector<int>{1, 0, 1});
  const std::vector<int> l{0, 1, 0};
  CHECK(dims_for_labels(l)->d == std::vector<int>{2, 2});
  const std::vector<int> two{2, 0};
  CHECK_FALSE(dims_for_labels(two));
}

TEST_CASE("quiver and Chevalley pipelines agree for n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    auto alg = ChevalleyAlgebra::build(LieType{'A', n - 1});
    const SlMatrices sl(*alg);
    for (int mask = 1; mask < (1 << (n - 1)); ++mask) {
      std::vector<int> labels(n - 1);
      for (int k = 0; k < n - 1; ++k) labels[k] = (mask >> k) & 1;
      CAPTURE(labels);
      const QuiverDims dims = *dims_for_labels(labels);
      CHECK(labels_for_dims(dims) == labels);
      const VinbergPair pair = make_vinberg_pair(z_grading_from_labels(alg, labels), 1);
      const QuiverElement x = canonical_open_element(dims);
      const Element e = sl.from_matrix(quiver_to_standard(as_matrix(dims, x)));
      CHECK(in_open_orbit(pair, e));
      CHECK(sl.from_matrix(quiver_to_standard(zeta_matrix(dims))) == pair.grading.zeta());
      CHECK(quiver_toledo_rank(dims, x) == toledo_rank(pair, e));
      CHECK(quiver_toledo_rank(dims, x) == pair_toledo_rank(pair));
      CHECK(quiver_jm_regular(dims) == jm_regular(pair).regular);
      CHECK(quiver_jm_regular(dims) == jm_regular_at(pair, e).regular);
    }
  }
}
