#include <doctest.h>

#include <numeric>

#include "liegrade/quaternionic.hpp"
#include "liegrade/quiver.hpp"

using namespace liegrade;

namespace {

std::vector<const char*> all_types() {
  return {"A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6", "C3", "C4", "C5", "C6",
          "D4", "D5", "D6", "E6", "E7", "E8", "F4", "G2"};
}

}  // namespace

TEST_CASE("piece dimensions") {
  CHECK(build_quaternionic(LieType::parse("A2")).piece_dims == std::vector<std::size_t>{1, 2, 2, 2, 1});
  CHECK(build_quaternionic(LieType::parse("C2")).piece_dims == std::vector<std::size_t>{1, 2, 4, 2, 1});
  CHECK(build_quaternionic(LieType::parse("G2")).piece_dims == std::vector<std::size_t>{1, 4, 4, 4, 1});
  CHECK(build_quaternionic(LieType::parse("E8")).piece_dims == std::vector<std::size_t>{1, 56, 134, 56, 1});
  CHECK_THROWS_AS(build_quaternionic(LieType::parse("A1")), InvalidInput);
}

TEST_CASE("kappa") {
  CHECK(kappa_of(LieType::parse("C3")) == 1);
  CHECK(kappa_of(LieType::parse("E6")) == 2);
  CHECK(kappa_of(LieType::parse("A2")) == 2);
  CHECK(kappa_of(LieType::parse("B2")) == 1);
  CHECK(kappa_of(LieType::parse("B3")) == 2);
}

TEST_CASE("gradings of every small type") {
  for (const auto* name : all_types()) {
    CAPTURE(name);
    const QuaternionicData qd = build_quaternionic(LieType::parse(name));
    const auto& alg = qd.grading.algebra();
    const auto& rs = alg.root_system();
    const Root& beta = rs.highest_root();
    const auto& d = qd.piece_dims;

    REQUIRE(d.size() == 5);
    CHECK(d[0] == 1);
    CHECK(d[4] == 1);
    CHECK(d[1] == d[3]);
    CHECK(std::accumulate(d.begin(), d.end(), std::size_t{0}) == alg.dim());
    CHECK(qd.grading.zeta() == qd.t_beta);
    CHECK(alg.normalized()(qd.t_beta, qd.t_beta) == 2);
    CHECK(alg.normalized().dual_norm(beta) == 2);
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      auto r = alg.root_of(i);
      if (!r) continue;
      CHECK(*qd.grading.degree(i) == alg.normalized().dual(rs.roots()[*r], beta));
    }

    const VinbergPair plus = make_vinberg_pair(qd.grading, 1);
    CHECK(plus.gamma_norm == qd.kappa);
    CHECK(qd.kappa == kappa_of(rs.lie_type()));

    const LemmaPm2Report lemma = verify_lemma_pm2(qd, 1);
    CHECK(lemma.holds());
    CHECK(lemma.plus_two.triple->h == qd.t_beta);
    CHECK(lemma.minus_two.triple->h == Rational(-1) * qd.t_beta);

    const QuaternionicRanks r = quaternionic_ranks(qd);
    CHECK(r.rank_plus == (qd.kappa == 2 ? 4 : 1));
    CHECK(r.rank_minus == 1);
    CHECK(r.plus_jm_regular == (qd.kappa == 2));
    if (r.plus_jm_regular) CHECK(r.rank_plus == zeta_pairing(plus));
    CHECK(compute_quaternionic_ranks(qd, 9).rank_plus == r.rank_plus);
  }
}

TEST_CASE("symplectic rank goes through the non-regular triple") {
  const QuaternionicData qd = build_quaternionic(LieType::parse("C3"));
  const VinbergPair pair = make_vinberg_pair(qd.grading, 1);
  const JmRegularity jm = jm_regular(pair);
  CHECK_FALSE(jm.regular);
  const Sl2Triple t = jm_triple(pair, jm.e);
  CHECK(t.h != Rational(2) * qd.t_beta);
  CHECK(qd.grading.algebra().normalized()(qd.t_beta, t.h) == 2);
  CHECK(toledo_rank(pair, jm.e) == 1);
}

TEST_CASE("family A matches the (1, n-2, 1) quiver grading") {
  for (int n = 3; n <= 7; ++n) {
    CAPTURE(n);
    auto alg = ChevalleyAlgebra::build(LieType{'A', n - 1});
    const QuaternionicData qd = build_quaternionic(alg);
    const QuiverDims dims({1, n - 2, 1});
    const ZGrading quiver = z_grading_from_labels(alg, labels_for_dims(dims));
    CHECK(quiver.piece_dims() == qd.piece_dims);
    CHECK(quiver.zeta() == qd.t_beta);
    CHECK(quiver_toledo_rank(dims, canonical_open_element(dims)) == quaternionic_ranks(qd).rank_plus);
    CHECK(quiver_jm_regular(dims));
  }
}
