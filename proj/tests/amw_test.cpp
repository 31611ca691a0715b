#include <doctest.h>

#include "liegrade/amw.hpp"
#include "liegrade/quaternionic.hpp"
#include "liegrade/quiver.hpp"
#include "liegrade/vinberg.hpp"

using namespace liegrade;

TEST_CASE("general lower bound") {
  CHECK(amw_lower({2, 0, 4, 0, 0}) == 8);
  CHECK(amw_lower({2, 0, 0, 0, 0}) == 0);
  CHECK(amw_lower({2, 1, 4, 0, 4}) == 8);
  CHECK(amw_lower({3, ratio(1, 2), 2, 0, 3}) == 8 + ratio(1, 2));
  CHECK_THROWS_AS(amw_lower({1, 0, 1, 0, 0}), InvalidInput);
  CHECK_THROWS_AS(amw_lower({2, 0, -1, 0, 0}), InvalidInput);
}

TEST_CASE("general upper bound") {
  CHECK(amw_upper({2, 0, 0, 1, 0}, 2, false) == Rational(2));
  CHECK_FALSE(amw_upper({2, 0, 0, 1, 0}, 3, false));
  CHECK(amw_upper({2, 0, 0, 0, 0}, 2, false) == Rational(0));
  CHECK(amw_upper({2, 0, 0, 0, 0}, 3, true) == Rational(0));
  CHECK(amw_upper({2, 2, 0, 1, 3}, 2, false) == Rational(6));
}

TEST_CASE("coarse bound") {
  CHECK(coarse_bound(2, 4) == -8);
  CHECK(coarse_bound(2, 0) == 0);
  CHECK(coarse_bound(3, 1) == -4);
  CHECK_THROWS_AS(coarse_bound(1, 1), InvalidInput);
}

TEST_CASE("quaternionic bounds") {
  CHECK(quaternionic_coarse_bounds(2, 2) == std::pair<Rational, Rational>{-8, 4});
  CHECK(quaternionic_coarse_bounds(2, 1) == std::pair<Rational, Rational>{-2, 2});
  CHECK(quaternionic_bounds({2, 0, 0, 0, 0, 2}) == std::pair<Rational, Rational>{0, 0});
  CHECK_THROWS_AS(quaternionic_bounds({2, 0, 0, 0, 0, 3}), InvalidInput);

  // Coarse bounds are the lambda = 0 bounds at the computed pair ranks.
  for (const auto* name : {"A2", "A4", "B3", "C2", "C3", "D4", "G2", "F4", "E6"}) {
    CAPTURE(name);
    const QuaternionicData qd = build_quaternionic(LieType::parse(name));
    const QuaternionicRanks r = compute_quaternionic_ranks(qd);
    for (int g = 2; g <= 5; ++g) {
      const BoundInput in{g, 0, r.rank_plus, r.rank_minus, 0, qd.kappa};
      CHECK(quaternionic_bounds(in) == quaternionic_coarse_bounds(g, qd.kappa));
    }
  }
}

TEST_CASE("lower bound is monotone in the rank for lambda <= 2g - 2") {
  for (int g = 2; g <= 4; ++g)
    for (int l = -4; l <= 2 * g - 2; ++l)
      for (int rp = 0; rp < 6; ++rp) {
        const BoundInput a{g, l, rp, 0, 3}, b{g, l, rp + 1, 0, 3};
        CHECK(amw_lower(a) <= amw_lower(b));
      }
}

TEST_CASE("U(1,1) quiver bundles respect the m = 2 bounds at g = 2") {
  // A nonzero phi+ : E_0 -> E_1 K needs deg E_1 - deg E_0 + 2g - 2 >= 0, and
  // likewise phi- : E_1 -> E_0 K.
  const int g = 2;
  const QuiverDims dims({1, 1});
  auto alg = ChevalleyAlgebra::build(LieType::parse("A1"));
  const VinbergPair pair = make_vinberg_pair(z_grading_from_labels(alg, labels_for_dims(dims)), 1);
  const Rational rank = pair_toledo_rank(pair);
  CHECK(rank == 1);
  const BoundInput in{g, 0, rank, rank, zeta_pairing(pair)};
  const Rational lower = -amw_lower(in);
  const Rational upper = *amw_upper(in, 2, false);
  Rational lo = 0, hi = 0;
  for (int a = -10; a <= 10; ++a) {
    if (-a - a + 2 * g - 2 < 0 || a + a + 2 * g - 2 < 0) continue;
    const Rational tau = toledo_invariant({dims.d, {a, -a}, g});
    CHECK(tau >= lower);
    CHECK(tau <= upper);
    lo = std::min(lo, tau);
    hi = std::max(hi, tau);
  }
  CHECK(lo == lower);
  CHECK(hi == upper);
}
