#include <algorithm>

#include "liegrade/amw.hpp"
#include "liegrade/cayley.hpp"
#include "liegrade/cli/commands.hpp"
#include "liegrade/quaternionic.hpp"
#include "liegrade/quiver.hpp"

namespace liegrade::cli {

namespace {

const std::vector<std::string> quaternionic_types{"A2", "A3", "B3", "C2", "C3", "D4", "G2", "F4", "E6"};

Json pair_of(const Rational& a, const Rational& b) { return Json({to_string(a), to_string(b)}); }

// Matrices below are written in the quiver basis V_0, V_1, ... as in the
// source; SlMatrices uses the reversed order.
Element from_quiver(const SlMatrices& sl, const Matrix& m) { return sl.from_matrix(quiver_to_standard(m)); }
Matrix to_quiver(const SlMatrices& sl, const Element& x) { return quiver_to_standard(sl.to_matrix(x)); }

Matrix block_diag(const std::vector<Matrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  Matrix m(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return m;
}

bool same_span(const std::vector<Element>& a, const std::vector<Element>& b) {
  auto stack = [](const std::vector<Element>& xs) {
    std::vector<Vector> rows;
    for (const auto& x : xs) rows.push_back(x.coords());
    return rows;
  };
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  const std::size_t dim = a.front().size();
  auto both = stack(a);
  for (auto& v : stack(b)) both.push_back(v);
  const std::size_t ra = rank(Matrix::from_rows(stack(a), dim)), rb = rank(Matrix::from_rows(stack(b), dim));
  return ra == rb && ra == rank(Matrix::from_rows(both, dim));
}

void quaternionic_checks(Report& r, std::uint64_t seed) {
  Json kappas = Json::object();
  for (const auto& name : quaternionic_types) {
    const QuaternionicData qd = build_quaternionic(LieType::parse(name));
    const bool sp = qd.type.family == 'C';
    const QuaternionicRanks qr = compute_quaternionic_ranks(qd, seed);
    r.check("quaternionic.ranks." + name, "quaternionic Toledo ranks", sp ? pair_of(1, 1) : pair_of(4, 1),
            pair_of(qr.rank_plus, qr.rank_minus));
    const LemmaPm2Report lem = verify_lemma_pm2(qd, seed);
    r.check("quaternionic.pm2_jm_regular." + name, "JM-regularity of the pieces of degree 2 and -2",
            Json({true, true}), Json({lem.plus_two.regular, lem.minus_two.regular}));
    r.check("quaternionic.kappa." + name, "kappa rule for the quaternionic grading", sp ? 1 : 2, qd.kappa);
    r.check("quaternionic.plus_jm_regular." + name, sp ? "sp_2n is not JM-regular" : "rank of (G_0, g_1)", !sp,
            qr.plus_jm_regular);
    const VinbergPair pair = make_vinberg_pair(qd.grading, 1);
    r.check("quaternionic.dual_factor." + name, "dual invariant differs by a negative constant",
            to_string(sp ? Rational(-1) : Rational(-1, 2)), to_string(dual_toledo_factor(pair)));
    kappas[name] = qd.kappa;
  }
  r.results["kappa_table"] = kappas;
}

void bound_checks(Report& r) {
  const auto [l2, h2] = quaternionic_coarse_bounds(2, 2);
  r.check("amw.coarse.kappa2.g2", "coarse quaternionic bounds", pair_of(-8, 4), pair_of(l2, h2));
  const auto [l1, h1] = quaternionic_coarse_bounds(2, 1);
  r.check("amw.coarse.kappa1.g2", "coarse quaternionic bounds for sp_2n", pair_of(-2, 2), pair_of(l1, h1));
}

void toledo_checks(Report& r) {
  const QuiverHiggsTopology t{{1, 1, 1}, {1, 0, -1}, 2};
  r.check("toledo.dims111", "Toledo invariant of quiver Higgs bundles", "-4", to_string(toledo_invariant(t)));
  for (auto [p, q, a] : {std::array<int, 3>{1, 1, -1}, {2, 1, 3}, {1, 3, -2}, {3, 2, 5}}) {
    const QuiverHiggsTopology u{{p, q}, {a, -a}, 2};
    r.check("toledo.two_vertex." + std::to_string(p) + "_" + std::to_string(q) + "_" + std::to_string(a),
            "Toledo invariant of U(p,q)-Higgs bundles", to_string(ratio(2 * (p * -a - q * a), p + q)),
            to_string(toledo_invariant(u)));
  }
  r.check("quiver.jm_regular.111", "JM-regular when all ranks are equal", true, quiver_jm_regular(QuiverDims({1, 1, 1})));
  r.check("quiver.jm_regular.131", "the (1,n-2,1) quiver is JM-regular", true, quiver_jm_regular(QuiverDims({1, 3, 1})));
}

void cayley111(Report& r) {
  const QuiverDims dims({1, 1, 1});
  auto alg = ChevalleyAlgebra::build(LieType{'A', 2});
  const SlMatrices sl(*alg);
  const ZGrading zg = z_grading_from_labels(alg, labels_for_dims(dims));
  const Matrix e_paper{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  const CayleyData cd = cayley_pair_at(zg, from_quiver(sl, e_paper));
  r.check("cayley.111.dim_c", "Cayley data for ranks (1,1,1)", 0, cd.c_basis.size());
  r.check("cayley.111.dim_V", "Cayley data for ranks (1,1,1)", 1, cd.v_basis.size());
  Matrix low(3, 3);
  low(0, 2) = 1;
  const Element image = ad_power(*alg, cd.triple.e, 2, from_quiver(sl, low));
  r.check("cayley.111.iso_image", "Cayley data for ranks (1,1,1)", to_json(Matrix{{1, 0, 0}, {0, -2, 0}, {0, 0, 1}}),
          to_json(to_quiver(sl, image)));
  r.check("cayley.111.theta_candidate", "V is abelian", true, bracket_projection_test(cd).theta_pair_candidate);
  r.check("cayley.111.component_group", "C = mu_3", 3,
          block_scalar_stabilizer_order(dims, canonical_open_element(dims)));
}

void cayley222(Report& r) {
  const QuiverDims dims({2, 2, 2});
  auto alg = ChevalleyAlgebra::build(LieType{'A', 5});
  const SlMatrices sl(*alg);
  const ZGrading zg = z_grading_from_labels(alg, labels_for_dims(dims));
  const Element e = from_quiver(sl, as_matrix(dims, canonical_open_element(dims)));
  const CayleyData cd = cayley_pair_at(zg, e);
  r.check("cayley.222.dim_c", "Cayley data for ranks (2,2,2)", 3, cd.c_basis.size());
  r.check("cayley.222.dim_V", "Cayley data for ranks (2,2,2)", 4, cd.v_basis.size());

  std::vector<Element> c_paper, v_paper;
  for (const Matrix& x : {Matrix{{1, 0}, {0, -1}}, Matrix{{0, 1}, {0, 0}}, Matrix{{0, 0}, {1, 0}}})
    c_paper.push_back(from_quiver(sl, block_diag({x, x, x})));
  for (const Matrix& x : {Matrix{{1, 0}, {0, 0}}, Matrix{{0, 1}, {0, 0}}, Matrix{{0, 0}, {1, 0}}, Matrix{{0, 0}, {0, 1}}})
    v_paper.push_back(from_quiver(sl, block_diag({x, x * Rational(-2), x})));
  r.check("cayley.222.c_is_diagonal_sl2", "Cayley data for ranks (2,2,2)", true, same_span(c_paper, cd.c_basis));
  r.check("cayley.222.V_is_diag_X_-2X_X", "Cayley data for ranks (2,2,2)", true, same_span(v_paper, cd.v_basis));

  const Matrix X{{0, -1}, {1, 0}}, Xp{{0, 1}, {1, 0}}, B{{1, 0}, {0, -1}};
  const Element v = from_quiver(sl, block_diag({X, X * Rational(-2), X}));
  const Element vp = from_quiver(sl, block_diag({Xp, Xp * Rational(-2), Xp}));
  // The displayed identity holds for [v', v] = -[v, v'].
  const Element br = alg->bracket(vp, v);
  const ProjectionParts parts = project(cd, br);
  r.check("cayley.222.bracket", "bracket of the witness pair", to_json(block_diag({B * Rational(2), B * Rational(8), B * Rational(2)})),
          to_json(to_quiver(sl, br)));
  r.check("cayley.222.c_projection", "projection of the witness bracket to c", to_json(block_diag({B * Rational(4), B * Rational(4), B * Rational(4)})),
          to_json(to_quiver(sl, parts.c)));
  r.check("cayley.222.V_projection", "projection of the witness bracket to V", to_json(block_diag({B * Rational(-2), B * Rational(4), B * Rational(-2)})),
          to_json(to_quiver(sl, parts.v)));
  r.check("cayley.222.rest", "projection of the witness bracket to the complement", true, parts.w.is_zero());
  const ProjectionVerdict pv = bracket_projection_test(cd);
  r.check("cayley.222.not_theta_pair", "(C, V) is not a Vinberg theta-pair", false, pv.theta_pair_candidate);
  r.check("cayley.222.witness_both_projections", "nonzero projection to both V and c", true,
          pv.parts && !pv.parts->c.is_zero() && !pv.parts->v.is_zero());
  r.results["witness_222"] = {{"X", to_json(X)},
                              {"X_prime", to_json(Xp)},
                              {"bracket_v_prime_v", to_json(to_quiver(sl, br))},
                              {"c_part", to_json(to_quiver(sl, parts.c))},
                              {"V_part", to_json(to_quiver(sl, parts.v))}};
}

void kac_checks(Report& r) {
  const RootSystem a2 = RootSystem::build(LieType{'A', 2});
  for (int p0 = 0; p0 <= 3; ++p0)
    for (int p1 = 0; p0 + p1 <= 3; ++p1) {
      const int p2 = 3 - p0 - p1;
      const LiftResult res = kac_lift_check(a2, make_kac_labels(a2, {p0, p1, p2}));
      r.check("kac.A2." + std::to_string(p0) + std::to_string(p1) + std::to_string(p2), "type A always lifts",
              p0 > 0 ? "lifts directly" : "lifts after diagram automorphism", to_string(res.verdict));
    }
  const RootSystem g2 = RootSystem::build(LieType{'G', 2});
  r.check("kac.G2.010", "no lift without p_0 > 0", "no lift", to_string(kac_lift_check(g2, make_kac_labels(g2, {0, 1, 0})).verdict));
}

}  // namespace

Report verify_paper(std::uint64_t seed) {
  Report r;
  r.command = "verify-paper";
  quaternionic_checks(r, seed);
  bound_checks(r);
  toledo_checks(r);
  cayley111(r);
  cayley222(r);
  kac_checks(r);
  std::stable_sort(r.checks.begin(), r.checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  std::size_t passed = std::count_if(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.pass; });
  r.results["passed"] = passed;
  r.results["total"] = r.checks.size();
  return r;
}

}  // namespace liegrade::cli
