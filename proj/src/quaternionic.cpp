#include "liegrade/quaternionic.hpp"

namespace liegrade {

int kappa_of(const LieType& t) {
  t.validate();
  if (t.family == 'C' || (t.family == 'B' && t.rank == 2)) return 1;
  return 2;
}

QuaternionicData build_quaternionic(const LieType& t) { return build_quaternionic(ChevalleyAlgebra::build(t)); }

QuaternionicData build_quaternionic(std::shared_ptr<const ChevalleyAlgebra> alg) {
  const auto& rs = alg->root_system();
  const LieType t = rs.lie_type();
  if (t.family == 'A' && t.rank == 1) throw InvalidInput("A1 has no quaternionic pair: g_1 = 0");
  const Root& beta = rs.highest_root();
  std::vector<int> labels(rs.rank());
  for (int k = 0; k < rs.rank(); ++k) {
    const Rational v = rs.inner(rs.simple_root(k), beta);
    if (v.get_den() != 1) throw InternalError("B*(alpha_k, beta) is not an integer");
    labels[k] = static_cast<int>(v.get_num().get_si());
  }
  ZGrading zg = z_grading_from_labels(alg, labels);
  Element t_beta = alg->coroot_element(beta);
  if (zg.zeta() != t_beta) throw InternalError("grading element differs from the coroot of the highest root");
  for (std::size_t i = 0; i < alg->dim(); ++i)
    if (Rational(*zg.degree(i)) != rs.inner(alg->weight(i), beta))
      throw InternalError("degree differs from B*(alpha, beta)");
  if (zg.depth() != 3 || zg.piece_dim(2) != 1 || zg.piece_dim(-2) != 1)
    throw InternalError("highest-root grading is not of the form g_{-2} + ... + g_2 with dim g_2 = 1");

  QuaternionicData qd{t, zg, t_beta, kappa_of(t), zg.piece_dims()};
  const VinbergPair pair = make_vinberg_pair(qd.grading, 1);
  if (pair.gamma_norm != qd.kappa)
    throw InternalError("kappa from the family rule differs from B*(gamma, gamma) = " + to_string(pair.gamma_norm));
  return qd;
}

LemmaPm2Report verify_lemma_pm2(const QuaternionicData& qd, std::uint64_t seed) {
  return {jm_regular(make_vinberg_pair(qd.grading, 2), seed), jm_regular(make_vinberg_pair(qd.grading, -2), seed)};
}

QuaternionicRanks compute_quaternionic_ranks(const QuaternionicData& qd, std::uint64_t seed) {
  QuaternionicRanks r;
  const VinbergPair plus = make_vinberg_pair(qd.grading, 1);
  const VinbergPair minus = make_vinberg_pair(qd.grading, -2);
  r.rank_plus = pair_toledo_rank(plus, seed);
  r.rank_minus = pair_toledo_rank(minus, seed);
  const JmRegularity jm = jm_regular(plus, seed);
  r.plus_jm_regular = jm.regular;
  if (jm.regular && zeta_pairing(plus) != r.rank_plus)
    throw InternalError("JM-regular pair with rank_T != B*(gamma,gamma) B(zeta,zeta)");
  return r;
}

QuaternionicRanks quaternionic_ranks(const QuaternionicData& qd, std::uint64_t seed) {
  QuaternionicRanks r = compute_quaternionic_ranks(qd, seed);
  const Rational want_plus = qd.kappa == 2 ? 4 : 1;
  if (r.rank_plus != want_plus || r.rank_minus != 1)
    throw VerificationFailure(qd.type.name() + ": quaternionic ranks (" + to_string(r.rank_plus) + ", " +
                              to_string(r.rank_minus) + ") differ from (" + to_string(want_plus) + ", 1)");
  return r;
}

}  // namespace liegrade
