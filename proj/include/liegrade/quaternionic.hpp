#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "liegrade/vinberg.hpp"

namespace liegrade {

// The five-piece grading of g by the eigenvalues of ad(T_beta), beta the
// highest root: deg(alpha) = B*(alpha, beta) with B*(beta, beta) = 2.
struct QuaternionicData {
  LieType type;
  ZGrading grading;
  Element t_beta;
  // 1 for sp_2n (C_n, and B_2 = C_2), 2 otherwise; equal to B*(gamma, gamma).
  int kappa = 2;
  // dim g_j, j = -2..2.
  std::vector<std::size_t> piece_dims;
};

// Throws InvalidInput for A_1, whose g_1 is zero.
QuaternionicData build_quaternionic(std::shared_ptr<const ChevalleyAlgebra> alg);
QuaternionicData build_quaternionic(const LieType& t);

// The family rule: 1 for sp_2n, 2 otherwise.
int kappa_of(const LieType& t);

struct LemmaPm2Report {
  // jm_regular on (G_0, g_2) and (G_0, g_{-2}).
  JmRegularity plus_two, minus_two;
  bool holds() const { return plus_two.regular && minus_two.regular; }
};

LemmaPm2Report verify_lemma_pm2(const QuaternionicData& qd, std::uint64_t seed = 0);

struct QuaternionicRanks {
  // rank_T(G_0, g_1) and rank_T(G_0, g_{-2}).
  Rational rank_plus, rank_minus;
  // Whether (G_0, g_1) is JM-regular; if so rank_plus is B*(gamma,gamma) B(zeta,zeta).
  bool plus_jm_regular = false;
};

// Computes both ranks from triples, independently of the stated values.
QuaternionicRanks compute_quaternionic_ranks(const QuaternionicData& qd, std::uint64_t seed = 0);
// As above, throwing VerificationFailure unless (rank_plus, rank_minus) is
// (4, 1) for kappa = 2 and (1, 1) for kappa = 1.
QuaternionicRanks quaternionic_ranks(const QuaternionicData& qd, std::uint64_t seed = 0);

}  // namespace liegrade
