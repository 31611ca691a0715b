#pragma once

#include <optional>
#include <utility>

#include "liegrade/linalg.hpp"

namespace liegrade {

struct BoundInput {
  int genus = 2;
  // alpha = lambda zeta.
  Rational lambda = 0;
  // rank_T(phi^+) and rank_T(phi^-).
  Rational rank_plus = 0;
  Rational rank_minus = 0;
  // B*(gamma, gamma) B(zeta, zeta).
  Rational zeta_pairing = 0;
  // 1 or 2; only read by the quaternionic bounds.
  int kappa = 2;
};

// Throws InvalidInput unless genus >= 2 and both ranks are non-negative.
void validate(const BoundInput& in);

// tau_L = rank_plus (2g-2) + lambda (zeta_pairing - rank_plus); the bound is -tau_L <= tau.
Rational amw_lower(const BoundInput& in);

// tau_U = rank_minus (2g-2) + lambda (zeta_pairing - rank_minus), available
// only when m = 2 or phi^- = 0.
std::optional<Rational> amw_upper(const BoundInput& in, int m, bool phi_minus_zero);

// -(2g-2) rank_T(G_0, g_1).
Rational coarse_bound(int genus, const Rational& pair_rank);

// (-tau_L, tau_U) with
//   tau_L = rank_plus (2g-2) + lambda (2 kappa - rank_plus),
//   tau_U = kappa rank_minus (2g-2) + lambda (2 kappa - kappa rank_minus).
std::pair<Rational, Rational> quaternionic_bounds(const BoundInput& in);

// [-4(2g-2), 2(2g-2)] for kappa = 2 and [-(2g-2), 2g-2] for kappa = 1.
std::pair<Rational, Rational> quaternionic_coarse_bounds(int genus, int kappa);

}  // namespace liegrade
