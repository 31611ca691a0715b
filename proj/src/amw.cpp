#include "liegrade/amw.hpp"

#include <string>

namespace liegrade {

namespace {
void check_genus(int g) {
  if (g < 2) throw InvalidInput("genus must be at least 2, got " + std::to_string(g));
}
void check_kappa(int k) {
  if (k != 1 && k != 2) throw InvalidInput("kappa must be 1 or 2, got " + std::to_string(k));
}
}  // namespace

void validate(const BoundInput& in) {
  check_genus(in.genus);
  if (sgn(in.rank_plus) < 0 || sgn(in.rank_minus) < 0) throw InvalidInput("Toledo ranks must be non-negative");
}

Rational amw_lower(const BoundInput& in) {
  validate(in);
  const Rational k = 2 * in.genus - 2;
  return in.rank_plus * k + in.lambda * (in.zeta_pairing - in.rank_plus);
}

std::optional<Rational> amw_upper(const BoundInput& in, int m, bool phi_minus_zero) {
  validate(in);
  if (m < 1) throw InvalidInput("depth m must be positive");
  if (m != 2 && !phi_minus_zero) return std::nullopt;
  const Rational k = 2 * in.genus - 2;
  return Rational(in.rank_minus * k + in.lambda * (in.zeta_pairing - in.rank_minus));
}

Rational coarse_bound(int genus, const Rational& pair_rank) {
  check_genus(genus);
  if (sgn(pair_rank) < 0) throw InvalidInput("Toledo rank must be non-negative");
  return -Rational(2 * genus - 2) * pair_rank;
}

std::pair<Rational, Rational> quaternionic_bounds(const BoundInput& in) {
  validate(in);
  check_kappa(in.kappa);
  const Rational k = 2 * in.genus - 2;
  const Rational kappa = in.kappa;
  const Rational tau_l = in.rank_plus * k + in.lambda * (2 * kappa - in.rank_plus);
  const Rational tau_u = kappa * in.rank_minus * k + in.lambda * (2 * kappa - kappa * in.rank_minus);
  return {-tau_l, tau_u};
}

std::pair<Rational, Rational> quaternionic_coarse_bounds(int genus, int kappa) {
  check_genus(genus);
  check_kappa(kappa);
  const Rational k = 2 * genus - 2;
  if (kappa == 2) return {-4 * k, 2 * k};
  return {-k, k};
}

}  // namespace liegrade
