#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "liegrade/grading.hpp"

namespace liegrade {

// g' = sum_k g_{kj}, graded by k, with grading element zeta / j.
// Throws InvalidInput if j = 0.
ZGrading regrade(const ZGrading& zg, int j);

// The representation of G_0 on one piece of a grading, regraded so that the
// piece sits in degree 1.
struct VinbergPair {
  ZGrading grading;
  int source_degree = 1;
  std::vector<std::size_t> g0, g1, gm1;
  // Root index of gamma, the first root of maximal length with g_gamma in g_1.
  std::size_t gamma = 0;
  // B*(gamma, gamma) for the normalized form.
  Rational gamma_norm;
};

// Throws InvalidInput if j = 0 or g_j = 0.
VinbergPair make_vinberg_pair(const ZGrading& zg, int j = 1);

// All roots of maximal length in g_1 (gamma is the first).
std::vector<std::size_t> gamma_candidates(const VinbergPair& pair);

// rank of x -> [x, e] from g_0 to g_1. Throws InvalidInput unless e is in g_1.
std::size_t orbit_dimension(const VinbergPair& pair, const Element& e);
bool in_open_orbit(const VinbergPair& pair, const Element& e);

// e in g_1 with nonzero random coordinates in [-3, 3], redrawn until its
// orbit is open. Deterministic per seed.
Element generic_element(const VinbergPair& pair, std::uint64_t seed = 0);

struct Sl2Triple {
  Element h, e, f;
  // zeta - h/2.
  Element s;
};

// Completes e in g_1 to (h, e, f) with h in g_0 and f in g_{-1}.
Sl2Triple jm_triple(const VinbergPair& pair, const Element& e);
// Throws InternalError unless [h,e] = 2e, [h,f] = -2f and [e,f] = h.
void verify_triple(const ChevalleyAlgebra& alg, const Sl2Triple& t);

// chi_T(x) = B(zeta, x) B*(gamma, gamma), for x in g_0.
Rational toledo_character(const VinbergPair& pair, const Element& x, const InvariantForm& form);
Rational toledo_character(const VinbergPair& pair, const Element& x);
// rank_T(e) = chi_T(h) / 2.
Rational toledo_rank(const VinbergPair& pair, const Element& e, const InvariantForm& form);
Rational toledo_rank(const VinbergPair& pair, const Element& e);
// rank_T(G_0, g_1), evaluated on generic_element(pair, seed).
Rational pair_toledo_rank(const VinbergPair& pair, std::uint64_t seed = 0);
// B*(gamma, gamma) B(zeta, zeta).
Rational zeta_pairing(const VinbergPair& pair, const InvariantForm& form);
Rational zeta_pairing(const VinbergPair& pair);

struct JmRegularity {
  bool regular = false;
  Element e;
  // Present when regular: (2 zeta, e, f).
  std::optional<Sl2Triple> triple;
  // When not regular: y over the g_0 coordinates with y^T ad(e) = 0 on
  // g_{-1} and y . (2 zeta) != 0.
  Vector witness;
};

// Decides whether [e, f] = 2 zeta has a solution f in g_{-1} for a certified
// open e.
JmRegularity jm_regular(const VinbergPair& pair, std::uint64_t seed = 0);
// The same test at a given e; throws InvalidInput unless e is in the open orbit.
JmRegularity jm_regular_at(const VinbergPair& pair, const Element& e);

// 1/(1-m) * B*(gamma', gamma') / B*(gamma, gamma) with gamma' the longest
// root in g_{1-m}. Throws PreconditionFailed if m < 2 or g_{1-m} = 0.
Rational dual_toledo_factor(const VinbergPair& pair);
std::size_t dual_gamma(const VinbergPair& pair);

// Centralizer of s = zeta - h/2 in g_0.
std::vector<Element> s_centralizer(const VinbergPair& pair, const Sl2Triple& t);

// Basis elements of the given indices.
std::vector<Element> basis_elements(const ChevalleyAlgebra& alg, std::span<const std::size_t> indices);

}  // namespace liegrade
