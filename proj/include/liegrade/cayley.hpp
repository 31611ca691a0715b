#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "liegrade/vinberg.hpp"

namespace liegrade {

struct CayleyData {
  VinbergPair pair;
  // (2 zeta, e, f) with e in the open orbit.
  Sl2Triple triple;
  // Centralizer of {h, e, f} in g_0.
  std::vector<Element> c_basis;
  // V = g_0 cap W, from ker(Casimir - 2m(m-1)) on g_0.
  std::vector<Element> v_basis;
  // Basis indices of g_{1-m}.
  std::vector<std::size_t> low;
  // Column k: coordinates of ad(e)^{m-1}(b_k), b_k in g_{1-m}, in v_basis.
  Matrix iso_matrix;
};

// Throws PreconditionFailed unless (G_0, g_1) is JM-regular, and
// InternalError if ad(e)^{m-1}(g_{1-m}) and the Casimir eigenspace differ.
CayleyData cayley_pair(const ZGrading& zg, std::uint64_t seed = 0);
// As above at a chosen e in the open orbit of g_1.
CayleyData cayley_pair_at(const ZGrading& zg, const Element& e);

// ad(e)^k applied to x.
Element ad_power(const ChevalleyAlgebra& alg, const Element& e, int k, Element x);

struct IsoCharacterReport {
  Rational iso_determinant;
  bool iso_invertible = false;
  bool character_vanishes = false;
  // [c, e] = 0 on the basis of c.
  bool centralizes_e = false;
  // ad(e)^{m-1}([c, x]) = [c, ad(e)^{m-1}(x)] for basis c and x in g_{1-m}.
  bool intertwines = false;
  // First basis element of c failing one of the checks.
  std::optional<Element> witness;
  bool holds() const { return iso_invertible && character_vanishes && centralizes_e && intertwines; }
};

IsoCharacterReport verify_iso_and_character(const CayleyData& cd);

// x in g_0 written as c + v + w with c in the centralizer, v in V and w in
// the Killing-orthogonal complement of c + V inside g_0.
struct ProjectionParts {
  Element c, v, w;
};

// Throws InternalError if c + V + complement is not a direct sum equal to g_0.
ProjectionParts project(const CayleyData& cd, const Element& x);

struct ProjectionVerdict {
  bool theta_pair_candidate = true;
  // Indices into v_basis and the decomposition of their bracket.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::optional<ProjectionParts> parts;
};

// Candidate iff [v, v'] lies in c for all basis pairs of V. Otherwise the
// witness prefers a pair whose bracket projects nontrivially to both c and V.
ProjectionVerdict bracket_projection_test(const CayleyData& cd);

}  // namespace liegrade
