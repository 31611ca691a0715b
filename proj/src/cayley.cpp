#include "liegrade/cayley.hpp"

namespace liegrade {

Element ad_power(const ChevalleyAlgebra& alg, const Element& e, int k, Element x) {
  for (int i = 0; i < k; ++i) x = alg.bracket(e, x);
  return x;
}

namespace {

Matrix columns_on(const std::vector<Element>& xs, std::span<const std::size_t> idx) {
  std::vector<Vector> cols;
  for (const auto& x : xs) cols.push_back(restrict_to(x, idx));
  return Matrix::from_columns(cols, idx.size());
}

}  // namespace

namespace {

CayleyData build(VinbergPair pair, const JmRegularity& jm);

}  // namespace

CayleyData cayley_pair(const ZGrading& zg, std::uint64_t seed) {
  VinbergPair pair = make_vinberg_pair(zg, 1);
  JmRegularity jm = jm_regular(pair, seed);
  return build(std::move(pair), jm);
}

CayleyData cayley_pair_at(const ZGrading& zg, const Element& e) {
  VinbergPair pair = make_vinberg_pair(zg, 1);
  JmRegularity jm = jm_regular_at(pair, e);
  return build(std::move(pair), jm);
}

namespace {

CayleyData build(VinbergPair pair, const JmRegularity& jm) {
  if (!jm.regular) throw PreconditionFailed("Cayley data needs a JM-regular pair (G_0, g_1)");
  const auto& alg = pair.grading.algebra();
  const int m = pair.grading.depth();
  CayleyData cd{pair, *jm.triple, {}, {}, pair.grading.piece(1 - m), Matrix()};
  const auto& t = cd.triple;
  const auto& g0 = cd.pair.g0;

  const auto u = basis_elements(alg, g0);
  const std::vector<Element> triple{t.h, t.e, t.f};
  cd.c_basis = alg.centralizer(triple, u);

  // Casimir on g_0 (h acts by 0 there): ad e ad f + ad f ad e.
  const Matrix cas = alg.ad_block(t.e, cd.pair.gm1, g0) * alg.ad_block(t.f, g0, cd.pair.gm1) +
                     alg.ad_block(t.f, cd.pair.g1, g0) * alg.ad_block(t.e, g0, cd.pair.g1);
  Matrix shifted = cas;
  const Rational top = 2 * m * (m - 1);
  for (std::size_t i = 0; i < g0.size(); ++i) shifted(i, i) -= top;
  for (const auto& v : kernel_basis(shifted)) cd.v_basis.push_back(embed(alg.dim(), g0, v));

  std::vector<Element> images;
  for (auto b : cd.low) images.push_back(ad_power(alg, t.e, m - 1, alg.basis_element(b)));
  const Matrix vcols = columns_on(cd.v_basis, g0);
  cd.iso_matrix = Matrix(cd.v_basis.size(), images.size());
  for (std::size_t k = 0; k < images.size(); ++k) {
    for (std::size_t i = 0; i < alg.dim(); ++i)
      if (sgn(images[k][i]) != 0 && !pair.grading.degree(i).has_value())
        throw InternalError("ad(e)^{m-1} left the graded algebra");
    auto c = solve(vcols, restrict_to(images[k], g0));
    if (!c) throw InternalError("ad(e)^{m-1}(g_{1-m}) is not inside the Casimir eigenspace");
    for (std::size_t i = 0; i < c->size(); ++i) cd.iso_matrix(i, k) = (*c)[i];
  }
  if (rank(cd.iso_matrix) != cd.v_basis.size())
    throw InternalError("ad(e)^{m-1}(g_{1-m}) does not span the Casimir eigenspace");
  return cd;
}

}  // namespace

IsoCharacterReport verify_iso_and_character(const CayleyData& cd) {
  IsoCharacterReport r;
  if (cd.iso_matrix.rows() == cd.iso_matrix.cols()) {
    r.iso_determinant = determinant(cd.iso_matrix);
    r.iso_invertible = sgn(r.iso_determinant) != 0;
  }
  const auto& alg = cd.pair.grading.algebra();
  const Element& e = cd.triple.e;
  const int k = cd.pair.grading.depth() - 1;
  r.character_vanishes = r.centralizes_e = r.intertwines = true;
  for (const auto& c : cd.c_basis) {
    bool ok = true;
    if (sgn(toledo_character(cd.pair, c)) != 0) ok = r.character_vanishes = false;
    if (!alg.bracket(c, e).is_zero()) ok = r.centralizes_e = false;
    for (auto b : cd.low) {
      const Element x = alg.basis_element(b);
      if (ad_power(alg, e, k, alg.bracket(c, x)) != alg.bracket(c, ad_power(alg, e, k, x))) ok = r.intertwines = false;
    }
    if (!ok && !r.witness) r.witness = c;
  }
  return r;
}

ProjectionParts project(const CayleyData& cd, const Element& x) {
  const auto& alg = cd.pair.grading.algebra();
  const auto& g0 = cd.pair.g0;
  const auto& K = alg.killing();
  std::vector<Element> cv = cd.c_basis;
  cv.insert(cv.end(), cd.v_basis.begin(), cd.v_basis.end());

  // Complement: x in g_0 with K(x, y) = 0 for y in c + V.
  Matrix pairing(cv.size(), g0.size());
  for (std::size_t i = 0; i < cv.size(); ++i)
    for (std::size_t k = 0; k < g0.size(); ++k) pairing(i, k) = K(cv[i], alg.basis_element(g0[k]));
  std::vector<Element> comp;
  for (const auto& v : kernel_basis(pairing)) comp.push_back(embed(alg.dim(), g0, v));

  std::vector<Element> all = cv;
  all.insert(all.end(), comp.begin(), comp.end());
  const Matrix cols = columns_on(all, g0);
  if (all.size() != g0.size() || rank(cols) != g0.size())
    throw InternalError("c + V + complement is not a direct sum decomposition of g_0");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0 && cd.pair.grading.degree(i) != 0) throw InvalidInput("projection needs an element of g_0");
  auto coef = solve(cols, restrict_to(x, g0));
  if (!coef) throw InternalError("decomposition of g_0 failed");
  ProjectionParts p{alg.zero(), alg.zero(), alg.zero()};
  const std::size_t nc = cd.c_basis.size(), nv = cd.v_basis.size();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (sgn((*coef)[i]) == 0) continue;
    Element& part = i < nc ? p.c : (i < nc + nv ? p.v : p.w);
    part += (*coef)[i] * all[i];
  }
  return p;
}

ProjectionVerdict bracket_projection_test(const CayleyData& cd) {
  const auto& alg = cd.pair.grading.algebra();
  ProjectionVerdict out;
  for (std::size_t i = 0; i < cd.v_basis.size(); ++i)
    for (std::size_t j = i + 1; j < cd.v_basis.size(); ++j) {
      ProjectionParts p = project(cd, alg.bracket(cd.v_basis[i], cd.v_basis[j]));
      if (p.v.is_zero() && p.w.is_zero()) continue;
      const bool both = !p.c.is_zero() && !p.v.is_zero();
      if (out.theta_pair_candidate || both) {
        const bool had_both = out.parts && !out.parts->c.is_zero() && !out.parts->v.is_zero();
        if (!had_both) {
          out.witness = std::make_pair(i, j);
          out.parts = std::move(p);
        }
      }
      out.theta_pair_candidate = false;
    }
  return out;
}

}  // namespace liegrade
