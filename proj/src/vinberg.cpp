#include "liegrade/vinberg.hpp"

#include <random>

namespace liegrade {

ZGrading regrade(const ZGrading& zg, int j) {
  if (j == 0) throw InvalidInput("regrading factor must be nonzero");
  std::vector<std::optional<int>> degrees(zg.degrees().size());
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const auto d = zg.degree(i);
    if (d && *d % j == 0) degrees[i] = *d / j;
  }
  Element zeta = Rational(1, 1) / Rational(j) * zg.zeta();
  return ZGrading(zg.algebra_ptr(), std::move(degrees), std::move(zeta));
}

std::vector<Element> basis_elements(const ChevalleyAlgebra& alg, std::span<const std::size_t> indices) {
  std::vector<Element> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(alg.basis_element(i));
  return out;
}

namespace {

std::size_t longest_root(const ChevalleyAlgebra& alg, const std::vector<std::size_t>& piece) {
  const auto& rs = alg.root_system();
  std::optional<std::size_t> best;
  Rational best_norm = -1;
  for (auto b : piece) {
    auto r = alg.root_of(b);
    if (!r) continue;
    const Rational n = rs.norm(rs.roots()[*r]);
    if (n > best_norm) {
      best_norm = n;
      best = *r;
    }
  }
  if (!best) throw PreconditionFailed("piece contains no root spaces");
  return *best;
}

void require_in(const VinbergPair& pair, const Element& x, const std::vector<std::size_t>& piece, const char* what) {
  if (x.size() != pair.grading.algebra().dim()) throw InvalidInput("element has the wrong dimension");
  std::vector<bool> in(x.size(), false);
  for (auto i : piece) in[i] = true;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!in[i] && sgn(x[i]) != 0) throw InvalidInput(std::string("element is not in ") + what);
}

}  // namespace

VinbergPair make_vinberg_pair(const ZGrading& zg, int j) {
  if (j == 0) throw InvalidInput("the degree-0 piece is not a Vinberg pair");
  if (zg.piece(j).empty()) throw InvalidInput("piece g_" + std::to_string(j) + " is zero");
  VinbergPair p{j == 1 ? zg : regrade(zg, j), j, {}, {}, {}, 0, 0};
  p.g0 = p.grading.piece(0);
  p.g1 = p.grading.piece(1);
  p.gm1 = p.grading.piece(-1);
  const auto& alg = p.grading.algebra();
  p.gamma = longest_root(alg, p.g1);
  p.gamma_norm = alg.root_system().norm(alg.root_system().roots()[p.gamma]);
  return p;
}

std::vector<std::size_t> gamma_candidates(const VinbergPair& pair) {
  const auto& alg = pair.grading.algebra();
  const auto& rs = alg.root_system();
  std::vector<std::size_t> out;
  for (auto b : pair.g1)
    if (auto r = alg.root_of(b); r && rs.norm(rs.roots()[*r]) == pair.gamma_norm) out.push_back(*r);
  return out;
}

std::size_t orbit_dimension(const VinbergPair& pair, const Element& e) {
  require_in(pair, e, pair.g1, "g_1");
  return rank(pair.grading.algebra().ad_block(e, pair.g0, pair.g1));
}

bool in_open_orbit(const VinbergPair& pair, const Element& e) { return orbit_dimension(pair, e) == pair.g1.size(); }

Element generic_element(const VinbergPair& pair, std::uint64_t seed) {
  const auto& alg = pair.grading.algebra();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 5);
  constexpr int attempts = 200;
  for (int a = 0; a < attempts; ++a) {
    Element e = alg.zero();
    for (auto i : pair.g1) {
      const int v = pick(rng);
      e[i] = v < 3 ? v - 3 : v - 2;  // -3..-1, 1..3
    }
    if (in_open_orbit(pair, e)) return e;
  }
  throw InternalError("no element of the open orbit found after " + std::to_string(attempts) + " draws");
}

void verify_triple(const ChevalleyAlgebra& alg, const Sl2Triple& t) {
  if (alg.bracket(t.h, t.e) != Rational(2) * t.e) throw InternalError("[h,e] != 2e");
  if (alg.bracket(t.h, t.f) != Rational(-2) * t.f) throw InternalError("[h,f] != -2f");
  if (alg.bracket(t.e, t.f) != t.h) throw InternalError("[e,f] != h");
}

Sl2Triple jm_triple(const VinbergPair& pair, const Element& e) {
  require_in(pair, e, pair.g1, "g_1");
  if (e.is_zero()) throw InvalidInput("cannot complete e = 0 to an sl2-triple");
  const auto& alg = pair.grading.algebra();
  const std::size_t dim = alg.dim();

  // h = [e, f0] with [h, e] = 2e, i.e. ad(e)^2 f0 = -2e, f0 in g_{-1}.
  const Matrix down = alg.ad_block(e, pair.gm1, pair.g0);
  const Matrix up = alg.ad_block(e, pair.g0, pair.g1);
  Vector rhs = restrict_to(e, pair.g1);
  for (auto& x : rhs) x = -2 * x;
  auto f0 = solve(up * down, rhs);
  if (!f0) throw InternalError("no h in [e, g_{-1}] with [h, e] = 2e");
  const Element h = alg.bracket(e, embed(dim, pair.gm1, *f0));

  // f in g_{-1} with [e, f] = h and [h, f] = -2f.
  Matrix eig = alg.ad_block(h, pair.gm1, pair.gm1);
  for (std::size_t i = 0; i < pair.gm1.size(); ++i) eig(i, i) += 2;
  const Matrix system = down.vstack(eig);
  Vector b = restrict_to(h, pair.g0);
  b.resize(b.size() + pair.gm1.size());
  auto f = solve(system, b);
  if (!f) throw InternalError("no f completing (h, e)");
  Sl2Triple t{h, e, embed(dim, pair.gm1, *f), pair.grading.zeta() - Rational(1, 2) * h};
  verify_triple(alg, t);
  return t;
}

Rational toledo_character(const VinbergPair& pair, const Element& x, const InvariantForm& form) {
  require_in(pair, x, pair.g0, "g_0");
  const auto& gamma = pair.grading.algebra().root_system().roots()[pair.gamma];
  return form(pair.grading.zeta(), x) * form.dual_norm(gamma);
}

Rational toledo_character(const VinbergPair& pair, const Element& x) {
  return toledo_character(pair, x, pair.grading.algebra().normalized());
}

Rational toledo_rank(const VinbergPair& pair, const Element& e, const InvariantForm& form) {
  if (e.is_zero()) return 0;
  return toledo_character(pair, jm_triple(pair, e).h, form) / 2;
}

Rational toledo_rank(const VinbergPair& pair, const Element& e) {
  return toledo_rank(pair, e, pair.grading.algebra().normalized());
}

Rational pair_toledo_rank(const VinbergPair& pair, std::uint64_t seed) {
  return toledo_rank(pair, generic_element(pair, seed));
}

Rational zeta_pairing(const VinbergPair& pair, const InvariantForm& form) {
  const auto& gamma = pair.grading.algebra().root_system().roots()[pair.gamma];
  return form(pair.grading.zeta(), pair.grading.zeta()) * form.dual_norm(gamma);
}

Rational zeta_pairing(const VinbergPair& pair) { return zeta_pairing(pair, pair.grading.algebra().normalized()); }

JmRegularity jm_regular(const VinbergPair& pair, std::uint64_t seed) { return jm_regular_at(pair, generic_element(pair, seed)); }

JmRegularity jm_regular_at(const VinbergPair& pair, const Element& e) {
  if (!in_open_orbit(pair, e)) throw InvalidInput("element is not in the open orbit");
  const auto& alg = pair.grading.algebra();
  JmRegularity res;
  res.e = e;
  const Matrix down = alg.ad_block(res.e, pair.gm1, pair.g0);
  const Element two_zeta = Rational(2) * pair.grading.zeta();
  const Vector b = restrict_to(two_zeta, pair.g0);
  auto out = solve_certified(down, b);
  if (auto* y = std::get_if<Inconsistent>(&out)) {
    res.witness = y->witness;
    return res;
  }
  Sl2Triple t{two_zeta, res.e, embed(alg.dim(), pair.gm1, std::get<Vector>(out)), alg.zero()};
  t.s = pair.grading.zeta() - Rational(1, 2) * t.h;
  verify_triple(alg, t);
  res.regular = true;
  res.triple = std::move(t);
  return res;
}

std::size_t dual_gamma(const VinbergPair& pair) {
  const int m = pair.grading.depth();
  if (m < 2) throw PreconditionFailed("dual invariant needs depth m >= 2");
  const auto& low = pair.grading.piece(1 - m);
  if (low.empty()) throw PreconditionFailed("g_{1-m} is zero");
  return longest_root(pair.grading.algebra(), low);
}

Rational dual_toledo_factor(const VinbergPair& pair) {
  const std::size_t g2 = dual_gamma(pair);
  const auto& rs = pair.grading.algebra().root_system();
  const int m = pair.grading.depth();
  return Rational(1, 1) / Rational(1 - m) * rs.norm(rs.roots()[g2]) / pair.gamma_norm;
}

std::vector<Element> s_centralizer(const VinbergPair& pair, const Sl2Triple& t) {
  const auto& alg = pair.grading.algebra();
  const auto u = basis_elements(alg, pair.g0);
  std::vector<Element> s{t.s};
  return alg.centralizer(s, u);
}

}  // namespace liegrade
