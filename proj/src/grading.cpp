#include "liegrade/grading.hpp"

#include <algorithm>
#include <numeric>

namespace liegrade {

ZGrading::ZGrading(std::shared_ptr<const ChevalleyAlgebra> alg, std::vector<std::optional<int>> degrees, Element zeta,
                   std::vector<int> labels)
    : alg_(std::move(alg)), degrees_(std::move(degrees)), zeta_(std::move(zeta)), labels_(std::move(labels)) {
  const std::size_t dim = alg_->dim();
  if (degrees_.size() != dim || zeta_.size() != dim) throw InvalidInput("grading: dimension mismatch");
  int top = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!degrees_[i]) continue;
    pieces_[*degrees_[i]].push_back(i);
    top = std::max(top, std::abs(*degrees_[i]));
  }
  depth_ = top + 1;

  for (std::size_t i = 0; i < dim; ++i) {
    if (!degrees_[i]) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (!degrees_[j]) continue;
      for (const auto& t : alg_->bracket_basis(i, j))
        if (degrees_[t.index] != *degrees_[i] + *degrees_[j])
          throw InternalError("grading is not closed under the bracket");
    }
    Element image = alg_->bracket(zeta_, alg_->basis_element(i));
    if (image != Rational(*degrees_[i]) * alg_->basis_element(i))
      throw InternalError("ad(zeta) does not act on a piece by its degree");
  }
}

const std::vector<std::size_t>& ZGrading::piece(int j) const {
  static const std::vector<std::size_t> empty;
  auto it = pieces_.find(j);
  return it == pieces_.end() ? empty : it->second;
}

std::vector<std::size_t> ZGrading::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    if (degrees_[i]) s.push_back(i);
  return s;
}

std::size_t ZGrading::dim() const {
  std::size_t n = 0;
  for (const auto& [j, p] : pieces_) n += p.size();
  return n;
}

std::vector<std::size_t> ZGrading::piece_dims() const {
  std::vector<std::size_t> d;
  for (int j = 1 - depth_; j <= depth_ - 1; ++j) d.push_back(piece_dim(j));
  return d;
}

int root_degree(const Root& a, std::span<const int> labels) {
  int d = 0;
  for (std::size_t k = 0; k < a.size(); ++k) d += a[k] * labels[k];
  return d;
}

Element cartan_from_values(const ChevalleyAlgebra& alg, std::span<const Rational> values) {
  const std::size_t r = alg.rank();
  if (values.size() != r) throw InvalidInput("expected one value per simple root");
  const auto& c = alg.root_system().cartan_matrix();
  Matrix m(r, r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < r; ++i) m(k, i) = c[i][k];
  auto z = solve(m, values);
  if (!z) throw InternalError("Cartan matrix is singular");
  return alg.cartan_element(*z);
}

ZGrading z_grading_from_labels(std::shared_ptr<const ChevalleyAlgebra> alg, std::vector<int> labels) {
  const std::size_t r = alg->rank();
  if (labels.size() != r)
    throw InvalidInput("expected " + std::to_string(r) + " labels for " + alg->root_system().lie_type().name() +
                       ", got " + std::to_string(labels.size()));
  if (std::any_of(labels.begin(), labels.end(), [](int p) { return p < 0; }))
    throw InvalidInput("degree labels must be non-negative");
  if (std::all_of(labels.begin(), labels.end(), [](int p) { return p == 0; }))
    throw InvalidInput("degree labels must not all be zero");
  std::vector<std::optional<int>> degrees(alg->dim());
  for (std::size_t i = 0; i < alg->dim(); ++i) degrees[i] = root_degree(alg->weight(i), labels);
  Vector values(labels.begin(), labels.end());
  Element zeta = cartan_from_values(*alg, values);
  return ZGrading(std::move(alg), std::move(degrees), std::move(zeta), std::move(labels));
}

KacLabels make_kac_labels(const RootSystem& rs, std::vector<int> labels) {
  const auto marks = rs.affine_marks();
  if (labels.size() != marks.size())
    throw InvalidInput("expected " + std::to_string(marks.size()) + " Kac labels p_0..p_r for " +
                       rs.lie_type().name() + ", got " + std::to_string(labels.size()));
  if (std::any_of(labels.begin(), labels.end(), [](int p) { return p < 0; }))
    throw InvalidInput("Kac labels must be non-negative");
  KacLabels k;
  k.order = std::inner_product(labels.begin(), labels.end(), marks.begin(), 0);
  if (k.order < 1) throw InvalidInput("Kac labels give order m = 0");
  int g = 0;
  for (int p : labels) g = std::gcd(g, p);
  k.reduced_order = k.order / g;
  k.labels = std::move(labels);
  return k;
}

ZmGrading::ZmGrading(std::shared_ptr<const ChevalleyAlgebra> alg, int modulus, std::vector<int> residues)
    : alg_(std::move(alg)), m_(modulus), residues_(std::move(residues)) {
  if (m_ < 1) throw InvalidInput("modulus must be positive");
  if (residues_.size() != alg_->dim()) throw InvalidInput("Z/m grading: dimension mismatch");
  pieces_.resize(static_cast<std::size_t>(m_));
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    if (residues_[i] < 0 || residues_[i] >= m_) throw InvalidInput("residue out of range");
    pieces_[static_cast<std::size_t>(residues_[i])].push_back(i);
  }
  const std::size_t dim = alg_->dim();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (const auto& t : alg_->bracket_basis(i, j))
        if (residues_[t.index] != (residues_[i] + residues_[j]) % m_)
          throw InternalError("Z/m grading is not closed under the bracket");
}

std::vector<std::size_t> ZmGrading::piece_dims() const {
  std::vector<std::size_t> d;
  for (const auto& p : pieces_) d.push_back(p.size());
  return d;
}

namespace {
int mod(int a, int m) { return ((a % m) + m) % m; }
}  // namespace

ZmGrading zm_from_kac(std::shared_ptr<const ChevalleyAlgebra> alg, const KacLabels& kac) {
  const auto& rs = alg->root_system();
  if (kac.labels.size() != static_cast<std::size_t>(rs.rank() + 1))
    throw InvalidInput("Kac labels do not match the rank");
  std::span<const int> simple(kac.labels.data() + 1, kac.labels.size() - 1);
  std::vector<int> residues(alg->dim());
  for (std::size_t i = 0; i < alg->dim(); ++i) residues[i] = mod(root_degree(alg->weight(i), simple), kac.order);
  ZmGrading zm(std::move(alg), kac.order, std::move(residues));
  zm.source = kac;
  if (kac.reduced_order != kac.order)
    zm.warnings.push_back("gcd of the Kac labels is " + std::to_string(kac.order / kac.reduced_order) +
                          ": the automorphism has order " + std::to_string(kac.reduced_order) +
                          ", computing with the declared m = " + std::to_string(kac.order));
  return zm;
}

ZmGrading bar_pieces(const ZGrading& zg) { return bar_pieces(zg, zg.depth()); }

ZmGrading bar_pieces(const ZGrading& zg, int m) {
  if (m < zg.depth())
    throw InvalidInput("modulus " + std::to_string(m) + " is below the depth " + std::to_string(zg.depth()));
  const std::size_t dim = zg.algebra().dim();
  std::vector<int> residues(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!zg.contains(i)) throw InvalidInput("bar_pieces needs a grading of the whole algebra");
    residues[i] = mod(*zg.degree(i), m);
  }
  return ZmGrading(zg.algebra_ptr(), m, std::move(residues));
}

std::vector<std::vector<int>> affine_cartan_matrix(const RootSystem& rs) {
  const int r = rs.rank();
  const auto& c = rs.cartan_matrix();
  const Root& theta = rs.highest_root();
  std::vector<std::vector<int>> a(r + 1, std::vector<int>(r + 1, 0));
  a[0][0] = 2;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) a[i + 1][j + 1] = c[i][j];
    a[i + 1][0] = -rs.pairing(theta, i);
    Root simple(r, 0);
    simple[i] = 1;
    const Rational v = Rational(-2) * rs.inner(simple, theta) / rs.norm(theta);
    if (v.get_den() != 1) throw InternalError("non-integral affine Cartan entry");
    a[0][i + 1] = static_cast<int>(v.get_num().get_si());
  }
  return a;
}

std::vector<std::vector<int>> affine_diagram_automorphisms(const RootSystem& rs) {
  const auto a = affine_cartan_matrix(rs);
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<int>> found;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](int i, auto&& self) -> void {
    if (i == n) {
      found.push_back(perm);
      return;
    }
    for (int t = 0; t < n; ++t) {
      if (used[t]) continue;
      bool ok = a[t][t] == a[i][i];
      for (int k = 0; k < i && ok; ++k) ok = a[t][perm[k]] == a[i][k] && a[perm[k]][t] == a[k][i];
      if (!ok) continue;
      perm[i] = t;
      used[t] = true;
      self(i + 1, self);
      used[t] = false;
    }
  };
  extend(0, extend);
  std::sort(found.begin(), found.end());  // identity is lexicographically first
  return found;
}

std::string to_string(LiftVerdict v) {
  switch (v) {
    case LiftVerdict::directly: return "lifts directly";
    case LiftVerdict::after_automorphism: return "lifts after diagram automorphism";
    case LiftVerdict::no_lift: return "no lift";
  }
  return "?";
}

LiftResult kac_lift_check(const RootSystem& rs, const KacLabels& kac) {
  const auto& p = kac.labels;
  const int n = rs.rank() + 1;
  if (static_cast<int>(p.size()) != n) throw InvalidInput("Kac labels do not match the rank");
  LiftResult res;
  if (p[0] > 0) {
    res.verdict = LiftVerdict::directly;
    res.witness = p;
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    res.automorphism = id;
    res.moved_node = 0;
    return res;
  }
  const auto marks = rs.affine_marks();
  for (const auto& s : affine_diagram_automorphisms(rs)) {
    const int j = static_cast<int>(std::find(s.begin(), s.end(), 0) - s.begin());
    if (p[j] <= 0) continue;
    if (marks[j] != 1) throw InternalError("diagram automorphism moved a node with mark > 1 to node 0");
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[s[i]] = p[i];
    res.verdict = LiftVerdict::after_automorphism;
    res.witness = w;
    res.automorphism = s;
    res.moved_node = j;
    return res;
  }
  return res;
}

}  // namespace liegrade
