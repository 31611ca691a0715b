#include "liegrade/chevalley.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace liegrade {

// ---------------------------------------------------------------------------
// Element

Element& Element::operator+=(const Element& o) {
  if (o.size() != size()) throw InvalidInput("element sum: dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (o.size() != size()) throw InvalidInput("element difference: dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Element& Element::operator*=(const Rational& s) {
  for (auto& x : coords_) x *= s;
  return *this;
}

Vector restrict_to(const Element& x, std::span<const std::size_t> indices) {
  Vector v(indices.size());
  for (std::size_t k = 0; k < indices.size(); ++k) v[k] = x[indices[k]];
  return v;
}

Element embed(std::size_t dim, std::span<const std::size_t> indices, std::span<const Rational> coords) {
  if (coords.size() != indices.size()) throw InvalidInput("embed: length mismatch");
  Element x(dim);
  for (std::size_t k = 0; k < indices.size(); ++k) x[indices[k]] = coords[k];
  return x;
}

// ---------------------------------------------------------------------------
// InvariantForm

InvariantForm::InvariantForm(const RootSystem& rs, Matrix cartan_gram, std::vector<Rational> root_pairs)
    : rs_(&rs), cartan_gram_(std::move(cartan_gram)), root_pairs_(std::move(root_pairs)) {
  const std::size_t r = cartan_gram_.rows();
  cartan_gram_inverse_ = Matrix(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    Vector e(r);
    e[j] = 1;
    auto col = solve(cartan_gram_, e);
    if (!col) throw InternalError("invariant form is degenerate on the Cartan subalgebra");
    for (std::size_t i = 0; i < r; ++i) cartan_gram_inverse_(i, j) = (*col)[i];
  }
}

Rational InvariantForm::operator()(const Element& a, const Element& b) const {
  if (a.size() != b.size()) throw InvalidInput("form: dimension mismatch");
  const std::size_t r = cartan_gram_.rows();
  const std::size_t np = root_pairs_.size();
  Rational s = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < r; ++j)
      if (sgn(b[j]) != 0) s += a[i] * b[j] * cartan_gram_(i, j);
  }
  for (std::size_t k = 0; k < np; ++k) {
    const std::size_t pos = r + k, neg = r + np + k;
    Rational t = a[pos] * b[neg] + a[neg] * b[pos];
    if (sgn(t) != 0) s += t * root_pairs_[k];
  }
  return s;
}

Rational InvariantForm::dual(const Root& a, const Root& b) const {
  const int r = rs_->rank();
  Vector va(r), vb(r);
  for (int i = 0; i < r; ++i) {
    va[i] = rs_->pairing(a, i);
    vb[i] = rs_->pairing(b, i);
  }
  return dot(va, cartan_gram_inverse_ * vb);
}

// ---------------------------------------------------------------------------
// ChevalleyAlgebra

ChevalleyAlgebra::ChevalleyAlgebra(RootSystem rs) : rs_(std::move(rs)) {
  dim_ = rank() + rs_.roots().size();
}

std::shared_ptr<const ChevalleyAlgebra> ChevalleyAlgebra::build(const LieType& t, JacobiCheck check) {
  return build(RootSystem::build(t), check);
}

std::shared_ptr<const ChevalleyAlgebra> ChevalleyAlgebra::build(RootSystem rs, JacobiCheck check) {
  std::shared_ptr<ChevalleyAlgebra> alg(new ChevalleyAlgebra(std::move(rs)));
  alg->compute_structure_constants();
  alg->fill_bracket_table();
  alg->build_forms();
  if (check == JacobiCheck::automatic) check = alg->dim_ <= 80 ? JacobiCheck::full : JacobiCheck::sampled;
  if (check != JacobiCheck::skip) {
    if (auto bad = alg->find_jacobi_violation(check == JacobiCheck::sampled))
      throw InternalError("Jacobi identity fails on basis triple (" + std::to_string(bad->i) + "," +
                          std::to_string(bad->j) + "," + std::to_string(bad->k) + ") for " +
                          alg->rs_.lie_type().name());
  }
  return alg;
}

namespace {

// Largest p with b - p a a root.
int string_below(const RootSystem& rs, const Root& a, const Root& b) {
  int p = 0;
  Root x = b - a;
  while (rs.is_root(x)) {
    ++p;
    x = x - a;
  }
  return p;
}

int to_int_checked(const Rational& q, const char* what) {
  if (q.get_den() != 1 || !q.get_num().fits_sint_p())
    throw InternalError(std::string("non-integral structure constant while computing ") + what);
  return static_cast<int>(q.get_num().get_si());
}

}  // namespace

void ChevalleyAlgebra::compute_structure_constants() {
  const auto& roots = rs_.roots();
  const std::size_t n_roots = roots.size();
  const std::size_t np = rs_.num_positive();
  n_table_.assign(n_roots * n_roots, 0);
  std::vector<bool> known(n_roots * n_roots, false);
  auto at = [&](std::size_t a, std::size_t b) -> int& { return n_table_[a * n_roots + b]; };
  auto set_pos = [&](std::size_t a, std::size_t b, int v) {
    at(a, b) = v;
    at(b, a) = -v;
    known[a * n_roots + b] = known[b * n_roots + a] = true;
  };

  // N for arbitrary roots, reduced to pairs of positive roots whose sum has
  // already been processed.
  auto general = [&](const Root& x, const Root& y, auto&& self) -> Rational {
    const Root c = x + y;
    const auto ci = rs_.index_of(c);
    if (!ci) return 0;
    const bool xp = height(x) > 0, yp = height(y) > 0;
    if (xp && yp) {
      const std::size_t xi = *rs_.index_of(x), yi = *rs_.index_of(y);
      if (!known[xi * n_roots + yi]) throw InternalError("structure constant requested out of order");
      return at(xi, yi);
    }
    if (!xp && !yp) return -self(negated(x), negated(y), self);
    if (!xp) return -self(y, x, self);
    // x positive, y negative.
    if (height(c) > 0) return -rs_.norm(c) / rs_.norm(x) * self(negated(y), c, self);
    return rs_.norm(c) / rs_.norm(y) * self(negated(c), x, self);
  };

  // Positive roots in height order; the extraspecial pair of xi is (r, xi - r)
  // with r the first positive root for which xi - r is a positive root.
  for (std::size_t k = 0; k < np; ++k) {
    const Root& xi = roots[k];
    if (height(xi) == 1) continue;
    std::vector<std::pair<std::size_t, std::size_t>> special;
    for (std::size_t a = 0; a < np; ++a) {
      const Root rest = xi - roots[a];
      auto b = rs_.index_of(rest);
      if (b && *b < np && a < *b) special.emplace_back(a, *b);
    }
    if (special.empty()) throw InternalError("non-simple positive root without a decomposition");
    const auto [r, s] = special.front();
    set_pos(r, s, string_below(rs_, roots[r], roots[s]) + 1);
    const Root& rr = roots[r];
    const Root& ss = roots[s];
    const Rational n_rs = at(r, s);
    for (std::size_t q = 1; q < special.size(); ++q) {
      const auto [a, b] = special[q];
      const Root& ra = roots[a];
      const Root& rb = roots[b];
      Rational sum = 0;
      const Root b_minus_r = rb - rr;
      if (rs_.is_root(b_minus_r))
        sum += general(rb, negated(rr), general) * general(ra, negated(ss), general) / rs_.norm(b_minus_r);
      const Root a_minus_r = ra - rr;
      if (rs_.is_root(a_minus_r))
        sum += general(negated(rr), ra, general) * general(rb, negated(ss), general) / rs_.norm(a_minus_r);
      const Rational n_ab = rs_.norm(xi) / n_rs * sum;
      const int v = to_int_checked(n_ab, "a special pair");
      const int expected = string_below(rs_, ra, rb) + 1;
      if (std::abs(v) != expected)
        throw InternalError("structure constant magnitude differs from the root-string value");
      set_pos(a, b, v);
    }
  }

  for (std::size_t a = 0; a < n_roots; ++a)
    for (std::size_t b = 0; b < n_roots; ++b) {
      if (known[a * n_roots + b]) continue;
      if (!rs_.is_root(roots[a] + roots[b])) continue;
      at(a, b) = to_int_checked(general(roots[a], roots[b], general), "a mixed pair");
    }
}

void ChevalleyAlgebra::fill_bracket_table() {
  const std::size_t r = rank();
  const auto& roots = rs_.roots();
  const std::size_t n_roots = roots.size();
  table_.assign(dim_ * dim_, {});
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t a = 0; a < n_roots; ++a) {
      const int p = rs_.pairing(roots[a], static_cast<int>(i));
      if (p == 0) continue;
      table_[i * dim_ + r + a] = {{r + a, p}};
      table_[(r + a) * dim_ + i] = {{r + a, -p}};
    }
  for (std::size_t a = 0; a < n_roots; ++a) {
    const std::size_t neg = rs_.negative_index(a);
    const Vector h = rs_.coroot(roots[a]);
    Expansion ex;
    for (std::size_t i = 0; i < r; ++i)
      if (sgn(h[i]) != 0) ex.push_back({i, to_int_checked(h[i], "a coroot")});
    table_[(r + a) * dim_ + r + neg] = ex;
    for (std::size_t b = 0; b < n_roots; ++b) {
      const int n = n_table_[a * n_roots + b];
      if (n == 0) continue;
      const std::size_t c = *rs_.index_of(roots[a] + roots[b]);
      table_[(r + a) * dim_ + r + b] = {{r + c, n}};
    }
  }
}

void ChevalleyAlgebra::build_forms() {
  const std::size_t r = rank();
  const std::size_t np = rs_.num_positive();
  const auto& roots = rs_.roots();
  const Matrix& fs = rs_.form_star();

  Matrix ng(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) ng(i, j) = Rational(4) * fs(i, j) / (fs(i, i) * fs(j, j));
  std::vector<Rational> npairs(np);
  for (std::size_t k = 0; k < np; ++k) npairs[k] = Rational(2) / rs_.norm(roots[k]);
  normalized_ = std::make_unique<InvariantForm>(rs_, std::move(ng), std::move(npairs));

  // Killing form: trace of ad(b_i) ad(b_j), evaluated on weight-zero pairs.
  auto trace_pair = [&](std::size_t i, std::size_t j) {
    std::int64_t t = 0;
    for (std::size_t k = 0; k < dim_; ++k)
      for (const auto& inner : bracket_basis(j, k))
        for (const auto& outer : bracket_basis(i, inner.index))
          if (outer.index == k) t += inner.coeff * outer.coeff;
    return t;
  };
  Matrix kg(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) kg(i, j) = Rational(static_cast<long>(trace_pair(i, j)));
  std::vector<Rational> kpairs(np);
  for (std::size_t k = 0; k < np; ++k)
    kpairs[k] = Rational(static_cast<long>(trace_pair(r + k, r + np + k)));
  killing_ = std::make_unique<InvariantForm>(rs_, std::move(kg), std::move(kpairs));
}

std::optional<std::size_t> ChevalleyAlgebra::root_of(std::size_t basis) const {
  if (basis < rank()) return std::nullopt;
  return basis - rank();
}

Root ChevalleyAlgebra::weight(std::size_t basis) const {
  if (basis < rank()) return Root(rank(), 0);
  return rs_.roots()[basis - rank()];
}

Element ChevalleyAlgebra::basis_element(std::size_t i) const {
  if (i >= dim_) throw InvalidInput("basis index out of range");
  Element x(dim_);
  x[i] = 1;
  return x;
}

Element ChevalleyAlgebra::root_vector(const Root& a) const {
  auto idx = rs_.index_of(a);
  if (!idx) throw InvalidInput("root_vector: not a root");
  return basis_element(root_basis_index(*idx));
}

Element ChevalleyAlgebra::cartan_element(std::span<const Rational> coords) const {
  if (coords.size() != rank()) throw InvalidInput("cartan_element: expected rank-many coordinates");
  Element x(dim_);
  for (std::size_t i = 0; i < rank(); ++i) x[i] = coords[i];
  return x;
}

Element ChevalleyAlgebra::coroot_element(const Root& a) const { return cartan_element(rs_.coroot(a)); }

int ChevalleyAlgebra::structure_constant(const Root& a, const Root& b) const {
  auto ai = rs_.index_of(a), bi = rs_.index_of(b);
  if (!ai || !bi) throw InvalidInput("structure_constant: arguments must be roots");
  return n_table_[*ai * rs_.roots().size() + *bi];
}

namespace {
std::vector<std::size_t> support(const Element& x) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) s.push_back(i);
  return s;
}
}  // namespace

Element ChevalleyAlgebra::bracket(const Element& a, const Element& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw InvalidInput("bracket: dimension mismatch");
  Element out(dim_);
  const auto sa = support(a), sb = support(b);
  Rational prod;
  for (auto i : sa)
    for (auto j : sb) {
      const auto& ex = bracket_basis(i, j);
      if (ex.empty()) continue;
      prod = a[i] * b[j];
      for (const auto& t : ex) out[t.index] += prod * static_cast<long>(t.coeff);
    }
  return out;
}

Matrix ChevalleyAlgebra::ad_block(const Element& x, std::span<const std::size_t> domain,
                                  std::span<const std::size_t> codomain) const {
  if (x.size() != dim_) throw InvalidInput("ad_block: dimension mismatch");
  std::vector<long> row_of(dim_, -1);
  for (std::size_t k = 0; k < codomain.size(); ++k) row_of[codomain[k]] = static_cast<long>(k);
  Matrix m(codomain.size(), domain.size());
  const auto sx = support(x);
  for (std::size_t c = 0; c < domain.size(); ++c)
    for (auto i : sx)
      for (const auto& t : bracket_basis(i, domain[c])) {
        const long row = row_of[t.index];
        if (row < 0) continue;
        m(static_cast<std::size_t>(row), c) += x[i] * static_cast<long>(t.coeff);
      }
  return m;
}

Matrix ChevalleyAlgebra::ad(const Element& x) const {
  std::vector<std::size_t> all(dim_);
  for (std::size_t i = 0; i < dim_; ++i) all[i] = i;
  return ad_block(x, all, all);
}

Rational ChevalleyAlgebra::killing_trace(const Element& a, const Element& b) const {
  return (ad(a) * ad(b)).trace();
}

std::vector<Element> ChevalleyAlgebra::centralizer(std::span<const Element> S, std::span<const Element> U) const {
  std::vector<Vector> rows;
  for (const auto& s : S) {
    std::vector<Element> images;
    images.reserve(U.size());
    for (const auto& u : U) images.push_back(bracket(u, s));
    for (std::size_t c = 0; c < dim_; ++c) {
      Vector row(U.size());
      bool nz = false;
      for (std::size_t k = 0; k < U.size(); ++k) {
        row[k] = images[k][c];
        nz = nz || sgn(row[k]) != 0;
      }
      if (nz) rows.push_back(std::move(row));
    }
  }
  std::vector<Element> basis;
  if (rows.empty()) {
    basis.assign(U.begin(), U.end());
    // Drop dependent members of U.
    std::vector<Vector> cols;
    for (const auto& u : U) cols.push_back(u.coords());
    std::vector<Element> indep;
    for (auto c : independent_columns(Matrix::from_columns(cols, dim_))) indep.push_back(U[c]);
    return indep;
  }
  const Matrix m = Matrix::from_rows(rows, U.size());
  for (const auto& v : kernel_basis(m)) {
    Element u(dim_);
    for (std::size_t k = 0; k < U.size(); ++k)
      if (sgn(v[k]) != 0) u += v[k] * U[k];
    if (!u.is_zero()) basis.push_back(std::move(u));
  }
  return basis;
}

std::optional<ChevalleyAlgebra::Triple> ChevalleyAlgebra::find_jacobi_violation(bool sampled, std::uint64_t seed,
                                                                               std::size_t samples) const {
  std::vector<std::int64_t> acc(dim_, 0);
  std::vector<std::size_t> touched;
  auto add_nested = [&](std::size_t x, std::size_t y, std::size_t z) {
    for (const auto& inner : bracket_basis(y, z))
      for (const auto& outer : bracket_basis(x, inner.index)) {
        if (acc[outer.index] == 0) touched.push_back(outer.index);
        acc[outer.index] += inner.coeff * outer.coeff;
      }
  };
  auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
    add_nested(i, j, k);
    add_nested(j, k, i);
    add_nested(k, i, j);
    bool ok = true;
    for (auto t : touched) {
      if (acc[t] != 0) ok = false;
      acc[t] = 0;
    }
    touched.clear();
    return ok;
  };
  if (!sampled) {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        for (std::size_t k = j + 1; k < dim_; ++k)
          if (!check(i, j, k)) return Triple{i, j, k};
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, dim_ - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
    if (!check(i, j, k)) return Triple{i, j, k};
  }
  return std::nullopt;
}

}  // namespace liegrade
