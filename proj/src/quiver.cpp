#include "liegrade/quiver.hpp"

#include <algorithm>
#include <numeric>

namespace liegrade {

QuiverDims::QuiverDims(std::vector<int> dims) : d(std::move(dims)) {
  if (d.empty()) throw InvalidInput("quiver needs at least one vertex");
  if (std::any_of(d.begin(), d.end(), [](int x) { return x < 1; }))
    throw InvalidInput("quiver dimensions must be positive");
  if (n() < 2) throw InvalidInput("quiver total dimension n must be at least 2");
}

int QuiverDims::n() const { return std::accumulate(d.begin(), d.end(), 0); }

int QuiverDims::offset(int j) const { return std::accumulate(d.begin(), d.begin() + j, 0); }

Rational QuiverDims::alpha() const {
  long s = 0;
  for (int j = 0; j < vertices(); ++j) s += static_cast<long>(j) * d[j];
  return ratio(s, n());
}

void validate(const QuiverDims& dims, const QuiverElement& x) {
  const int m = dims.vertices();
  if (static_cast<int>(x.maps.size()) != m - 1)
    throw InvalidInput("expected " + std::to_string(m - 1) + " arrow maps, got " + std::to_string(x.maps.size()));
  for (int j = 0; j + 1 < m; ++j) {
    const auto& f = x.maps[j];
    if (f.rows() != static_cast<std::size_t>(dims.d[j + 1]) || f.cols() != static_cast<std::size_t>(dims.d[j]))
      throw InvalidInput("arrow f_" + std::to_string(j) + " must be " + std::to_string(dims.d[j + 1]) + "x" +
                         std::to_string(dims.d[j]));
  }
  if (x.back && (x.back->rows() != static_cast<std::size_t>(dims.d[0]) ||
                 x.back->cols() != static_cast<std::size_t>(dims.d[m - 1])))
    throw InvalidInput("back arrow must be " + std::to_string(dims.d[0]) + "x" + std::to_string(dims.d[m - 1]));
}

QuiverElement zero_element(const QuiverDims& dims) {
  QuiverElement x;
  for (int j = 0; j + 1 < dims.vertices(); ++j) x.maps.emplace_back(dims.d[j + 1], dims.d[j]);
  return x;
}

RankTuple rank_tuple(const QuiverDims& dims, const QuiverElement& x) {
  validate(dims, x);
  RankTuple r;
  const int m = dims.vertices();
  for (int i = 0; i < m; ++i) {
    Matrix comp = Matrix::identity(dims.d[i]);
    for (int j = i + 1; j < m; ++j) {
      comp = x.maps[j - 1] * comp;
      r[{i, j}] = rank(comp);
    }
  }
  return r;
}

RankTuple open_rank_tuple(const QuiverDims& dims) {
  RankTuple r;
  const int m = dims.vertices();
  for (int i = 0; i < m; ++i) {
    int lo = dims.d[i];
    for (int j = i + 1; j < m; ++j) {
      lo = std::min(lo, dims.d[j]);
      r[{i, j}] = static_cast<std::size_t>(lo);
    }
  }
  return r;
}

QuiverElement canonical_open_element(const QuiverDims& dims) {
  QuiverElement x = zero_element(dims);
  for (int j = 0; j + 1 < dims.vertices(); ++j)
    for (int k = 0; k < std::min(dims.d[j], dims.d[j + 1]); ++k) x.maps[j](k, k) = 1;
  return x;
}

QuiverElement interval_representative(const QuiverDims& dims, const IntervalMultiplicities& mult) {
  const int m = dims.vertices();
  QuiverElement x = zero_element(dims);
  std::vector<int> next(m, 0);
  // Longer intervals first so that the open orbit gets identity-like blocks.
  std::vector<std::pair<std::pair<int, int>, int>> order(mult.begin(), mult.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& u, const auto& v) {
    return u.first.second - u.first.first > v.first.second - v.first.first;
  });
  for (const auto& [iv, count] : order) {
    const auto [a, b] = iv;
    for (int c = 0; c < count; ++c) {
      std::vector<int> pos(m, -1);
      for (int i = a; i <= b; ++i) pos[i] = next[i]++;
      for (int i = a; i < b; ++i) x.maps[i](pos[i + 1], pos[i]) = 1;
    }
  }
  for (int i = 0; i < m; ++i)
    if (next[i] != dims.d[i]) throw InvalidInput("interval multiplicities do not match the dimensions");
  return x;
}

std::optional<IntervalMultiplicities> intervals_from_ranks(const QuiverDims& dims, const RankTuple& ranks) {
  const int m = dims.vertices();
  auto r = [&](int i, int j) -> long {
    if (i < 0 || j >= m) return 0;
    if (i == j) return dims.d[i];
    return static_cast<long>(ranks.at({i, j}));
  };
  IntervalMultiplicities mult;
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      const long v = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1);
      if (v < 0) return std::nullopt;
      if (v > 0) mult[{a, b}] = static_cast<int>(v);
    }
  return mult;
}

namespace {

RankTuple ranks_of_intervals(const QuiverDims& dims, const IntervalMultiplicities& mult) {
  RankTuple r;
  const int m = dims.vertices();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::size_t s = 0;
      for (const auto& [iv, c] : mult)
        if (iv.first <= i && iv.second >= j) s += static_cast<std::size_t>(c);
      r[{i, j}] = s;
    }
  return r;
}

}  // namespace

std::vector<QuiverOrbit> enumerate_orbits(const QuiverDims& dims, std::size_t bound) {
  const int m = dims.vertices();
  std::vector<std::pair<int, int>> intervals;
  for (int a = 0; a < m; ++a)
    for (int b = m - 1; b >= a; --b) intervals.emplace_back(a, b);
  std::vector<int> remaining = dims.d;
  std::vector<int> count(intervals.size(), 0);
  std::vector<QuiverOrbit> out;
  std::size_t explored = 0;

  auto rec = [&](std::size_t k, auto&& self) -> void {
    if (++explored > bound)
      throw InvalidInput("orbit enumeration exceeds the search bound " + std::to_string(bound));
    if (k == intervals.size()) {
      if (std::any_of(remaining.begin(), remaining.end(), [](int x) { return x != 0; })) return;
      IntervalMultiplicities mult;
      for (std::size_t t = 0; t < intervals.size(); ++t)
        if (count[t] > 0) mult[intervals[t]] = count[t];
      QuiverOrbit o{ranks_of_intervals(dims, mult), mult, interval_representative(dims, mult)};
      if (rank_tuple(dims, o.representative) != o.ranks)
        throw InternalError("orbit representative does not realize its rank tuple");
      out.push_back(std::move(o));
      return;
    }
    const auto [a, b] = intervals[k];
    // All intervals starting at a-1 are placed; vertex a-1 must be full.
    if (k > 0 && intervals[k - 1].first != a && remaining[a - 1] != 0) return;
    int cap = remaining[a];
    for (int i = a; i <= b; ++i) cap = std::min(cap, remaining[i]);
    for (int c = cap; c >= 0; --c) {
      for (int i = a; i <= b; ++i) remaining[i] -= c;
      count[k] = c;
      self(k + 1, self);
      for (int i = a; i <= b; ++i) remaining[i] += c;
    }
    count[k] = 0;
  };
  rec(0, rec);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (out[i].ranks == out[j].ranks) throw InternalError("two interval decompositions share a rank tuple");
  return out;
}

Matrix as_matrix(const QuiverDims& dims, const QuiverElement& x) {
  validate(dims, x);
  const int m = dims.vertices();
  Matrix big(dims.n(), dims.n());
  auto place = [&](const Matrix& f, int from, int to) {
    const int r0 = dims.offset(to), c0 = dims.offset(from);
    for (std::size_t i = 0; i < f.rows(); ++i)
      for (std::size_t j = 0; j < f.cols(); ++j) big(r0 + i, c0 + j) = f(i, j);
  };
  for (int j = 0; j + 1 < m; ++j) place(x.maps[j], j, j + 1);
  if (x.back) place(*x.back, m - 1, 0);
  return big;
}

bool basis_adapted(const QuiverElement& x) {
  for (const auto& f : x.maps) {
    std::vector<int> row_hits(f.rows(), 0), col_hits(f.cols(), 0);
    for (std::size_t i = 0; i < f.rows(); ++i)
      for (std::size_t j = 0; j < f.cols(); ++j) {
        const Rational& v = f(i, j);
        if (sgn(v) == 0) continue;
        if (v != 1) return false;
        if (++row_hits[i] > 1 || ++col_hits[j] > 1) return false;
      }
  }
  return true;
}

QuiverTriple jordan_triple(const QuiverDims& dims, const QuiverElement& x) {
  validate(dims, x);
  if (!basis_adapted(x))
    throw InvalidInput("element is not basis adapted; use the representative of its orbit");
  const int m = dims.vertices();
  const int n = dims.n();
  // next[p] = image position of basis vector p under the linear arrows.
  std::vector<int> next(n, -1);
  std::vector<bool> hit(n, false);
  for (int j = 0; j + 1 < m; ++j) {
    const auto& f = x.maps[j];
    for (std::size_t r = 0; r < f.rows(); ++r)
      for (std::size_t c = 0; c < f.cols(); ++c)
        if (sgn(f(r, c)) != 0) {
          const int from = dims.offset(j) + static_cast<int>(c);
          const int to = dims.offset(j + 1) + static_cast<int>(r);
          next[from] = to;
          hit[to] = true;
        }
  }
  QuiverTriple t{Matrix(n, n), Matrix(n, n), Matrix(n, n)};
  for (int start = 0; start < n; ++start) {
    if (hit[start]) continue;
    std::vector<int> string{start};
    while (next[string.back()] >= 0) string.push_back(next[string.back()]);
    const int s = static_cast<int>(string.size());
    for (int j = 0; j < s; ++j) {
      t.h(string[j], string[j]) = -(s - 1 - 2 * j);
      if (j + 1 < s) t.e(string[j + 1], string[j]) = 1;
      if (j > 0) t.f(string[j - 1], string[j]) = j * (s - j);
    }
  }
  const Matrix two_e = t.e * Rational(2);
  if (commutator(t.h, t.e) != two_e || commutator(t.h, t.f) != t.f * Rational(-2) || commutator(t.e, t.f) != t.h)
    throw InternalError("Jordan-string triple fails the sl2 relations");
  return t;
}

Matrix jordan_h(const QuiverDims& dims, const QuiverElement& x) { return jordan_triple(dims, x).h; }

Matrix orbit_h(const QuiverDims& dims, const QuiverElement& x) {
  auto mult = intervals_from_ranks(dims, rank_tuple(dims, x));
  if (!mult) throw InternalError("rank tuple of an actual element is infeasible");
  return jordan_h(dims, interval_representative(dims, *mult));
}

Matrix zeta_matrix(const QuiverDims& dims) {
  Matrix z(dims.n(), dims.n());
  const Rational a = dims.alpha();
  for (int j = 0; j < dims.vertices(); ++j)
    for (int k = 0; k < dims.d[j]; ++k) z(dims.offset(j) + k, dims.offset(j) + k) = Rational(j) - a;
  return z;
}

bool quiver_jm_regular(const QuiverDims& dims) {
  return jordan_h(dims, canonical_open_element(dims)) == zeta_matrix(dims) * Rational(2);
}

Rational quiver_toledo_rank(const QuiverDims& dims, const QuiverElement& x) {
  const Matrix h = basis_adapted(x) ? jordan_h(dims, x) : orbit_h(dims, x);
  return (zeta_matrix(dims) * h).trace();
}

Rational toledo_invariant(const QuiverHiggsTopology& top) {
  if (top.genus < 2) throw InvalidInput("genus must be at least 2");
  if (top.ranks.size() != top.degrees.size())
    throw InvalidInput("ranks and degrees must have the same length");
  if (std::accumulate(top.degrees.begin(), top.degrees.end(), 0L) != 0)
    throw InvalidInput("degrees must sum to zero (det E trivial)");
  const QuiverDims dims(top.ranks);
  const Rational a = dims.alpha();
  Rational tau = 0;
  for (int j = 0; j < dims.vertices(); ++j) tau += (Rational(j) - a) * top.degrees[j];
  return 2 * tau;
}

bool pointwise_maximality(const QuiverDims& dims, const QuiverElement& x) {
  if (!quiver_jm_regular(dims)) throw PreconditionFailed("pointwise maximality needs a JM-regular pair");
  return rank_tuple(dims, x) == open_rank_tuple(dims);
}

std::size_t block_scalar_stabilizer_order(const QuiverDims& dims, const QuiverElement& x) {
  validate(dims, x);
  const int m = dims.vertices();
  // t_j = t_{j+1} is forced exactly by the nonzero arrows.
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int j = 0; j + 1 < m; ++j)
    if (!x.maps[j].is_zero()) parent[find(j)] = find(j + 1);
  if (x.back && !x.back->is_zero()) parent[find(m - 1)] = find(0);
  for (int j = 1; j < m; ++j)
    if (find(j) != find(0)) return 0;
  return static_cast<std::size_t>(dims.n());
}

std::vector<int> labels_for_dims(const QuiverDims& dims) {
  std::vector<int> labels(dims.n() - 1, 0);
  int pos = 0;
  for (int j = dims.vertices() - 1; j > 0; --j) {
    pos += dims.d[j];
    labels[pos - 1] = 1;
  }
  return labels;
}

std::optional<QuiverDims> dims_for_labels(std::span<const int> labels) {
  std::vector<int> blocks{1};
  for (int p : labels) {
    if (p == 0)
      ++blocks.back();
    else if (p == 1)
      blocks.push_back(1);
    else
      return std::nullopt;
  }
  std::reverse(blocks.begin(), blocks.end());
  return QuiverDims(blocks);
}

SlMatrices::SlMatrices(const ChevalleyAlgebra& alg) : alg_(&alg) {
  const auto& rs = alg.root_system();
  if (rs.lie_type().family != 'A') throw InvalidInput("matrix realization is only for type A");
  n_ = alg.rank() + 1;
  const std::size_t r = alg.rank();
  basis_.assign(alg.dim(), Matrix(n_, n_));
  for (std::size_t i = 0; i < r; ++i) {
    basis_[i](i, i) = 1;
    basis_[i](i + 1, i + 1) = -1;
  }
  const auto& roots = rs.roots();
  const std::size_t np = rs.num_positive();
  for (std::size_t k = 0; k < r; ++k) {
    basis_[alg.root_basis_index(k)](k, k + 1) = 1;
    basis_[alg.root_basis_index(rs.negative_index(k))](k + 1, k) = 1;
  }
  for (std::size_t k = r; k < np; ++k) {
    for (std::size_t a = 0; a < k; ++a) {
      const auto b = rs.index_of(roots[k] - roots[a]);
      if (!b || *b >= np) continue;
      for (int sign : {1, -1}) {
        const std::size_t ia = sign > 0 ? a : rs.negative_index(a);
        const std::size_t ib = sign > 0 ? *b : rs.negative_index(*b);
        const std::size_t ik = sign > 0 ? k : rs.negative_index(k);
        const int nab = alg.structure_constant(roots[ia], roots[ib]);
        basis_[alg.root_basis_index(ik)] =
            commutator(basis_[alg.root_basis_index(ia)], basis_[alg.root_basis_index(ib)]) *
            (Rational(1) / Rational(nab));
      }
      break;
    }
  }
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      Matrix want(n_, n_);
      for (const auto& t : alg.bracket_basis(i, j)) want = want + basis_[t.index] * Rational(static_cast<long>(t.coeff));
      if (commutator(basis_[i], basis_[j]) != want)
        throw InternalError("matrix realization of sl_n is not a homomorphism");
    }
}

Matrix SlMatrices::to_matrix(const Element& x) const {
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) m = m + basis_[i] * x[i];
  return m;
}

Element SlMatrices::from_matrix(const Matrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) throw InvalidInput("matrix has the wrong size");
  if (sgn(x.trace()) != 0) throw InvalidInput("matrix is not traceless");
  const std::size_t r = alg_->rank();
  Element out = alg_->zero();
  Rational partial = 0;
  for (std::size_t i = 0; i < r; ++i) {
    partial += x(i, i);
    out[i] = partial;
  }
  for (std::size_t b = r; b < alg_->dim(); ++b) {
    const Matrix& e = basis_[b];
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j && sgn(e(i, j)) != 0) out[b] = x(i, j) / e(i, j);
  }
  if (to_matrix(out) != x) throw InternalError("matrix realization round trip failed");
  return out;
}

Matrix quiver_to_standard(const Matrix& x) {
  const std::size_t n = x.rows();
  Matrix y(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y(n - 1 - i, n - 1 - j) = x(i, j);
  return y;
}

}  // namespace liegrade
