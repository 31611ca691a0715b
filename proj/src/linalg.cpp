#include "liegrade/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>

namespace liegrade {

Rational ratio(long p, long q) {
  if (q == 0) throw InvalidInput("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return InvalidInput("not a rational number: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  auto check_int = [&](std::string_view s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start >= s.size()) throw bad();
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
  };
  const auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  check_int(num);
  check_int(den);
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  if (den[0] == '-') throw bad();
  mpz_class n(num), d(den);
  if (d == 0) throw bad();
  Rational q(n, d);
  q.canonicalize();
  return q;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InvalidInput("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("Matrix: ragged initializer");
    for (long x : r) entries_.emplace_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidInput("Matrix::from_rows: length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + i * cols);
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InvalidInput("Matrix::from_columns: length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::hstack(const Matrix& other) const {
  if (other.rows_ != rows_) throw InvalidInput("hstack: row count mismatch");
  Matrix m(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& other) const {
  if (rows_ == 0) return other;
  if (other.rows_ == 0) return *this;
  if (other.cols_ != cols_) throw InvalidInput("vstack: column count mismatch");
  Matrix m(rows_ + other.rows_, cols_);
  std::copy(entries_.begin(), entries_.end(), m.entries_.begin());
  std::copy(other.entries_.begin(), other.entries_.end(), m.entries_.begin() + entries_.size());
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidInput("matrix product: shape mismatch");
  Matrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (sgn(rhs(k, j)) != 0) p(i, j) += a * rhs(k, j);
    }
  return p;
}

Vector Matrix::operator*(std::span<const Rational> v) const {
  if (v.size() != cols_) throw InvalidInput("matrix-vector product: shape mismatch");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = dot(row(i), v);
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidInput("matrix sum: shape mismatch");
  Matrix s = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) s.entries_[k] += rhs.entries_[k];
  return s;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidInput("matrix difference: shape mismatch");
  Matrix s = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) s.entries_[k] -= rhs.entries_[k];
  return s;
}

Matrix Matrix::operator*(const Rational& s) const {
  Matrix m = *this;
  for (auto& x : m.entries_) x *= s;
  return m;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

bool Matrix::is_zero() const { return liegrade::is_zero(entries_); }

Rational Matrix::trace() const {
  if (rows_ != cols_) throw InvalidInput("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------
// Fraction-free Gauss-Jordan elimination.
//
// Rows are first scaled to integers. After processing pivot k every entry is
// a (k+1)-minor of the integer matrix, so the division by the previous pivot
// is exact. On exit every pivot equals the same integer D and the matrix is
// D times the reduced row echelon form.

namespace {

using IntRow = std::vector<mpz_class>;

struct Reduced {
  std::vector<IntRow> rows;
  std::vector<std::size_t> pivot_cols;  // pivot column of rows[0..rank)
  mpz_class scale = 1;                  // common pivot value D
  int swap_sign = 1;
  std::vector<mpz_class> row_factors;   // integer row i = factor_i * original row
};

Reduced integer_rows(const Matrix& m, std::span<const Rational> extra_col = {}) {
  const bool augmented = !extra_col.empty();
  const std::size_t width = m.cols() + (augmented ? 1 : 0);
  Reduced red;
  red.rows.assign(m.rows(), IntRow(width));
  red.row_factors.assign(m.rows(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    if (augmented) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), extra_col[i].get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j)
      red.rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    if (augmented) red.rows[i][m.cols()] = extra_col[i].get_num() * (l / extra_col[i].get_den());
    red.row_factors[i] = l;
  }
  return red;
}

void exact_divide(mpz_class& x, const mpz_class& d) {
  if (d == 1) return;
  if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()))
    throw InternalError("fraction-free elimination: inexact division");
  mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}

// Eliminates over columns [0, pivot_limit). Columns beyond pivot_limit are
// carried along but never chosen as pivots.
void reduce(Reduced& red, std::size_t pivot_limit) {
  auto& a = red.rows;
  const std::size_t n_rows = a.size();
  if (n_rows == 0) return;
  const std::size_t width = a[0].size();
  mpz_class prev = 1;
  std::size_t r = 0;
  mpz_class tmp;
  for (std::size_t col = 0; col < pivot_limit && r < n_rows; ++col) {
    // Smallest nonzero entry keeps the minors a little smaller in practice.
    std::size_t p = n_rows;
    for (std::size_t i = r; i < n_rows; ++i) {
      if (sgn(a[i][col]) == 0) continue;
      if (p == n_rows || mpz_cmpabs(a[i][col].get_mpz_t(), a[p][col].get_mpz_t()) < 0) p = i;
    }
    if (p == n_rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      std::swap(red.row_factors[p], red.row_factors[r]);
      red.swap_sign = -red.swap_sign;
    }
    const mpz_class piv = a[r][col];
    for (std::size_t i = 0; i < n_rows; ++i) {
      if (i == r) continue;
      const mpz_class factor = a[i][col];
      for (std::size_t j = 0; j < width; ++j) {
        if (j == col) continue;
        if (sgn(factor) == 0) {
          if (sgn(a[i][j]) == 0) continue;
          a[i][j] *= piv;
        } else {
          tmp = factor * a[r][j];
          a[i][j] *= piv;
          a[i][j] -= tmp;
        }
        exact_divide(a[i][j], prev);
      }
      a[i][col] = 0;
    }
    prev = piv;
    red.pivot_cols.push_back(col);
    ++r;
  }
  red.scale = prev;
}

Vector primitive(Vector v) {
  mpz_class g = 0, l = 1;
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  if (g == 0) return v;
  Rational f(l, g);
  f.canonicalize();
  for (auto& x : v) x *= f;
  return v;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  Reduced red = integer_rows(m);
  reduce(red, m.cols());
  return red.pivot_cols.size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  Reduced red = integer_rows(m);
  reduce(red, m.cols());
  const auto& piv = red.pivot_cols;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = Rational(red.scale);
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = Rational(-red.rows[k][f]);
    v = primitive(std::move(v));
    if (sgn(v[f]) < 0)
      for (auto& x : v) x = -x;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw InvalidInput("solve: right-hand side has wrong length");
  if (m.rows() == 0) return Vector(m.cols());
  Reduced red = integer_rows(m, b);
  reduce(red, m.cols());
  const std::size_t rk = red.pivot_cols.size();
  for (std::size_t i = rk; i < red.rows.size(); ++i)
    if (sgn(red.rows[i][m.cols()]) != 0) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t k = 0; k < rk; ++k) {
    Rational v(red.rows[k][m.cols()], red.scale);
    v.canonicalize();
    x[red.pivot_cols[k]] = v;
  }
  return x;
}

SolveOutcome solve_certified(const Matrix& m, std::span<const Rational> b) {
  if (auto x = solve(m, b)) return *x;
  for (auto& y : kernel_basis(m.transposed()))
    if (sgn(dot(y, b)) != 0) return Inconsistent{std::move(y)};
  throw InternalError("solve_certified: inconsistent system without a left-kernel witness");
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Reduced red = integer_rows(m);
  reduce(red, m.cols());
  if (red.pivot_cols.size() < m.rows()) return 0;
  mpz_class denom = 1;
  for (const auto& f : red.row_factors) denom *= f;
  Rational d(red.scale * red.swap_sign, denom);
  d.canonicalize();
  return d;
}

std::vector<std::size_t> independent_columns(const Matrix& m) {
  Reduced red = integer_rows(m);
  reduce(red, m.cols());
  return red.pivot_cols;
}

}  // namespace liegrade
