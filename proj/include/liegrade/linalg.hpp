#pragma once

// Exact rational scalars, dense rational matrices and fraction-free
// elimination. Everything downstream goes through rank / kernel_basis / solve.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "liegrade/errors.hpp"

namespace liegrade {

// mpq_class keeps numerator/denominator canonical (denominator > 0, reduced),
// as long as every value leaves an expression through canonicalize().
using Rational = mpq_class;
using Vector = std::vector<Rational>;

// p/q in canonical form (mpq_class(p, q) alone is not). Throws InvalidInput if q = 0.
Rational ratio(long p, long q);

std::string to_string(const Rational& q);
// Accepts "p", "-p", "p/q". Throws InvalidInput on anything else or q = 0.
Rational parse_rational(std::string_view text);

bool is_zero(std::span<const Rational> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Rational> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  Vector column(std::size_t j) const;

  Matrix transposed() const;
  // Columns of *this followed by columns of other.
  Matrix hstack(const Matrix& other) const;
  // Rows of *this followed by rows of other.
  Matrix vstack(const Matrix& other) const;

  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(std::span<const Rational> v) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(const Rational& s) const;
  bool operator==(const Matrix& rhs) const;

  bool is_zero() const;
  Rational trace() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

std::size_t rank(const Matrix& m);

// Basis of { v : m v = 0 }. Vectors are primitive integral (gcd 1) with the
// convention that the free coordinate is positive.
std::vector<Vector> kernel_basis(const Matrix& m);

std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b);

// Either a solution x of m x = b, or a left-kernel vector y with
// y^T m = 0 and y . b != 0 proving that none exists.
struct Inconsistent {
  Vector witness;
};
using SolveOutcome = std::variant<Vector, Inconsistent>;
SolveOutcome solve_certified(const Matrix& m, std::span<const Rational> b);

Rational determinant(const Matrix& m);

// Indices of a maximal linearly independent subset of the columns,
// in increasing order.
std::vector<std::size_t> independent_columns(const Matrix& m);

}  // namespace liegrade
