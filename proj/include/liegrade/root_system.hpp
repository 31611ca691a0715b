#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liegrade/linalg.hpp"

namespace liegrade {

// Simple Lie type with Bourbaki numbering of the simple roots
// (see docs/conventions.md).
struct LieType {
  char family = 'A';
  int rank = 1;

  std::string name() const;
  // "A2", "e6", "G2"...; validated.
  static LieType parse(std::string_view text);
  // Throws InvalidInput unless the rank is admissible for the family.
  void validate() const;

  bool operator==(const LieType&) const = default;
};

// Integer coordinates of a root (or any lattice vector) in the basis of
// simple roots.
using Root = std::vector<int>;

int height(const Root& r);
Root negated(const Root& r);
Root operator+(const Root& a, const Root& b);
Root operator-(const Root& a, const Root& b);

class RootSystem {
 public:
  static RootSystem build(const LieType& t);

  const LieType& lie_type() const { return type_; }
  int rank() const { return type_.rank; }

  // Positive roots by increasing height (ties: lexicographically decreasing
  // coordinates, so alpha_1..alpha_r come first), then their negatives in the
  // same order.
  const std::vector<Root>& roots() const { return roots_; }
  std::size_t num_positive() const { return roots_.size() / 2; }
  const Root& simple_root(int i) const { return roots_[static_cast<std::size_t>(i)]; }

  std::optional<std::size_t> index_of(const Root& r) const;
  bool is_root(const Root& r) const { return index_of(r).has_value(); }
  // Index of -roots()[i].
  std::size_t negative_index(std::size_t i) const;

  // cartan_matrix()[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  // Gram matrix of B* on the simple roots, scaled so the highest root has norm 2.
  const Matrix& form_star() const { return form_star_; }
  Rational inner(const Root& a, const Root& b) const;
  Rational norm(const Root& a) const { return inner(a, a); }

  // <a, alpha_i^vee>, the eigenvalue of ad(h_i) on the root space of a.
  int pairing(const Root& a, int i) const;

  const Root& highest_root() const { return roots_[highest_]; }
  // (1, n_1, ..., n_r): coefficients of the highest root, with n_0 = 1.
  std::vector<int> affine_marks() const;

  // Coordinates of the coroot h_a = 2 t_a / B*(a,a) in the basis h_1..h_r of
  // simple coroots. Throws InvalidInput if a is not a root.
  Vector coroot(const Root& a) const;

  Rational max_norm() const;

 private:
  LieType type_;
  std::vector<std::vector<int>> cartan_;
  Matrix form_star_;
  std::vector<Root> roots_;
  std::map<Root, std::size_t> lookup_;
  std::size_t highest_ = 0;
};

// Cartan matrix in the convention of RootSystem::cartan_matrix().
std::vector<std::vector<int>> cartan_matrix_of(const LieType& t);

// Root count by the classical formulas; used as a cross-check of the
// reflection closure.
std::size_t classical_root_count(const LieType& t);

}  // namespace liegrade
