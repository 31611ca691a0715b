#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "liegrade/linalg.hpp"
#include "liegrade/root_system.hpp"

namespace liegrade {

// Coordinates of a Lie algebra element in the Chevalley basis
// h_1..h_r, e_a (a in RootSystem::roots() order).
class Element {
 public:
  Element() = default;
  explicit Element(std::size_t dim) : coords_(dim) {}
  explicit Element(Vector coords) : coords_(std::move(coords)) {}

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const Vector& coords() const { return coords_; }

  bool is_zero() const { return liegrade::is_zero(coords_); }

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  friend Element operator-(Element a) { return a *= Rational(-1); }
  bool operator==(const Element&) const = default;

 private:
  Vector coords_;
};

struct Term {
  std::size_t index;
  std::int64_t coeff;
};
using Expansion = std::vector<Term>;

// An invariant symmetric bilinear form on the algebra together with its dual
// on the root lattice. Only weight-zero basis pairs pair nontrivially, so the
// form is stored as the Cartan block plus the values B(e_a, e_{-a}).
class InvariantForm {
 public:
  InvariantForm(const RootSystem& rs, Matrix cartan_gram, std::vector<Rational> root_pairs);

  Rational operator()(const Element& a, const Element& b) const;
  // B*(a, b) = a(t_b) where B(t_b, .) = b on the Cartan subalgebra.
  Rational dual(const Root& a, const Root& b) const;
  Rational dual_norm(const Root& a) const { return dual(a, a); }

  const Matrix& cartan_gram() const { return cartan_gram_; }
  // B(e_a, e_{-a}) indexed by positive root.
  const std::vector<Rational>& root_pairs() const { return root_pairs_; }

 private:
  const RootSystem* rs_;
  Matrix cartan_gram_;
  Matrix cartan_gram_inverse_;
  std::vector<Rational> root_pairs_;
};

enum class JacobiCheck { automatic, full, sampled, skip };

class ChevalleyAlgebra {
 public:
  // Structure constants by the extraspecial-pair algorithm. With
  // JacobiCheck::automatic the Jacobi identity is verified on every basis
  // triple when dim <= 80 and on a fixed-seed sample otherwise; a failure
  // throws InternalError.
  static std::shared_ptr<const ChevalleyAlgebra> build(const LieType& t,
                                                       JacobiCheck check = JacobiCheck::automatic);
  static std::shared_ptr<const ChevalleyAlgebra> build(RootSystem rs,
                                                       JacobiCheck check = JacobiCheck::automatic);

  const RootSystem& root_system() const { return rs_; }
  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return static_cast<std::size_t>(rs_.rank()); }

  std::size_t root_basis_index(std::size_t root_idx) const { return rank() + root_idx; }
  // Root number of a basis index, or nullopt for Cartan generators.
  std::optional<std::size_t> root_of(std::size_t basis) const;
  // Weight (root coordinates, zero vector for the Cartan) of a basis vector.
  Root weight(std::size_t basis) const;

  Element zero() const { return Element(dim_); }
  Element basis_element(std::size_t i) const;
  Element root_vector(const Root& a) const;
  // Element sum_i coords[i] h_i.
  Element cartan_element(std::span<const Rational> coords) const;
  // Coroot h_a as an algebra element.
  Element coroot_element(const Root& a) const;

  // N_{a,b} with [e_a, e_b] = N_{a,b} e_{a+b}; 0 when a+b is not a root.
  int structure_constant(const Root& a, const Root& b) const;
  const Expansion& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  Element bracket(const Element& a, const Element& b) const;
  // [x, b_j] restricted: rows = codomain basis indices, cols = domain basis indices.
  Matrix ad_block(const Element& x, std::span<const std::size_t> domain,
                  std::span<const std::size_t> codomain) const;
  Matrix ad(const Element& x) const;

  const InvariantForm& killing() const { return *killing_; }
  const InvariantForm& normalized() const { return *normalized_; }
  Rational killing_form(const Element& a, const Element& b) const { return (*killing_)(a, b); }
  // trace(ad a ad b) from dense matrices; slow reference path.
  Rational killing_trace(const Element& a, const Element& b) const;

  // Basis of { u in span(U) : [u, s] = 0 for all s in S }.
  std::vector<Element> centralizer(std::span<const Element> S, std::span<const Element> U) const;

  // Returns the first failing triple as basis indices, or nullopt.
  struct Triple {
    std::size_t i, j, k;
  };
  std::optional<Triple> find_jacobi_violation(bool sampled, std::uint64_t seed = 20240601,
                                              std::size_t samples = 20000) const;

 private:
  explicit ChevalleyAlgebra(RootSystem rs);
  void compute_structure_constants();
  void fill_bracket_table();
  void build_forms();

  RootSystem rs_;
  std::size_t dim_ = 0;
  // N[a][b] for root indices a, b.
  std::vector<int> n_table_;
  std::vector<Expansion> table_;
  std::unique_ptr<InvariantForm> killing_;
  std::unique_ptr<InvariantForm> normalized_;
};

// Coordinates of x restricted to the given basis indices.
Vector restrict_to(const Element& x, std::span<const std::size_t> indices);
// Inverse of restrict_to: an element supported on indices.
Element embed(std::size_t dim, std::span<const std::size_t> indices, std::span<const Rational> coords);

}  // namespace liegrade
