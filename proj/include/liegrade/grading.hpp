#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liegrade/chevalley.hpp"

namespace liegrade {

// A Z-grading of a graded subalgebra of g spanned by basis vectors. For
// gradings built from labels the support is all of g; regrading keeps only
// the pieces of degree divisible by the regrading factor.
class ZGrading {
 public:
  // degrees[i] is the degree of basis vector i, or nullopt if it is not in
  // the support. Verifies closure of the support under brackets and that
  // ad(zeta) acts on each piece by its degree; throws InternalError otherwise.
  ZGrading(std::shared_ptr<const ChevalleyAlgebra> alg, std::vector<std::optional<int>> degrees, Element zeta,
           std::vector<int> labels = {});

  const ChevalleyAlgebra& algebra() const { return *alg_; }
  const std::shared_ptr<const ChevalleyAlgebra>& algebra_ptr() const { return alg_; }

  // Simple-root labels, or empty if the grading was not built from labels.
  const std::vector<int>& labels() const { return labels_; }
  const Element& zeta() const { return zeta_; }
  // Smallest m >= 1 with g_j = 0 for |j| >= m.
  int depth() const { return depth_; }

  bool contains(std::size_t basis) const { return degrees_[basis].has_value(); }
  std::optional<int> degree(std::size_t basis) const { return degrees_[basis]; }
  const std::vector<std::optional<int>>& degrees() const { return degrees_; }

  const std::vector<std::size_t>& piece(int j) const;
  std::size_t piece_dim(int j) const { return piece(j).size(); }
  // Nonempty degrees, in increasing order, with their basis indices.
  const std::map<int, std::vector<std::size_t>>& pieces() const { return pieces_; }
  // Basis indices of the support.
  std::vector<std::size_t> support() const;
  std::size_t dim() const;

  // dim g_j for j = -(depth-1) .. depth-1.
  std::vector<std::size_t> piece_dims() const;

 private:
  std::shared_ptr<const ChevalleyAlgebra> alg_;
  std::vector<std::optional<int>> degrees_;
  Element zeta_;
  std::vector<int> labels_;
  std::map<int, std::vector<std::size_t>> pieces_;
  int depth_ = 1;
};

// Degree of a root under simple-root labels: sum_k c_k p_k.
int root_degree(const Root& a, std::span<const int> labels);

// The grading with deg(e_{alpha_k}) = p_k. zeta solves alpha_k(zeta) = p_k.
// Throws InvalidInput unless there are rank-many labels, all >= 0, not all 0.
ZGrading z_grading_from_labels(std::shared_ptr<const ChevalleyAlgebra> alg, std::vector<int> labels);

// Element zeta of the Cartan subalgebra with alpha_k(zeta) = v_k.
Element cartan_from_values(const ChevalleyAlgebra& alg, std::span<const Rational> values);

struct KacLabels {
  // p_0 .. p_r on the affine diagram.
  std::vector<int> labels;
  // m = sum n_k p_k with n_0 = 1.
  int order = 0;
  // Order of the automorphism the labels define: m / gcd(p_0..p_r).
  int reduced_order = 0;
};

// Throws InvalidInput on wrong length, negative labels or m = 0.
KacLabels make_kac_labels(const RootSystem& rs, std::vector<int> labels);

class ZmGrading {
 public:
  ZmGrading(std::shared_ptr<const ChevalleyAlgebra> alg, int modulus, std::vector<int> residues);

  const ChevalleyAlgebra& algebra() const { return *alg_; }
  int modulus() const { return m_; }
  int residue(std::size_t basis) const { return residues_[basis]; }
  const std::vector<std::size_t>& piece(int j) const { return pieces_[static_cast<std::size_t>(j)]; }
  // dim gbar_j for j = 0 .. m-1.
  std::vector<std::size_t> piece_dims() const;

  std::optional<KacLabels> source;
  std::vector<std::string> warnings;

 private:
  std::shared_ptr<const ChevalleyAlgebra> alg_;
  int m_;
  std::vector<int> residues_;
  std::vector<std::vector<std::size_t>> pieces_;
};

// Root space g_a in residue sum_k c_k p_k mod m; Cartan in residue 0.
ZmGrading zm_from_kac(std::shared_ptr<const ChevalleyAlgebra> alg, const KacLabels& kac);

// gbar_j = g_j + g_{j-m} for the given m >= depth (default: the depth).
// Only gradings with full support reduce to a grading of g.
ZmGrading bar_pieces(const ZGrading& zg);
ZmGrading bar_pieces(const ZGrading& zg, int m);

// Permutations s of the affine nodes 0..r with A(s i, s j) = A(i, j) for the
// affine Cartan matrix, found by exhaustive search. Identity first.
std::vector<std::vector<int>> affine_diagram_automorphisms(const RootSystem& rs);
std::vector<std::vector<int>> affine_cartan_matrix(const RootSystem& rs);

enum class LiftVerdict { directly, after_automorphism, no_lift };
std::string to_string(LiftVerdict v);

struct LiftResult {
  LiftVerdict verdict = LiftVerdict::no_lift;
  // Relabelled Kac vector with positive label at node 0 (present unless no_lift).
  std::optional<std::vector<int>> witness;
  // The automorphism used: witness[perm[i]] = labels[i].
  std::optional<std::vector<int>> automorphism;
  // Node j whose label was moved to node 0 (0 when lifting directly).
  std::optional<int> moved_node;
};

LiftResult kac_lift_check(const RootSystem& rs, const KacLabels& kac);

}  // namespace liegrade
