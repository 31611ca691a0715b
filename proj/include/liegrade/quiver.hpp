#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "liegrade/chevalley.hpp"
#include "liegrade/grading.hpp"

namespace liegrade {

// Dimension vector d_0..d_{m-1} of a linear (or cyclic) quiver with V_j at
// vertex j; the grading element acts on V_j by j - alpha.
struct QuiverDims {
  std::vector<int> d;

  // Throws InvalidInput unless every d_j >= 1 and n >= 2.
  explicit QuiverDims(std::vector<int> dims);
  int vertices() const { return static_cast<int>(d.size()); }
  int n() const;
  // Row/column offset of V_j in the block basis V_0, V_1, ...
  int offset(int j) const;
  // alpha = sum j d_j / n.
  Rational alpha() const;
};

// f_j : V_j -> V_{j+1} as d_{j+1} x d_j matrices, j = 0..m-2, and for the
// cyclic variant the back arrow V_{m-1} -> V_0.
struct QuiverElement {
  std::vector<Matrix> maps;
  std::optional<Matrix> back;
};

using RankTuple = std::map<std::pair<int, int>, std::size_t>;

// Throws InvalidInput on shape mismatch.
void validate(const QuiverDims& dims, const QuiverElement& x);
QuiverElement zero_element(const QuiverDims& dims);

// r_ij = rank(f_{j-1} ... f_i) for 0 <= i < j <= m-1.
RankTuple rank_tuple(const QuiverDims& dims, const QuiverElement& x);
// r_ij = min(d_i..d_j).
RankTuple open_rank_tuple(const QuiverDims& dims);

// Identity-block maps (Id 0) or (Id; 0).
QuiverElement canonical_open_element(const QuiverDims& dims);

// Multiplicities of the interval modules [a, b], 0 <= a <= b <= m-1.
using IntervalMultiplicities = std::map<std::pair<int, int>, int>;

struct QuiverOrbit {
  RankTuple ranks;
  IntervalMultiplicities intervals;
  // Realizes ranks; checked with rank_tuple.
  QuiverElement representative;
};

// Every orbit of G_0 on the linear part of g_1, one certified
// representative each. Throws InvalidInput if more than `bound` candidate
// multiplicity assignments would be explored.
std::vector<QuiverOrbit> enumerate_orbits(const QuiverDims& dims, std::size_t bound = 100000);

// Interval multiplicities recovered from ranks (r_ii = d_i); nullopt if some
// multiplicity comes out negative, i.e. the tuple is infeasible.
std::optional<IntervalMultiplicities> intervals_from_ranks(const QuiverDims& dims, const RankTuple& ranks);
QuiverElement interval_representative(const QuiverDims& dims, const IntervalMultiplicities& mult);

// The whole representation as an n x n matrix in the block basis.
Matrix as_matrix(const QuiverDims& dims, const QuiverElement& x);

// Whether each map has 0/1 entries with at most one 1 per row and column,
// so that Jordan strings run along basis vectors.
bool basis_adapted(const QuiverElement& x);

struct QuiverTriple {
  Matrix h, e, f;
};

// h(u_j) = -(s-1-2j) u_j and f(u_j) = j(s-j) u_{j-1} on each Jordan string
// u_0 -> ... -> u_{s-1}. Throws InvalidInput unless x is basis adapted;
// the linear part only.
QuiverTriple jordan_triple(const QuiverDims& dims, const QuiverElement& x);
Matrix jordan_h(const QuiverDims& dims, const QuiverElement& x);
// jordan_h of the interval representative of x's orbit.
Matrix orbit_h(const QuiverDims& dims, const QuiverElement& x);

// diag(j - alpha) on V_j.
Matrix zeta_matrix(const QuiverDims& dims);

bool quiver_jm_regular(const QuiverDims& dims);

// rank_T(x) = chi_T(h)/2 for the trace form: tr(zeta h) (B*(gamma,gamma) = 2).
Rational quiver_toledo_rank(const QuiverDims& dims, const QuiverElement& x);

struct QuiverHiggsTopology {
  std::vector<int> ranks;
  std::vector<int> degrees;
  int genus = 2;
};

// tau = 2 sum_j (j - alpha) deg E_j. Throws InvalidInput unless the degrees
// sum to zero, lengths agree and genus >= 2.
Rational toledo_invariant(const QuiverHiggsTopology& top);

// Whether rank_tuple(x) is the open tuple. Throws PreconditionFailed unless
// the pair is JM-regular.
bool pointwise_maximality(const QuiverDims& dims, const QuiverElement& x);

// Block scalars diag(t_0 Id, ..., t_{m-1} Id) of determinant one commuting
// with x. When all arrows are nonzero this is mu_n; order 0 means the group
// is infinite.
std::size_t block_scalar_stabilizer_order(const QuiverDims& dims, const QuiverElement& x);

// --- Bridge to the Chevalley realization of sl_n -------------------------

// Simple-root labels of A_{n-1} whose grading is the quiver grading of dims.
// In sl_n the standard basis runs through V_{m-1}, ..., V_0.
std::vector<int> labels_for_dims(const QuiverDims& dims);
// Inverse of labels_for_dims for 0/1 labels; nullopt otherwise.
std::optional<QuiverDims> dims_for_labels(std::span<const int> labels);

// Matrices of the Chevalley basis of A_{n-1} acting on C^n, with
// e_{alpha_k} = E_{k,k+1}. Verified to be a Lie algebra homomorphism.
class SlMatrices {
 public:
  explicit SlMatrices(const ChevalleyAlgebra& alg);
  std::size_t n() const { return n_; }
  Matrix to_matrix(const Element& x) const;
  // Traceless X -> element; throws InvalidInput if X is not traceless.
  Element from_matrix(const Matrix& x) const;
  const Matrix& basis_matrix(std::size_t i) const { return basis_[i]; }

 private:
  const ChevalleyAlgebra* alg_;
  std::size_t n_;
  std::vector<Matrix> basis_;
};

// The reversal identifying the quiver block basis V_0, V_1, ... with the
// standard basis of C^n used by SlMatrices.
Matrix quiver_to_standard(const Matrix& x);

}  // namespace liegrade
