#pragma once

#include <vector>

#include "orbitwidth/hermitian.hpp"
#include "orbitwidth/spectrum.hpp"

namespace orbitwidth {

inline constexpr double kRankTol = 1e-9;
inline constexpr double kContainTol = 1e-8;

/// k-plane in C^n represented by an n x k matrix with orthonormal columns.
/// k = 0 (the zero subspace) is a valid value.
class Subspace {
 public:
  /// Wraps an already-orthonormal basis; validates basis* basis = I.
  explicit Subspace(Eigen::MatrixXcd basis);

  int ambient() const { return static_cast<int>(basis_.rows()); }
  int dim() const { return static_cast<int>(basis_.cols()); }
  const Eigen::MatrixXcd& basis() const { return basis_; }

  /// Orthogonal projector P = B B*.
  Eigen::MatrixXcd projector() const { return basis_ * basis_.adjoint(); }

 private:
  Eigen::MatrixXcd basis_;
};

/// Zero subspace of C^n.
Subspace zero_subspace(int n);
/// span(e_{first+1}, ..., e_{first+k}), 0-based first.
Subspace coordinate_subspace(int n, int k, int first = 0);

/// Orthonormal basis of the column space of m. Throws RankDeficient when the
/// smallest singular value drops below rank_tol times the largest.
Subspace orthonormalize(const Eigen::MatrixXcd& m, double rank_tol = kRankTol);

/// A cap B, computed from the null space of the stacked complement
/// projectors [I - P_A; I - P_B]; dimensions are decided by the singular
/// values of that stack against rank_tol.
Subspace intersect(const Subspace& a, const Subspace& b, double rank_tol = kRankTol);

/// A + B: column space of the concatenated bases, with rank truncation.
Subspace subspace_sum(const Subspace& a, const Subspace& b, double rank_tol = kRankTol);

/// small is contained in big when ||(I - P_big) basis(small)||_F <= tol.
bool contains(const Subspace& big, const Subspace& small, double tol = kContainTol);

/// Frobenius distance between orthogonal projectors; zero iff equal subspaces.
double subspace_distance(const Subspace& a, const Subspace& b);

/// A degree-1 curve in G(k, n), pinned by the common intersection (kernel,
/// dimension k-1) and common span (dimension k+1) of its member k-planes:
/// the curve is {V : kernel subset V subset span}.
struct GrassmannLine {
  Subspace kernel;
  Subspace span;
};

/// The unique line through the k-plane w meeting the incidence locus
/// X = {V : line subset V subset hyperplane}. Requires the generic position
/// line !subset w and dim(w cap hyperplane) = k - 1; degenerate data (which
/// admits infinitely many such curves) throws GenericityViolated.
GrassmannLine line_through(const Subspace& w, const Subspace& line,
                           const Subspace& hyperplane, double rank_tol = kRankTol);

/// Hermitian matrix with block eigenspaces read off a nested flag:
/// sum_j value_j (P_j - P_{j-1}) where P_j projects onto the j-th flag step
/// and value_j is the j-th distinct eigenvalue. Flag dimensions must match
/// the spectrum's cumulative multiplicities and end at the full space.
HermitianMatrix flag_to_hermitian(const std::vector<Subspace>& flag, const Spectrum& s);

}  // namespace orbitwidth
