#include "orbitwidth/subspace.hpp"

#include <Eigen/SVD>

#include <string>

namespace orbitwidth {

namespace {

Eigen::MatrixXcd orthonormal_null_basis(const Eigen::MatrixXcd& m, double rank_tol) {
  // Right singular vectors whose singular values sit at the noise floor.
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  double largest = sigma.size() > 0 ? sigma(0) : 0.0;
  double threshold = rank_tol * std::max(1.0, largest);
  int null_dim = 0;
  for (int i = 0; i < sigma.size(); ++i)
    if (sigma(i) < threshold) ++null_dim;
  return svd.matrixV().rightCols(null_dim);
}

}  // namespace

Subspace::Subspace(Eigen::MatrixXcd basis) : basis_(std::move(basis)) {
  if (basis_.cols() > basis_.rows())
    throw DimensionMismatch("subspace dimension exceeds ambient dimension");
  if (basis_.cols() > 0) {
    Eigen::MatrixXcd gram = basis_.adjoint() * basis_;
    double defect = (gram - Eigen::MatrixXcd::Identity(basis_.cols(), basis_.cols()))
                        .cwiseAbs()
                        .maxCoeff();
    if (defect > kHermitianTol)
      throw ToleranceViolation("subspace basis is not orthonormal within tolerance");
  }
}

Subspace zero_subspace(int n) { return Subspace(Eigen::MatrixXcd::Zero(n, 0)); }

Subspace coordinate_subspace(int n, int k, int first) {
  if (first + k > n) throw DimensionMismatch("coordinate subspace does not fit");
  Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(n, k);
  for (int c = 0; c < k; ++c) basis(first + c, c) = 1.0;
  return Subspace(std::move(basis));
}

Subspace orthonormalize(const Eigen::MatrixXcd& m, double rank_tol) {
  if (m.cols() == 0) return Subspace(Eigen::MatrixXcd::Zero(m.rows(), 0));
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU);
  const auto& sigma = svd.singularValues();
  double largest = sigma(0);
  int rank = 0;
  for (int i = 0; i < sigma.size(); ++i)
    if (largest > 0 && sigma(i) > rank_tol * largest) ++rank;
  if (rank < m.cols())
    throw RankDeficient("matrix has rank " + std::to_string(rank) + " < " +
                        std::to_string(m.cols()) + " columns");
  return Subspace(svd.matrixU().leftCols(rank));
}

Subspace intersect(const Subspace& a, const Subspace& b, double rank_tol) {
  if (a.ambient() != b.ambient())
    throw DimensionMismatch("ambient dimensions differ");
  const int n = a.ambient();
  Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd stacked(2 * n, n);
  stacked.topRows(n) = identity - a.projector();
  stacked.bottomRows(n) = identity - b.projector();
  return Subspace(orthonormal_null_basis(stacked, rank_tol));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b, double rank_tol) {
  if (a.ambient() != b.ambient())
    throw DimensionMismatch("ambient dimensions differ");
  Eigen::MatrixXcd joined(a.ambient(), a.dim() + b.dim());
  joined.leftCols(a.dim()) = a.basis();
  joined.rightCols(b.dim()) = b.basis();
  if (joined.cols() == 0) return zero_subspace(a.ambient());
  // Rank truncation instead of the full-rank demand of orthonormalize.
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(joined, Eigen::ComputeThinU);
  const auto& sigma = svd.singularValues();
  double largest = sigma(0);
  int rank = 0;
  for (int i = 0; i < sigma.size(); ++i)
    if (largest > 0 && sigma(i) > rank_tol * largest) ++rank;
  return Subspace(svd.matrixU().leftCols(rank));
}

bool contains(const Subspace& big, const Subspace& small, double tol) {
  if (big.ambient() != small.ambient())
    throw DimensionMismatch("ambient dimensions differ");
  if (small.dim() == 0) return true;
  double defect = (small.basis() - big.projector() * small.basis()).norm();
  return defect <= tol;
}

double subspace_distance(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw DimensionMismatch("ambient dimensions differ");
  return (a.projector() - b.projector()).norm();
}

GrassmannLine line_through(const Subspace& w, const Subspace& line,
                           const Subspace& hyperplane, double rank_tol) {
  const int n = w.ambient();
  const int k = w.dim();
  if (line.ambient() != n || hyperplane.ambient() != n)
    throw DimensionMismatch("ambient dimensions differ");
  if (line.dim() != 1 || hyperplane.dim() != n - 1)
    throw DimensionMismatch("expected a line and a hyperplane");
  if (k < 1 || k > n - 1)
    throw DimensionMismatch("k-plane dimension must satisfy 1 <= k <= n-1");
  if (!contains(hyperplane, line))
    throw DimensionMismatch("line must lie inside the hyperplane");

  if (contains(w, line))
    throw GenericityViolated("w contains the incidence line: infinitely many curves");
  Subspace kernel = intersect(w, hyperplane, rank_tol);
  if (kernel.dim() != k - 1)
    throw GenericityViolated("w meets the hyperplane non-transversally: infinitely many curves");

  // The curve's point inside the incidence locus is forced: kernel + line.
  Subspace point = subspace_sum(kernel, line, rank_tol);
  Subspace span = subspace_sum(w, point, rank_tol);
  if (span.dim() != k + 1)
    throw GenericityViolated("span of the forced curve is degenerate");
  return {std::move(kernel), std::move(span)};
}

HermitianMatrix flag_to_hermitian(const std::vector<Subspace>& flag, const Spectrum& s) {
  FlagType f = flag_type(s);
  const int n = s.size();
  if (static_cast<int>(flag.size()) != f.blocks())
    throw DimensionMismatch("flag length does not match the number of eigenvalue blocks");
  for (int j = 0; j < f.blocks(); ++j) {
    const Subspace& step = flag[static_cast<size_t>(j)];
    if (step.ambient() != n)
      throw DimensionMismatch("flag step has wrong ambient dimension");
    if (step.dim() != f.cumulative[static_cast<size_t>(j)])
      throw DimensionMismatch("flag step " + std::to_string(j + 1) + " has dimension " +
                              std::to_string(step.dim()) + ", expected " +
                              std::to_string(f.cumulative[static_cast<size_t>(j)]));
    if (j > 0 && !contains(step, flag[static_cast<size_t>(j - 1)]))
      throw NestingViolation("flag steps are not nested within tolerance");
  }

  std::vector<Rational> levels = s.distinct_values();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd previous = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < f.blocks(); ++j) {
    Eigen::MatrixXcd projector = flag[static_cast<size_t>(j)].projector();
    a += levels[static_cast<size_t>(j)].to_double() * (projector - previous);
    previous = std::move(projector);
  }
  a = ((a + a.adjoint()) / 2.0).eval();  // kill roundoff asymmetry
  return HermitianMatrix(std::move(a));
}

}  // namespace orbitwidth
