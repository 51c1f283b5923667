#pragma once

#include <Eigen/Dense>
#include <complex>

#include "orbitwidth/errors.hpp"

namespace orbitwidth {

inline constexpr double kHermitianTol = 1e-10;

/// n x n complex matrix validated to satisfy A* = A entrywise within
/// kHermitianTol at construction.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
      throw DimensionMismatch("Hermitian matrix must be square and non-empty");
    double defect = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (defect > kHermitianTol)
      throw ToleranceViolation("matrix is not Hermitian within tolerance");
  }

  int size() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const { return entries_; }

 private:
  Eigen::MatrixXcd entries_;
};

/// n x n complex matrix validated to satisfy X* = -X within kHermitianTol.
class SkewHermitianMatrix {
 public:
  explicit SkewHermitianMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
      throw DimensionMismatch("skew-Hermitian matrix must be square and non-empty");
    double defect = (entries_ + entries_.adjoint()).cwiseAbs().maxCoeff();
    if (defect > kHermitianTol)
      throw ToleranceViolation("matrix is not skew-Hermitian within tolerance");
  }

  int size() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const { return entries_; }

 private:
  Eigen::MatrixXcd entries_;
};

}  // namespace orbitwidth
