#pragma once

#include <cstdint>
#include <random>

#include "orbitwidth/subspace.hpp"

namespace orbitwidth {

/// Independent generator for one trial, derived from the master seed so that
/// trials can run in any order (or in parallel) with identical results.
inline std::mt19937_64 trial_rng(std::uint64_t master_seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                    static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

inline Eigen::MatrixXcd random_complex_gaussian(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      double re = normal(rng);
      double im = normal(rng);
      m(r, c) = std::complex<double>(re, im);
    }
  return m;
}

/// Unitary-invariant random k-plane: orthonormalized complex Gaussian matrix.
inline Subspace random_subspace(std::mt19937_64& rng, int n, int k) {
  return orthonormalize(random_complex_gaussian(rng, n, k));
}

/// Haar-distributed unitary via QR with the phase normalization that makes
/// the factorization unique (R diagonal rotated to the positive real axis).
inline Eigen::MatrixXcd random_unitary(std::mt19937_64& rng, int n) {
  Eigen::MatrixXcd z = random_complex_gaussian(rng, n, n);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  Eigen::VectorXcd phases(n);
  for (int i = 0; i < n; ++i) {
    std::complex<double> d = r(i, i);
    phases(i) = std::abs(d) > 0 ? d / std::abs(d) : std::complex<double>(1, 0);
  }
  return q * phases.asDiagonal();
}

}  // namespace orbitwidth
