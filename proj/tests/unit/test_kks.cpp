#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "orbitwidth/kks.hpp"
#include "orbitwidth/random.hpp"

using namespace orbitwidth;

namespace {

Spectrum spec(std::initializer_list<Rational> values) {
  return Spectrum(std::vector<Rational>(values));
}

SkewHermitianMatrix random_skew(std::mt19937_64& rng, int n) {
  Eigen::MatrixXcd z = random_complex_gaussian(rng, n, n);
  return SkewHermitianMatrix(((z - z.adjoint()) / 2).eval());
}

HermitianMatrix random_hermitian(std::mt19937_64& rng, int n) {
  Eigen::MatrixXcd z = random_complex_gaussian(rng, n, n);
  return HermitianMatrix(((z + z.adjoint()) / 2).eval());
}

}  // namespace

TEST_CASE("pairing at a point") {
  auto rng = trial_rng(71, 0);
  HermitianMatrix a = random_hermitian(rng, 4);
  SkewHermitianMatrix x = random_skew(rng, 4);
  CHECK(kks_eval(a, x, x) == doctest::Approx(0.0).epsilon(1e-12));

  // 2x2 worked example: [X, Y] = 2i diag(1, -1), Trace(iA[X,Y]) = -2
  Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(2, 2);
  diag(0, 0) = 1;
  Eigen::MatrixXcd xm(2, 2), ym(2, 2);
  xm << 0, 1, -1, 0;
  ym << 0, std::complex<double>(0, 1), std::complex<double>(0, 1), 0;
  CHECK(kks_eval(HermitianMatrix(diag), SkewHermitianMatrix(xm), SkewHermitianMatrix(ym)) ==
        doctest::Approx(-2.0));

  // commuting generators annihilate the form
  Eigen::MatrixXcd d1 = Eigen::MatrixXcd::Zero(3, 3), d2 = Eigen::MatrixXcd::Zero(3, 3);
  d1(0, 0) = std::complex<double>(0, 1);
  d2(1, 1) = std::complex<double>(0, -2);
  HermitianMatrix any = random_hermitian(rng, 3);
  CHECK(kks_eval(any, SkewHermitianMatrix(d1), SkewHermitianMatrix(d2)) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("pairing is antisymmetric and conjugation invariant") {
  for (int trial = 0; trial < 20; ++trial) {
    auto rng = trial_rng(73, static_cast<std::uint64_t>(trial));
    int n = 2 + static_cast<int>(trial % 4);
    HermitianMatrix a = random_hermitian(rng, n);
    SkewHermitianMatrix x = random_skew(rng, n);
    SkewHermitianMatrix y = random_skew(rng, n);
    double forward = kks_eval(a, x, y);
    double backward = kks_eval(a, y, x);
    CHECK(forward == doctest::Approx(-backward).epsilon(1e-12));

    Eigen::MatrixXcd u = random_unitary(rng, n);
    double conjugated = kks_eval(HermitianMatrix(u * a.entries() * u.adjoint()),
                                 SkewHermitianMatrix(u * x.entries() * u.adjoint()),
                                 SkewHermitianMatrix(u * y.entries() * u.adjoint()));
    CHECK(conjugated == doctest::Approx(forward).epsilon(1e-9));
  }
}

TEST_CASE("sphere chart endpoints and isospectrality") {
  SpherePatch patch{{5, 2, 0}, 1, 2, 64, 64};

  SpherePointFrame north = sphere_point(patch, 0.0, 0.3);
  Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(3, 3);
  diag(0, 0) = 5; diag(1, 1) = 2;
  CHECK((north.point.entries() - diag).norm() < 1e-12);

  SpherePointFrame south = sphere_point(patch, std::numbers::pi, 1.1);
  Eigen::MatrixXcd swapped = Eigen::MatrixXcd::Zero(3, 3);
  swapped(0, 0) = 2; swapped(1, 1) = 5;
  CHECK((south.point.entries() - swapped).norm() < 1e-12);

  for (double theta : {0.4, 1.3, 2.8}) {
    for (double phi : {0.0, 2.2, 5.9}) {
      SpherePointFrame frame = sphere_point(patch, theta, phi);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(frame.point.entries());
      Eigen::VectorXd expected(3);
      expected << 0, 2, 5;
      CHECK((solver.eigenvalues() - expected).cwiseAbs().maxCoeff() < 1e-12);

      // the generators really are the chart's logarithmic derivatives:
      // central finite differences of A reproduce the commutators
      const double h = 1e-5;
      Eigen::MatrixXcd dtheta = (sphere_point(patch, theta + h, phi).point.entries() -
                                 sphere_point(patch, theta - h, phi).point.entries()) /
                                (2 * h);
      Eigen::MatrixXcd bracket = frame.theta_generator.entries() * frame.point.entries() -
                                 frame.point.entries() * frame.theta_generator.entries();
      CHECK((dtheta - bracket).norm() < 1e-6);

      Eigen::MatrixXcd dphi = (sphere_point(patch, theta, phi + h).point.entries() -
                               sphere_point(patch, theta, phi - h).point.entries()) /
                              (2 * h);
      Eigen::MatrixXcd bracket_phi = frame.phi_generator.entries() * frame.point.entries() -
                                     frame.point.entries() * frame.phi_generator.entries();
      CHECK((dphi - bracket_phi).norm() < 1e-6);

      // chart integrand in closed form: (F_i - F_j) sin(theta) / 2
      CHECK(kks_integrand(patch, theta, phi) ==
            doctest::Approx(3.0 / 2 * std::sin(theta)).epsilon(1e-10));
    }
  }
}

TEST_CASE("sphere areas reproduce the moment gap") {
  SpherePatch unit{{1, 0}, 1, 2, 512, 512};
  CHECK(std::abs(sphere_area(unit) - 1.0) < 1e-6);

  SpherePatch gap{{5, 2, 0}, 1, 2, 512, 512};
  CHECK(std::abs(sphere_area(gap) - 3.0) < 1e-6);

  SpherePatch degenerate{{2, 2, 0}, 1, 2, 512, 512};
  CHECK_THROWS_AS(sphere_area(degenerate), ToleranceViolation);
}

TEST_CASE("quadrature error decreases when the grid doubles") {
  double previous = 1.0;
  for (int grid : {64, 128, 256, 512}) {
    SpherePatch patch{{1, 0}, 1, 2, grid, grid};
    double error = std::abs(sphere_area(patch) - 1.0);
    CHECK(error < previous);
    previous = error;
  }
}

TEST_CASE("sphere areas match the moment graph edge labels") {
  Spectrum s = spec({3, 1, 0});
  GkmGraph g = gkm_graph(s);
  for (const GkmEdge& e : g.edges) {
    SpherePatch patch{g.vertices[static_cast<size_t>(e.u)], e.swap.first, e.swap.second, 128, 128};
    CHECK(std::abs(sphere_area(patch) - e.area.to_double()) < 1e-5);
  }
}
