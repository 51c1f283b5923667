#pragma once

#include <utility>

#include "orbitwidth/gkm.hpp"
#include "orbitwidth/hermitian.hpp"

namespace orbitwidth {

inline constexpr int kDefaultGrid = 512;

/// Chart data for the 2-sphere obtained by rotating the fixed point F inside
/// the (i, j) coordinate plane; requires F_i != F_j (otherwise the sphere
/// collapses to a point).
struct SpherePatch {
  RationalVector fixed_point;
  int i = 1;  // 1-based, i < j
  int j = 2;
  int grid_theta = kDefaultGrid;
  int grid_phi = kDefaultGrid;
};

/// Canonical symplectic pairing at a Hermitian point: Trace(iA [X, Y]).
/// The trace is exactly real in exact arithmetic; the computed imaginary
/// part must stay below 1e-9 and is discarded.
double kks_eval(const HermitianMatrix& a, const SkewHermitianMatrix& x,
                const SkewHermitianMatrix& y);

struct SpherePointFrame {
  HermitianMatrix point;
  SkewHermitianMatrix theta_generator;
  SkewHermitianMatrix phi_generator;
};

/// Point A(theta, phi) = U diag(F) U* on the sphere together with the
/// logarithmic derivatives X_theta = (dU/dtheta) U*, X_phi = (dU/dphi) U*,
/// so that dA/dtheta = [X_theta, A] and dA/dphi = [X_phi, A]. U is the
/// identity outside the (i, j) plane, where it rotates by
///   [[cos(theta/2), -e^{-i phi} sin(theta/2)],
///    [e^{i phi} sin(theta/2), cos(theta/2)]].
SpherePointFrame sphere_point(const SpherePatch& p, double theta, double phi);

/// The pairing evaluated along the chart: kks_eval of sphere_point.
double kks_integrand(const SpherePatch& p, double theta, double phi);

struct SphereAreaResult {
  double area = 0.0;             // |signed_value|
  double signed_value = 0.0;     // orientation carried by the chart
};

/// Symplectic area of the patch sphere, by quadrature of the chart integrand
/// over [0, pi] x [0, 2pi): composite Simpson in theta (odd grid_theta is
/// rounded up to even), midpoint in phi (the integrand is periodic in phi,
/// so the midpoint sum converges spectrally there). Areas are measured
/// against period-1 circles, i.e. in the units in which moment-polytope edge
/// lengths are sphere areas; the raw pairing integral carries an extra
/// factor of 2*pi which is divided out. Converges to |F_i - F_j|.
SphereAreaResult sphere_area_result(const SpherePatch& p);
double sphere_area(const SpherePatch& p);

}  // namespace orbitwidth
