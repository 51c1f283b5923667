#include "orbitwidth/kks.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace orbitwidth {

namespace {

using Complex = std::complex<double>;

struct Block2 {
  Complex a11, a12, a21, a22;

  Block2 operator*(const Block2& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
  }
  Block2 operator-(const Block2& o) const {
    return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
  }
  Block2 adjoint() const {
    return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
  }
};

struct ChartFrame {
  Block2 rotation;  // U restricted to the (i, j) plane
  Block2 point;     // A = U diag(F_i, F_j) U* restricted to the plane
  Block2 theta_gen;
  Block2 phi_gen;
};

// Everything that happens on the sphere is confined to the (i, j) plane:
// U is the identity elsewhere, so A agrees with diag(F) off the plane and
// both generators vanish there.
ChartFrame chart_frame(double fi, double fj, double theta, double phi) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  const Complex phase(std::cos(phi), std::sin(phi));
  const Complex ibar = Complex(0, 1);

  ChartFrame frame;
  frame.rotation = {Complex(c), -std::conj(phase) * s, phase * s, Complex(c)};
  Block2 d{Complex(fi), Complex(0), Complex(0), Complex(fj)};
  frame.point = frame.rotation * d * frame.rotation.adjoint();
  Block2 dtheta{Complex(-s / 2), -std::conj(phase) * (c / 2), phase * (c / 2), Complex(-s / 2)};
  frame.theta_gen = dtheta * frame.rotation.adjoint();
  Block2 dphi{Complex(0), ibar * std::conj(phase) * s, ibar * phase * s, Complex(0)};
  frame.phi_gen = dphi * frame.rotation.adjoint();
  return frame;
}

// Trace(iA[X_theta, X_phi]) collapses to the (i, j) plane because the
// commutator vanishes outside it; the off-plane diagonal of A meets only
// zeros of the commutator.
double chart_integrand(const ChartFrame& frame) {
  Block2 commutator = frame.theta_gen * frame.phi_gen - frame.phi_gen * frame.theta_gen;
  Complex trace = frame.point.a11 * commutator.a11 + frame.point.a12 * commutator.a21 +
                  frame.point.a21 * commutator.a12 + frame.point.a22 * commutator.a22;
  return -trace.imag();  // Re(i t) = -Im(t)
}

void validate_patch(const SpherePatch& p) {
  const int n = static_cast<int>(p.fixed_point.size());
  if (p.i < 1 || p.j <= p.i || p.j > n)
    throw DimensionMismatch("sphere patch positions must satisfy 1 <= i < j <= n");
  if (p.fixed_point[static_cast<size_t>(p.i - 1)] == p.fixed_point[static_cast<size_t>(p.j - 1)])
    throw ToleranceViolation("equal values at the swapped positions: no sphere");
  if (p.grid_theta < 2 || p.grid_phi < 1)
    throw DimensionMismatch("quadrature grid is too small");
}

void embed_block(Eigen::MatrixXcd& m, const Block2& b, int i, int j) {
  m(i, i) = b.a11;
  m(i, j) = b.a12;
  m(j, i) = b.a21;
  m(j, j) = b.a22;
}

}  // namespace

double kks_eval(const HermitianMatrix& a, const SkewHermitianMatrix& x,
                const SkewHermitianMatrix& y) {
  if (a.size() != x.size() || a.size() != y.size())
    throw DimensionMismatch("kks_eval arguments must share one dimension");
  Eigen::MatrixXcd commutator = x.entries() * y.entries() - y.entries() * x.entries();
  Complex trace = (a.entries() * commutator).trace();
  Complex value = Complex(0, 1) * trace;
  if (std::abs(value.imag()) >= 1e-9)
    throw ToleranceViolation("pairing trace has imaginary part " +
                             std::to_string(value.imag()));
  return value.real();
}

SpherePointFrame sphere_point(const SpherePatch& p, double theta, double phi) {
  validate_patch(p);
  const int n = static_cast<int>(p.fixed_point.size());
  const int i = p.i - 1;
  const int j = p.j - 1;
  ChartFrame frame = chart_frame(p.fixed_point[static_cast<size_t>(i)].to_double(),
                                 p.fixed_point[static_cast<size_t>(j)].to_double(), theta, phi);

  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (int r = 0; r < n; ++r) a(r, r) = p.fixed_point[static_cast<size_t>(r)].to_double();
  embed_block(a, frame.point, i, j);
  Eigen::MatrixXcd x_theta = Eigen::MatrixXcd::Zero(n, n);
  embed_block(x_theta, frame.theta_gen, i, j);
  Eigen::MatrixXcd x_phi = Eigen::MatrixXcd::Zero(n, n);
  embed_block(x_phi, frame.phi_gen, i, j);

  return {HermitianMatrix(std::move(a)), SkewHermitianMatrix(std::move(x_theta)),
          SkewHermitianMatrix(std::move(x_phi))};
}

double kks_integrand(const SpherePatch& p, double theta, double phi) {
  SpherePointFrame frame = sphere_point(p, theta, phi);
  return kks_eval(frame.point, frame.theta_generator, frame.phi_generator);
}

SphereAreaResult sphere_area_result(const SpherePatch& p) {
  validate_patch(p);
  const double fi = p.fixed_point[static_cast<size_t>(p.i - 1)].to_double();
  const double fj = p.fixed_point[static_cast<size_t>(p.j - 1)].to_double();

  int n_theta = p.grid_theta + (p.grid_theta & 1);  // Simpson needs an even count
  const int n_phi = p.grid_phi;
  const double h_theta = std::numbers::pi / n_theta;
  const double h_phi = 2 * std::numbers::pi / n_phi;

  double integral = 0.0;
  for (int k = 0; k <= n_theta; ++k) {
    const double theta = k * h_theta;
    const double simpson = (k == 0 || k == n_theta) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
    double phi_sum = 0.0;
    for (int m = 0; m < n_phi; ++m) {
      const double phi = (m + 0.5) * h_phi;
      phi_sum += chart_integrand(chart_frame(fi, fj, theta, phi));
    }
    integral += simpson * (h_theta / 3.0) * h_phi * phi_sum;
  }

  SphereAreaResult result;
  result.signed_value = integral / (2 * std::numbers::pi);
  result.area = std::abs(result.signed_value);
  return result;
}

double sphere_area(const SpherePatch& p) { return sphere_area_result(p).area; }

}  // namespace orbitwidth
