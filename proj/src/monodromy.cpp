#include "mck/monodromy.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "mck/cubic.hpp"
#include "mck/errors.hpp"

namespace mck {

namespace {

// Characteristic cubic of M as a monic polynomial in tau:
// tau^3 + a tau^2 + b tau + c with a = -tr M, b = sum of principal 2x2
// minors, c = -det M.
void char_cubic(const Mat3C& M, Complex& a, Complex& b, Complex& c) {
  const Complex tr = M.trace();
  const Complex tr2 = (M * M).trace();
  a = -tr;
  b = 0.5 * (tr * tr - tr2);
  c = -M.determinant();
}

Complex char_poly(const Mat3C& M, Complex tau) {
  return (M - tau * Mat3C::Identity()).determinant();
}

}  // namespace

std::array<Complex, 3> multipliers_of(const Mat3C& M) {
  Complex a, b, c;
  char_cubic(M, a, b, c);
  auto roots = solve_cubic_monic(a, b, c);
  // polish on det(M - tau I) directly; derivative by central differences of
  // the 3x3 determinant is exact enough at this scale
  for (auto& t : roots) {
    for (int it = 0; it < 2; ++it) {
      const double h = 1e-7 * (1.0 + std::abs(t));
      const Complex d = (char_poly(M, t + h) - char_poly(M, t - h)) / (2.0 * h);
      if (d == Complex(0)) break;
      t -= char_poly(M, t) / d;
    }
  }
  return roots;
}

Complex discriminant_of(const Mat3C& M) {
  Complex a, b, c;
  char_cubic(M, a, b, c);
  return cubic_discriminant_monic(a, b, c);
}

MonodromyData monodromy_matrix(const CoefficientPair<Complex>& psi,
                               const SpectralPoint& pt, int steps) {
  MonodromyData data;
  data.pt = pt;
  data.M = propagate_third_order(psi, pt, 1.0, steps).at_end();
  data.multipliers = multipliers_of(data.M);
  data.rho = discriminant_of(data.M);
  return data;
}

MonodromyData transpose_monodromy(const CoefficientPair<Complex>& psi,
                                  const SpectralPoint& pt, int steps) {
  MonodromyData data;
  data.pt = pt;
  data.M = propagate_transpose(psi, pt, 1.0, steps).at_end();
  data.multipliers = multipliers_of(data.M);
  data.rho = discriminant_of(data.M);
  return data;
}

Complex discriminant_rho(const CoefficientPair<Complex>& psi,
                         const SpectralPoint& pt, int steps) {
  return discriminant_of(propagate_third_order(psi, pt, 1.0, steps).at_end());
}

Mat3C symmetry_J() {
  Mat3C J;
  J << 0, 0, 1,
      0, -1, 0,
      1, 0, 0;
  return J;
}

Complex rho_free(Complex z) {
  const Complex w = omega();
  const Complex s1 = std::sin(0.5 * kSqrt3 * z);
  const Complex s2 = std::sin(0.5 * kSqrt3 * w * z);
  const Complex s3 = std::sin(0.5 * kSqrt3 * w * w * z);
  return -64.0 * s1 * s1 * s2 * s2 * s3 * s3;
}

std::pair<Complex, int> select_tau3(const MonodromyData& data) {
  const Complex z = data.pt.z;
  std::array<double, 3> dist;
  for (int k = 0; k < 3; ++k) {
    const Complex t = data.multipliers[k];
    dist[k] = t == Complex(0) ? std::numeric_limits<double>::infinity()
                              : std::abs(std::log(t) - z);
  }
  int ibest = 0;
  for (int k = 1; k < 3; ++k)
    if (dist[k] < dist[ibest]) ibest = k;
  double second = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 3; ++k)
    if (k != ibest) second = std::min(second, dist[k]);
  if (!std::isfinite(dist[ibest])) fail(ErrorCode::NonFinite, "no usable multiplier");
  if (second - dist[ibest] < 1e-9)
    fail(ErrorCode::AmbiguousBranch,
         "two multipliers tie for the tau_3 branch (near a ramification)");
  return {data.multipliers[ibest], ibest};
}

FloquetData floquet_solution(const CoefficientPair<Complex>& psi,
                             const SpectralPoint& pt, Complex tau, int steps) {
  const Trajectory3 traj = propagate_third_order(psi, pt, 1.0, steps);
  const Mat3C& M = traj.at_end();

  // Newton-polish tau on the characteristic polynomial and check simplicity.
  Complex t = tau;
  for (int it = 0; it < 4; ++it) {
    const double h = 1e-7 * (1.0 + std::abs(t));
    const Complex d = (char_poly(M, t + h) - char_poly(M, t - h)) / (2.0 * h);
    if (d == Complex(0)) break;
    t -= char_poly(M, t) / d;
  }
  const double scale = std::pow(1.0 + std::abs(t), 3);
  if (std::abs(char_poly(M, t)) > 1e-9 * scale)
    fail(ErrorCode::NotSimple, "tau does not converge to an eigenvalue of M");
  const auto all = multipliers_of(M);
  for (const auto& other : all) {
    const double d = std::abs(other - t);
    if (d > 1e-12 * (1.0 + std::abs(t)) && d < 1e-6 * (1.0 + std::abs(t)))
      fail(ErrorCode::NotSimple, "tau is within 1e-6 of another multiplier");
  }

  Eigen::ComplexEigenSolver<Mat3C> es(M);
  if (es.info() != Eigen::Success)
    fail(ErrorCode::NonFinite, "eigen decomposition of M failed");
  int ibest = 0;
  for (int k = 1; k < 3; ++k)
    if (std::abs(es.eigenvalues()[k] - t) < std::abs(es.eigenvalues()[ibest] - t))
      ibest = k;
  Vec3C v = es.eigenvectors().col(ibest);
  if (std::abs(v[0]) < 1e-12 * v.norm())
    fail(ErrorCode::VanishingEta,
         "Floquet eigenvector has vanishing first component (eta(0) = 0)");
  v /= v[0];

  FloquetData fd;
  fd.pt = pt;
  fd.tau = t;
  fd.x_grid = traj.x_grid;
  const int n = static_cast<int>(traj.Phi.size());
  fd.eta.resize(n);
  fd.eta1.resize(n);
  fd.eta2.resize(n);
  double min_abs = std::numeric_limits<double>::infinity();
  for (int k = 0; k < n; ++k) {
    const Vec3C y = traj.Phi[k] * v;
    fd.eta[k] = y[0];
    fd.eta1[k] = y[1];
    fd.eta2[k] = y[2];
    min_abs = std::min(min_abs, std::abs(y[0]));
  }
  fd.min_abs_eta = min_abs;
  if (min_abs < 1e-6)
    fail(ErrorCode::VanishingEta, "Floquet solution vanishes on the grid");
  return fd;
}

}  // namespace mck
