#include "mck/three_point.hpp"

#include <cmath>

#include "mck/errors.hpp"

namespace mck {

namespace {

int resolve_steps2(const SpectralPoint& pt, int steps) {
  if (steps != 0) return steps;
  return std::max(2048, 2 * default_steps(std::abs(pt.z)));
}

Trajectory3 propagate_which(const CoefficientPair<Complex>& psi,
                            const SpectralPoint& pt, Which which, int steps) {
  return which == Which::Direct ? propagate_third_order(psi, pt, 2.0, steps)
                                : propagate_transpose(psi, pt, 2.0, steps);
}

Complex bdet_of(const Trajectory3& traj) {
  const Mat3C& mid = traj.at_mid();
  const Mat3C& end = traj.at_end();
  return mid(0, 1) * end(0, 2) - mid(0, 2) * end(0, 1);
}

}  // namespace

Complex three_point_determinant(const CoefficientPair<double>& psi,
                                const SpectralPoint& pt, Which which,
                                int steps) {
  const auto psic = complexified(psi);
  return bdet_of(propagate_which(psic, pt, which, resolve_steps2(pt, steps)));
}

Complex three_point_determinant_free(Complex lambda) {
  if (lambda == Complex(0)) return Complex(1);
  const Complex z = SpectralPoint::from_lambda(lambda).z;
  const Complex w = omega();
  return 8.0 / (3.0 * kSqrt3 * lambda) * std::sin(0.5 * kSqrt3 * z) *
         std::sin(0.5 * kSqrt3 * w * z) * std::sin(0.5 * kSqrt3 * w * w * z);
}

ThreePointEig find_three_point_eig(const CoefficientPair<double>& psi, int n,
                                   Which which, const ThreePointOptions& opts) {
  if (n == 0) throw std::invalid_argument("three-point disks have n != 0");
  const auto psic = complexified(psi);
  const ComplexFn bdet = [&](Complex lambda) {
    const SpectralPoint pt = SpectralPoint::from_lambda(lambda);
    return bdet_of(propagate_which(psic, pt, which, resolve_steps2(pt, opts.steps)));
  };
  const DiskSpec disk = DiskSpec::index(n);
  const ContourSums sums = contour_power_sums(bdet, disk, opts.contour_samples);
  if (sums.count != 1)
    fail(ErrorCode::WrongCount,
         "disk " + std::to_string(n) + " holds " + std::to_string(sums.count) +
             " three-point eigenvalues, expected 1");
  const Complex mu = refine_zero(bdet, sums.s1);

  // eigenfunction y(x) = phi_2(x) phi_3(2) - phi_3(x) phi_2(2), scaled to
  // y'(0) = 1 (i.e. divided by phi_3(2))
  const SpectralPoint pt = SpectralPoint::from_lambda(mu);
  const Trajectory3 traj =
      propagate_which(psic, pt, which, resolve_steps2(pt, opts.steps));
  const Mat3C& end = traj.at_end();
  const Complex c2 = end(0, 1);  // phi_2(2)
  const Complex c3 = end(0, 2);  // phi_3(2)
  const double mscale = end.cwiseAbs().maxCoeff();
  if (std::abs(c3) < 1e-8 * mscale)
    fail(ErrorCode::NotSimple,
         "three-point eigenfunction has y'(0) ~ 0; normalization y'(0)=1 fails");

  ThreePointEig eig;
  eig.n = n;
  eig.mu = mu;
  eig.which = which;
  eig.x_grid = traj.x_grid;
  const int m = static_cast<int>(traj.Phi.size());
  eig.y.resize(m);
  eig.y1.resize(m);
  eig.y2.resize(m);
  for (int k = 0; k < m; ++k) {
    const Mat3C& P = traj.Phi[k];
    eig.y[k] = P(0, 1) - P(0, 2) * c2 / c3;
    eig.y1[k] = P(1, 1) - P(1, 2) * c2 / c3;
    eig.y2[k] = P(2, 1) - P(2, 2) * c2 / c3;
  }
  // Floquet multiplier from the quasi-derivative triple at x = 1:
  // (0, y'(0), y^[2](0)) is an eigenvector, so A = y'(1)/y'(0) = y'(1)
  eig.floquet_A = eig.y1[(m - 1) / 2];
  return eig;
}

std::vector<ThreePointEig> find_three_point_eigs(
    const CoefficientPair<double>& psi, int n_max, Which which,
    const ThreePointOptions& opts) {
  if (norm_h1(psi) > opts.smallness)
    fail(ErrorCode::WrongCount,
         "norm_h1(psi) exceeds the smallness threshold; disk localization is "
         "not guaranteed");
  std::vector<ThreePointEig> out;
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(find_three_point_eig(psi, -n, which, opts));
    out.push_back(find_three_point_eig(psi, n, which, opts));
  }
  return out;
}

double norming_constant_h(const CoefficientPair<double>& psi,
                          const ThreePointEig& eig) {
  const int n = eig.n;
  if (n < 1) throw std::invalid_argument("norming constants need n >= 1");
  if (eig.which != Which::Transpose)
    throw std::invalid_argument("norming constants use the transpose eigenfunction");
  const Complex mu = eig.mu;
  if (std::abs(mu.imag()) > 1e-6 * (1.0 + std::abs(mu)))
    fail(ErrorCode::BranchError, "transpose 3-point eigenvalue is not real");

  const SpectralPoint pt = SpectralPoint::from_lambda(Complex(mu.real(), 0.0));
  const MonodromyData mono = monodromy_matrix(psi, pt);
  const auto [tau3, idx] = select_tau3(mono);
  if (!(tau3.real() > 0.0) ||
      std::abs(tau3.imag()) > 1e-8 * std::abs(tau3))
    fail(ErrorCode::BranchError,
         "tau_3(mu~_n) is not on the positive real axis; the positive square "
         "root is undefined");

  const int m = static_cast<int>(eig.y1.size());
  const Complex y1_at_1 = eig.y1[(m - 1) / 2];
  const double value = std::abs(y1_at_1) / std::sqrt(tau3.real());
  const double pn = kPi * n;
  return 8.0 * pn * pn * std::log(value);
}

double norming_constant_h(const CoefficientPair<double>& psi, int n,
                          const ThreePointOptions& opts) {
  return norming_constant_h(psi, find_three_point_eig(psi, n, Which::Transpose, opts));
}

}  // namespace mck
