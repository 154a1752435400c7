#include "mck/mckean.hpp"

#include <unsupported/Eigen/FFT>
#include <cmath>

#include "mck/errors.hpp"

namespace mck {

namespace {

// True Fourier coefficients c_k (f_j = sum_k c_k e^{2 pi i k j/M}) from
// periodic samples, and back.
VecC dft_coeffs(const VecC& f) {
  Eigen::FFT<double> fft;
  VecC out(f.size());
  fft.fwd(out, f);
  return out / static_cast<double>(f.size());
}

VecC idft_samples(const VecC& c) {
  Eigen::FFT<double> fft;
  VecC out(c.size());
  fft.inv(out, c);
  return out * static_cast<double>(c.size());
}

int signed_freq(int k, int M) { return k < (M + 1) / 2 ? k : k - M; }

// Exponential-basis coefficients of a trig series on the M-point grid.
VecC series_modes(const TrigSeries<Complex>& s, int M) {
  VecC c = VecC::Zero(M);
  c[0] = s.constant;
  const int m = s.modes();
  for (int n = 1; n <= m && n < M / 2; ++n) {
    const Complex cn = s.cos_coeff(n), sn = s.sin_coeff(n);
    c[n] += 0.5 * (cn - Complex(0, 1) * sn);
    c[M - n] += 0.5 * (cn + Complex(0, 1) * sn);
  }
  return c;
}

}  // namespace

XiData xi_from_floquet(const FloquetData& fd) {
  if (fd.min_abs_eta < 1e-6)
    fail(ErrorCode::VanishingEta, "xi is undefined where eta vanishes");
  XiData xd;
  xd.pt = fd.pt;
  xd.x_grid = fd.x_grid;
  const int n = static_cast<int>(fd.eta.size());
  xd.xi.resize(n);
  xd.xi1.resize(n);
  for (int k = 0; k < n; ++k) {
    const Complex ratio = fd.eta1[k] / fd.eta[k];
    xd.xi[k] = ratio - fd.pt.z;
    xd.xi1[k] = fd.eta2[k] / fd.eta[k] - ratio * ratio;  // = xi' + p
  }
  return xd;
}

double xi_residual(const CoefficientPair<Complex>& psi, const SpectralPoint& pt,
                   const XiData& xd) {
  const int M = static_cast<int>(xd.xi.size()) - 1;  // closed grid
  if (M < 2) throw std::invalid_argument("xi grid too small");
  // spectral derivative of the periodic xi1 sequence
  VecC modes = dft_coeffs(xd.xi1.head(M));
  for (int k = 0; k < M; ++k) {
    const int ks = signed_freq(k, M);
    modes[k] *= (2 * k == M) ? Complex(0)
                             : Complex(0, 2.0 * kPi * ks);
  }
  const VecC dxi1 = idft_samples(modes);

  const Complex z = pt.z;
  double sup = 0.0;
  for (int j = 0; j < M; ++j) {
    const double x = xd.x_grid[j];
    const Complex p = psi.p.eval(x);
    const Complex q = psi.q.eval(x);
    const Complex xi = xd.xi[j];
    const Complex xi1 = xd.xi1[j];
    const Complex res = dxi1[j] + 3.0 * z * xi1 + 3.0 * z * z * xi +
                        3.0 * xi * xi1 + 3.0 * z * xi * xi + xi * xi * xi -
                        p * xi - z * p + q;
    sup = std::max(sup, std::abs(res));
  }
  return sup;
}

int default_potential_grid(double abs_z) {
  int g = std::max(2048, default_steps(abs_z));
  if (g % 2) ++g;
  return g;
}

EnergyPotential potential_direct(const CoefficientPair<double>& psi, Complex E,
                                 int grid) {
  const SpectralPoint pt = SpectralPoint::from_E(E);
  if (grid == 0) grid = default_potential_grid(std::abs(pt.z));
  const MonodromyData mono = monodromy_matrix(psi, pt, grid);
  const auto [tau3, idx] = select_tau3(mono);
  const FloquetData fd = floquet_solution(psi, pt, tau3, grid);
  const XiData xd = xi_from_floquet(fd);

  EnergyPotential ep;
  ep.E = E;
  ep.pt = pt;
  ep.x_grid = fd.x_grid;
  ep.route = Route::Direct;
  const int n = static_cast<int>(fd.eta.size());
  ep.V.resize(n);
  double gap = 0.0;
  for (int k = 0; k < n; ++k) {
    const double x = fd.x_grid[k];
    const Complex p = psi.p.eval(x);
    const Complex ratio = fd.eta1[k] / fd.eta[k];
    const Complex v1 =
        E - 0.5 * p - 1.5 * fd.eta2[k] / fd.eta[k] + 0.75 * ratio * ratio;
    const Complex xi_p_z = xd.xi[k] + pt.z;
    const Complex v2 = E - 2.0 * p - 1.5 * (xd.xi1[k] - p) -
                       0.75 * xi_p_z * xi_p_z;
    ep.V[k] = v1;
    gap = std::max(gap, std::abs(v1 - v2));
  }
  ep.route_discrepancy = gap;
  return ep;
}

Complex small_denominator(Complex z) {
  const Complex w = omega();
  return 4.0 * std::sin(0.5 * kSqrt3 * w * z) * std::sin(0.5 * kSqrt3 * w * w * z);
}

XFixedPoint fixed_point_X(const CoefficientPair<double>& psi,
                          const SpectralPoint& pt, int grid, int max_iter,
                          double tol) {
  if (grid == 0) grid = default_potential_grid(std::abs(pt.z));
  const int M = grid;
  const Complex z = pt.z;
  const Complex w = omega(), w2 = omega2();
  if (std::abs(small_denominator(z)) < 0.1)
    fail(ErrorCode::SmallDenominator,
         "|4 sin(sqrt3 w z/2) sin(sqrt3 w^2 z/2)| < 0.1; the periodic "
         "resolvent is near-singular");
  if (std::abs(z) < 1e-6)
    fail(ErrorCode::SmallDenominator, "z ~ 0 in the X system");

  const auto psic = complexified(psi);
  const VecC p_modes = series_modes(psic.p, M);
  const VecC q_modes = series_modes(psic.q, M);

  // W = (i/sqrt3)(p I_+ - (q/z) I_-), I_+ = (w, -w^2), I_- = (1, -1)
  const Complex i_s3 = Complex(0, 1) / kSqrt3;
  VecC W1(M), W2(M);
  for (int k = 0; k < M; ++k) {
    W1[k] = i_s3 * (p_modes[k] * w - q_modes[k] / z);
    W2[k] = i_s3 * (-p_modes[k] * w2 + q_modes[k] / z);
  }

  // per-mode inverse of d/dx - i sqrt3 z Omega, Omega = diag(w, -w^2)
  VecC inv1(M), inv2(M);
  const Complex a1 = Complex(0, kSqrt3) * z * w;
  const Complex a2 = -Complex(0, kSqrt3) * z * w2;
  for (int k = 0; k < M; ++k) {
    const Complex ik = Complex(0, 2.0 * kPi * signed_freq(k, M));
    inv1[k] = 1.0 / (ik - a1);
    inv2[k] = 1.0 / (ik - a2);
  }

  // physical-space samples of p for the kernel
  VecC p_phys(M);
  for (int j = 0; j < M; ++j) p_phys[j] = psic.p.eval(static_cast<double>(j) / M);

  VecC X1 = idft_samples(inv1.cwiseProduct(W1));
  VecC X2 = idft_samples(inv2.cwiseProduct(W2));

  int iterations = 0;
  bool converged = false;
  for (int it = 1; it <= max_iter && !converged; ++it) {
    // K[X] = (i p/(sqrt3 z))(X1+X2) + 3(X1+X2)(w X1 - w^2 X2)
    //        - i sqrt3 (X1+X2)^2 - (i/(sqrt3 z))(X1+X2)^3
    VecC K(M);
    for (int j = 0; j < M; ++j) {
      const Complex s = X1[j] + X2[j];
      K[j] = i_s3 / z * p_phys[j] * s + 3.0 * s * (w * X1[j] - w2 * X2[j]) -
             Complex(0, kSqrt3) * s * s - i_s3 / z * s * s * s;
    }
    const VecC K_modes = dft_coeffs(K);
    const VecC Y1 = idft_samples(inv1.cwiseProduct(W1 + K_modes));
    const VecC Y2 = idft_samples(inv2.cwiseProduct(W2 - K_modes));
    const double change = std::max((Y1 - X1).cwiseAbs().maxCoeff(),
                                   (Y2 - X2).cwiseAbs().maxCoeff());
    X1 = Y1;
    X2 = Y2;
    iterations = it;
    if (!X1.allFinite() || !X2.allFinite())
      fail(ErrorCode::NonConvergent, "fixed-point iterate overflowed");
    if (change < tol) converged = true;
  }
  if (!converged)
    fail(ErrorCode::NonConvergent,
         "X = G[X] did not contract; psi is outside the small regime");

  XFixedPoint out;
  out.iterations = iterations;
  out.x_grid.setLinSpaced(M + 1, 0.0, 1.0);
  out.X1.resize(M + 1);
  out.X2.resize(M + 1);
  out.X1.head(M) = X1;
  out.X2.head(M) = X2;
  out.X1[M] = X1[0];
  out.X2[M] = X2[0];
  return out;
}

EnergyPotential potential_fixed_point(const CoefficientPair<double>& psi,
                                      Complex E, int max_iter, double tol,
                                      int grid) {
  const SpectralPoint pt = SpectralPoint::from_E(E);
  if (grid == 0) grid = default_potential_grid(std::abs(pt.z));
  const XFixedPoint fx = fixed_point_X(psi, pt, grid, max_iter, tol);

  EnergyPotential ep;
  ep.E = E;
  ep.pt = pt;
  ep.x_grid = fx.x_grid;
  ep.route = Route::FixedPoint;
  ep.iterations = fx.iterations;
  const Complex w = omega(), w2 = omega2();
  const int n = static_cast<int>(fx.X1.size());
  ep.V.resize(n);
  for (int k = 0; k < n; ++k) {
    const double p = psi.p.eval(fx.x_grid[k]);
    const Complex s = fx.X1[k] + fx.X2[k];
    ep.V[k] = -0.5 * p - 1.5 * pt.z * (w2 * fx.X1[k] + w * fx.X2[k]) -
              0.75 * s * s;
  }
  return ep;
}

}  // namespace mck
