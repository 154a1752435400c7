#include "mck/ode.hpp"

#include <cmath>

#include "mck/errors.hpp"

namespace mck {

int default_steps(double abs_z) {
  const double per_z = 64.0 * std::ceil(abs_z);
  return static_cast<int>(std::max(1024.0, per_z));
}

namespace {

// One classical RK4 sweep of Y' = A(x) Y. The step is assembled as the
// one-step transfer matrix R_k (the RK4 stages applied to the identity), so
// the per-step determinant is available in well-conditioned form.
template <typename SystemFn>
Trajectory3 rk4_matrix3(SystemFn&& system, double x_end, int steps) {
  Trajectory3 tr;
  tr.x_grid.resize(steps + 1);
  tr.Phi.resize(steps + 1);
  tr.det_flow.resize(steps + 1);
  tr.Phi[0] = Mat3C::Identity();
  tr.det_flow[0] = 1.0;
  tr.x_grid[0] = 0.0;

  const double h = x_end / steps;
  for (int k = 0; k < steps; ++k) {
    const double x = k * h;
    const Mat3C A1 = system(x);
    const Mat3C A2 = system(x + 0.5 * h);
    const Mat3C A4 = system(x + h);
    const Mat3C K1 = A1;
    const Mat3C K2 = A2 * (Mat3C::Identity() + (0.5 * h) * K1);
    const Mat3C K3 = A2 * (Mat3C::Identity() + (0.5 * h) * K2);
    const Mat3C K4 = A4 * (Mat3C::Identity() + h * K3);
    const Mat3C R =
        Mat3C::Identity() + (h / 6.0) * (K1 + 2.0 * K2 + 2.0 * K3 + K4);
    tr.Phi[k + 1] = R * tr.Phi[k];
    tr.det_flow[k + 1] = tr.det_flow[k] * R.determinant();
    if (!tr.Phi[k + 1].allFinite())
      fail(ErrorCode::NonFinite,
           "third-order propagation overflowed; increase steps or reduce |z|");
    tr.x_grid[k + 1] = (k + 1) * h;
  }
  return tr;
}

// steps is the total count over [0, x_end]; 0 selects the default rule
// scaled by interval length.
int resolve_steps(const SpectralPoint& pt, double x_end, int steps) {
  if (steps == 0)
    return static_cast<int>(std::ceil(default_steps(std::abs(pt.z)) * x_end));
  if (steps < 64) throw std::invalid_argument("propagation needs steps >= 64");
  return steps;
}

}  // namespace

Trajectory3 propagate_third_order(const CoefficientPair<Complex>& psi,
                                  const SpectralPoint& pt, double x_end,
                                  int steps) {
  const int n = resolve_steps(pt, x_end, steps);
  const Complex lambda = pt.lambda;
  auto system = [&](double x) {
    const Complex p = psi.p.eval(x);
    const Complex q = psi.q.eval(x);
    Mat3C A;
    A << 0, 1, 0,
        -p, 0, 1,
        lambda - q, -p, 0;
    return A;
  };
  return rk4_matrix3(system, x_end, n);
}

Trajectory3 propagate_transpose(const CoefficientPair<Complex>& psi,
                                const SpectralPoint& pt, double x_end,
                                int steps) {
  const int n = resolve_steps(pt, x_end, steps);
  const Complex lambda = pt.lambda;
  auto system = [&](double x) {
    const Complex p = psi.p.eval(x);
    const Complex q = psi.q.eval(x);
    Mat3C A;
    A << 0, 1, 0,
        -p, 0, 1,
        -(lambda - q), -p, 0;
    return A;
  };
  return rk4_matrix3(system, x_end, n);
}

namespace {

Trajectory2 rk4_hill(const std::function<Complex(int)>& v_at_half_index,
                     Complex E, double x_end, int steps) {
  Trajectory2 tr;
  tr.x_grid.resize(steps + 1);
  tr.Psi.resize(steps + 1);
  tr.wronskian_flow.resize(steps + 1);
  tr.Psi[0] = Mat2C::Identity();
  tr.wronskian_flow[0] = 1.0;
  tr.x_grid[0] = 0.0;

  const double h = x_end / steps;
  auto system = [&](int half_idx) {
    Mat2C A;
    A << 0, 1, v_at_half_index(half_idx) - E, 0;
    return A;
  };
  for (int k = 0; k < steps; ++k) {
    const Mat2C A1 = system(2 * k);
    const Mat2C A2 = system(2 * k + 1);
    const Mat2C A4 = system(2 * k + 2);
    const Mat2C K1 = A1;
    const Mat2C K2 = A2 * (Mat2C::Identity() + (0.5 * h) * K1);
    const Mat2C K3 = A2 * (Mat2C::Identity() + (0.5 * h) * K2);
    const Mat2C K4 = A4 * (Mat2C::Identity() + h * K3);
    const Mat2C R =
        Mat2C::Identity() + (h / 6.0) * (K1 + 2.0 * K2 + 2.0 * K3 + K4);
    tr.Psi[k + 1] = R * tr.Psi[k];
    tr.wronskian_flow[k + 1] = tr.wronskian_flow[k] * R.determinant();
    if (!tr.Psi[k + 1].allFinite())
      fail(ErrorCode::NonFinite, "Hill propagation overflowed");
    tr.x_grid[k + 1] = (k + 1) * h;
  }
  return tr;
}

}  // namespace

Trajectory2 propagate_schrodinger(const PotentialFn& V, Complex E, double x_end,
                                  int steps) {
  if (steps < 64) throw std::invalid_argument("propagation needs steps >= 64");
  const double half = x_end / (2.0 * steps);
  return rk4_hill([&](int j) { return V(j * half); }, E, x_end, steps);
}

Trajectory2 propagate_schrodinger(const VecC& v, Complex E, double x_end,
                                  int steps) {
  if (v.size() != 2 * steps + 1)
    throw std::invalid_argument("sampled potential must have 2*steps+1 points");
  return rk4_hill([&](int j) { return v[j]; }, E, x_end, steps);
}

}  // namespace mck
