#ifndef MCK_ODE_HPP_
#define MCK_ODE_HPP_

#include <functional>
#include <vector>

#include "mck/scalar.hpp"
#include "mck/spectral_point.hpp"
#include "mck/trig_series.hpp"

namespace mck {

// Fundamental-matrix trajectory of the third-order equation in quasi-derivative
// coordinates (y, y', y^[2]), y^[2] = y'' + p y. Phi[k] is the fundamental
// matrix at x_grid[k]; columns are the quasi-derivative triples of the
// fundamental solutions, Phi[0] = identity.
struct Trajectory3 {
  Vec x_grid;
  std::vector<Mat3C> Phi;
  // det Phi accumulated along the flow as the product of per-step map
  // determinants. The direct determinant of Phi(x) loses all digits once
  // column norms reach ~(1e-9/eps)^{1/3}; the flow product is the
  // well-conditioned reading of volume conservation.
  VecC det_flow;

  const Mat3C& at_end() const { return Phi.back(); }
  // Phi at x = x_end/2 (grids always have an even step count).
  const Mat3C& at_mid() const { return Phi[(Phi.size() - 1) / 2]; }
};

// Trajectory of the Hill equation -f'' + V f = E f; columns of Psi are
// (theta, theta') and (phi, phi') with Psi[0] = identity.
struct Trajectory2 {
  Vec x_grid;
  std::vector<Mat2C> Psi;
  VecC wronskian_flow;  // det Psi along the flow, as in Trajectory3

  const Mat2C& at_end() const { return Psi.back(); }
};

// steps = max(1024, 64*ceil|z|): keeps >= 40 RK4 steps per phase radian, so
// the fixed-step scheme stays in its asymptotic regime on |z| <= 40.
int default_steps(double abs_z);

// Propagate Y' = A(x) Y, A = [[0,1,0],[-p,0,1],[lambda-q,-p,0]], by classical
// fixed-step RK4 on [0, x_end], storing every step. Throws NonFinite on
// overflow (|z| too large for the step count).
Trajectory3 propagate_third_order(const CoefficientPair<Complex>& psi,
                                  const SpectralPoint& pt, double x_end,
                                  int steps = 0);

// Same for the transpose equation -(y''+py)' - p y' + q y = lambda y, i.e.
// (y^[2])' = -p y' - (lambda - q) y.
Trajectory3 propagate_transpose(const CoefficientPair<Complex>& psi,
                                const SpectralPoint& pt, double x_end,
                                int steps = 0);

inline Trajectory3 propagate_third_order(const CoefficientPair<double>& psi,
                                         const SpectralPoint& pt, double x_end,
                                         int steps = 0) {
  return propagate_third_order(complexified(psi), pt, x_end, steps);
}
inline Trajectory3 propagate_transpose(const CoefficientPair<double>& psi,
                                       const SpectralPoint& pt, double x_end,
                                       int steps = 0) {
  return propagate_transpose(complexified(psi), pt, x_end, steps);
}

using PotentialFn = std::function<Complex(double)>;

// RK4 on (f, f')' = (f', (V - E) f). The provider must be defined on
// [0, x_end], including half-step points.
Trajectory2 propagate_schrodinger(const PotentialFn& V, Complex E, double x_end,
                                  int steps);

// Sampled-potential variant: v holds V on the closed uniform grid of
// 2*steps+1 points over [0, x_end], so all RK4 stage nodes hit samples.
Trajectory2 propagate_schrodinger(const VecC& v, Complex E, double x_end,
                                  int steps);

}  // namespace mck

#endif  // MCK_ODE_HPP_
