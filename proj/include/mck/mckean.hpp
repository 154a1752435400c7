#ifndef MCK_MCKEAN_HPP_
#define MCK_MCKEAN_HPP_

#include "mck/monodromy.hpp"
#include "mck/scalar.hpp"
#include "mck/spectral_point.hpp"
#include "mck/trig_series.hpp"

namespace mck {

// xi = eta'/eta - z for a non-vanishing Floquet solution eta, with
// xi1 = xi' + p obtained from the algebraic identity
// xi' + p = eta^[2]/eta - (eta'/eta)^2 (never by differencing).
struct XiData {
  SpectralPoint pt;
  Vec x_grid;
  VecC xi, xi1;
};

XiData xi_from_floquet(const FloquetData& fd);

// Sup-norm of the left side of the xi-equation
// (xi'+p)' + 3z(xi'+p) + 3z^2 xi + 3 xi (xi'+p) + 3z xi^2 + xi^3
//   - p xi - z p + q = 0,
// with (xi'+p)' by spectral differentiation of the periodic samples.
double xi_residual(const CoefficientPair<Complex>& psi, const SpectralPoint& pt,
                   const XiData& xd);
inline double xi_residual(const CoefficientPair<double>& psi,
                          const SpectralPoint& pt, const XiData& xd) {
  return xi_residual(complexified(psi), pt, xd);
}

enum class Route { Direct, FixedPoint };

// The energy-dependent 1-periodic potential V(x, E) of the transformed Hill
// equation, sampled on the closed uniform grid over [0,1]. grid is the
// interval count (even); the Hill propagator consumes V with grid/2 steps.
struct EnergyPotential {
  Complex E;
  SpectralPoint pt;
  Vec x_grid;
  VecC V;
  Route route = Route::Direct;
  int iterations = 0;          // fixed-point route only
  double route_discrepancy = 0.0;  // max gap between the two direct formulas
};

int default_potential_grid(double abs_z);

// V = E - p/2 - (3/2) eta^[2]/eta + (3/4)(eta'/eta)^2, cross-evaluated
// against V = E - 2p - (3/2) xi' - (3/4)(xi + z)^2 (max discrepancy is
// recorded). Preconditions: lambda(E) in the tau_3 domain (or real > 1).
EnergyPotential potential_direct(const CoefficientPair<double>& psi, Complex E,
                                 int grid = 0);

// The small denominator 4 sin(sqrt3 w z/2) sin(sqrt3 w^2 z/2) of the
// periodic resolvent (distinct from the characteristic polynomial).
Complex small_denominator(Complex z);

// Periodic solution of X' = i sqrt3 z Omega X + W + K[X] I_- by fixed-point
// iteration X^{n} = G[X^{n-1}] from the explicit X^0; the linear solves are
// exact per Fourier mode on the grid.
struct XFixedPoint {
  Vec x_grid;    // closed grid on [0,1]
  VecC X1, X2;   // closed samples (periodic wrap appended)
  int iterations = 0;
};

XFixedPoint fixed_point_X(const CoefficientPair<double>& psi,
                          const SpectralPoint& pt, int grid = 0,
                          int max_iter = 50, double tol = 1e-12);

// V = -p/2 - (3z/2)(w^2 X1 + w X2) - (3/4)(X1+X2)^2 from the fixed point.
// SmallDenominator when |D| < 0.1, NonConvergent when the iteration fails
// (psi outside the contraction regime).
EnergyPotential potential_fixed_point(const CoefficientPair<double>& psi,
                                      Complex E, int max_iter = 50,
                                      double tol = 1e-12, int grid = 0);

}  // namespace mck

#endif  // MCK_MCKEAN_HPP_
