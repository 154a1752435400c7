#ifndef MCK_SCHRODINGER_HPP_
#define MCK_SCHRODINGER_HPP_

#include <map>

#include "mck/mckean.hpp"
#include "mck/ode.hpp"
#include "mck/ramifications.hpp"

namespace mck {

// Values of the Hill fundamental solutions at x = 1 for -f'' + V(x,E) f = E f
// with the McKean potential, plus the Lyapunov function
// Delta = (theta(1) + phi'(1))/2.
struct HillPointData {
  Complex E;
  Complex theta1, theta1p, phi1, phi1p;
  Complex Delta;
};

struct HillOptions {
  Route route = Route::Direct;
  int grid = 0;  // potential grid (even interval count); 0 = default
  double smallness = 0.25;
};

// Build V(.,E) (rebuilt per E; eta depends on lambda(E)) and propagate
// theta, phi across one period.
HillPointData hill_point(const CoefficientPair<double>& psi, Complex E,
                         const HillOptions& opts = {});

// Periodic / antiperiodic eigenvalues E_n^- <= E_n^+ (zeros of Delta^2 - 1)
// in each image domain S_n = {|sqrt E - pi n| < sqrt3/2}, n = 1..n_max, and
// the Dirichlet eigenvalues gamma_n (zeros of phi(1, .)).
struct BandEdges {
  double lower = 0.0, upper = 0.0;
  PairKind kind = PairKind::SimplePair;
};

struct HillSpectrum {
  std::map<int, BandEdges> periodic_eigs;
  std::map<int, double> dirichlet_eigs;
  std::map<int, double> norming;
};

double find_dirichlet_eig(const CoefficientPair<double>& psi, int n,
                          const HillOptions& opts = {});
std::map<int, double> find_dirichlet_eigs(const CoefficientPair<double>& psi,
                                          int n_max,
                                          const HillOptions& opts = {});

BandEdges find_periodic_pair(const CoefficientPair<double>& psi, int n,
                             const HillOptions& opts = {});
std::map<int, BandEdges> find_periodic_eigs(const CoefficientPair<double>& psi,
                                            int n_max,
                                            const HillOptions& opts = {});

// g^_sn = 2 pi n log |phi'(1, gamma_n)|, log 1 = 0.
double norming_constant_g(const CoefficientPair<double>& psi, int n,
                          const HillOptions& opts = {});
double norming_constant_g(const CoefficientPair<double>& psi, int n,
                          double gamma_n, const HillOptions& opts = {});

}  // namespace mck

#endif  // MCK_SCHRODINGER_HPP_
