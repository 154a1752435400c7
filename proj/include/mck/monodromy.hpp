#ifndef MCK_MONODROMY_HPP_
#define MCK_MONODROMY_HPP_

#include <array>
#include <utility>

#include "mck/ode.hpp"
#include "mck/scalar.hpp"
#include "mck/spectral_point.hpp"
#include "mck/trig_series.hpp"

namespace mck {

// Monodromy matrix M = Phi(1) (columns = quasi-derivative triples of the
// fundamental solutions at x = 1), its multiplier triple, and the
// discriminant rho = (t1-t2)^2 (t1-t3)^2 (t2-t3)^2 of the characteristic
// cubic det(M - tau I).
struct MonodromyData {
  SpectralPoint pt;
  Mat3C M;
  std::array<Complex, 3> multipliers;
  Complex rho;
};

MonodromyData monodromy_matrix(const CoefficientPair<Complex>& psi,
                               const SpectralPoint& pt, int steps = 0);
MonodromyData transpose_monodromy(const CoefficientPair<Complex>& psi,
                                  const SpectralPoint& pt, int steps = 0);

// Multipliers and rho of an already-propagated monodromy matrix.
std::array<Complex, 3> multipliers_of(const Mat3C& M);
Complex discriminant_of(const Mat3C& M);

Complex discriminant_rho(const CoefficientPair<Complex>& psi,
                         const SpectralPoint& pt, int steps = 0);

// The J of the transpose symmetry M~^T J M = J.
Mat3C symmetry_J();

// Unperturbed closed forms (oracle-grade; entire in lambda = z^3).
Complex rho_free(Complex z);

// The branch tau_3 tracking e^z: the multiplier minimizing |Log tau - z|.
// Throws AmbiguousBranch when two multipliers tie within 1e-9 (caller sits
// at/near a ramification). Returns the multiplier and its index.
std::pair<Complex, int> select_tau3(const MonodromyData& data);

// Floquet solution samples on [0,1]: eta(0) = 1, eta(x+1) = tau eta(x).
struct FloquetData {
  SpectralPoint pt;
  Complex tau;
  Vec x_grid;
  VecC eta, eta1, eta2;  // eta, eta', eta^[2]
  double min_abs_eta = 0.0;
};

// Initial vector = right eigenvector of M for the (simple) eigenvalue tau,
// scaled to first component 1, then propagated. Throws NotSimple if tau is
// not a clean simple eigenvalue, VanishingEta if min |eta| < 1e-6 on the
// grid (the transformation downstream needs eta != 0).
FloquetData floquet_solution(const CoefficientPair<Complex>& psi,
                             const SpectralPoint& pt, Complex tau,
                             int steps = 0);

inline MonodromyData monodromy_matrix(const CoefficientPair<double>& psi,
                                      const SpectralPoint& pt, int steps = 0) {
  return monodromy_matrix(complexified(psi), pt, steps);
}
inline MonodromyData transpose_monodromy(const CoefficientPair<double>& psi,
                                         const SpectralPoint& pt, int steps = 0) {
  return transpose_monodromy(complexified(psi), pt, steps);
}
inline Complex discriminant_rho(const CoefficientPair<double>& psi,
                                const SpectralPoint& pt, int steps = 0) {
  return discriminant_rho(complexified(psi), pt, steps);
}
inline FloquetData floquet_solution(const CoefficientPair<double>& psi,
                                    const SpectralPoint& pt, Complex tau,
                                    int steps = 0) {
  return floquet_solution(complexified(psi), pt, tau, steps);
}

}  // namespace mck

#endif  // MCK_MONODROMY_HPP_
