#ifndef MCK_THREE_POINT_HPP_
#define MCK_THREE_POINT_HPP_

#include <vector>

#include "mck/monodromy.hpp"
#include "mck/zeros.hpp"

namespace mck {

enum class Which { Direct, Transpose };

// Eigenvalue mu of the 3-point Dirichlet problem y(0)=y(1)=y(2)=0 on [0,2]
// for the third-order operator (Direct) or its transpose (Transpose), with
// the eigenfunction sampled on the propagation grid and its Floquet
// multiplier A (y(x+1) = A y(x)).
struct ThreePointEig {
  int n = 0;
  Complex mu;
  Which which = Which::Direct;
  Vec x_grid;
  VecC y, y1, y2;  // y, y', y^[2], normalized so y'(0) = 1
  Complex floquet_A;
};

struct ThreePointOptions {
  int contour_samples = 512;
  int steps = 0;               // total steps on [0,2]; 0 = max(2048, rule)
  double smallness = 0.25;
};

// det [[phi_2(1), phi_3(1)], [phi_2(2), phi_3(2)]] from one propagation to
// x = 2; zeros are the 3-point spectrum.
Complex three_point_determinant(const CoefficientPair<double>& psi,
                                const SpectralPoint& pt, Which which,
                                int steps = 0);

// Unperturbed closed form, entire in lambda (value 1 at lambda = 0).
Complex three_point_determinant_free(Complex lambda);

// The single eigenvalue in disk D_n plus its eigenfunction data.
ThreePointEig find_three_point_eig(const CoefficientPair<double>& psi, int n,
                                   Which which,
                                   const ThreePointOptions& opts = {});

// All 1 <= |n| <= n_max, WrongCount when a disk does not hold exactly one.
std::vector<ThreePointEig> find_three_point_eigs(
    const CoefficientPair<double>& psi, int n_max, Which which,
    const ThreePointOptions& opts = {});

// Norming constant h_sn = 8 (pi n)^2 log |y~'(1) tau_3^{-1/2}(mu~_n)| for the
// transpose eigenfunction normalized to y~'(0) = 1; tau_3^{1/2}(mu~_n) > 0.
// BranchError when tau_3(mu~_n) is not positive real within 1e-8.
double norming_constant_h(const CoefficientPair<double>& psi, int n,
                          const ThreePointOptions& opts = {});
double norming_constant_h(const CoefficientPair<double>& psi,
                          const ThreePointEig& transpose_eig);

}  // namespace mck

#endif  // MCK_THREE_POINT_HPP_
