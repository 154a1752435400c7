#ifndef MCK_SPECTRAL_POINT_HPP_
#define MCK_SPECTRAL_POINT_HPP_

#include <cmath>

#include "mck/scalar.hpp"

namespace mck {

// One point of the spectral parameter in its three linked charts:
//   z = lambda^{1/3} with arg z in (-pi/3, pi/3],
//   E = (3/4) z^2,  lambda = ((4/3) E)^{3/2} on the matching branch.
struct SpectralPoint {
  Complex lambda;
  Complex z;
  Complex E;

  static SpectralPoint from_lambda(Complex lambda) {
    // principal cube root: arg lambda in (-pi, pi] maps to arg z in (-pi/3, pi/3]
    const double r = std::abs(lambda);
    const double a = std::arg(lambda);
    Complex z = r == 0.0 ? Complex(0.0)
                         : std::polar(std::cbrt(r), a / 3.0);
    SpectralPoint pt;
    pt.lambda = lambda;
    pt.z = z;
    pt.E = 0.75 * z * z;
    return pt;
  }

  // z, wz, w^2 z share one lambda; rotate into the principal sector first so
  // the stored (z, E) sit on the branch every formula assumes.
  static SpectralPoint from_z(Complex z) {
    const double a = std::arg(z);
    if (a > kPi / 3.0)
      z *= Complex(-0.5, -0.5 * kSqrt3);  // w^2
    else if (a <= -kPi / 3.0)
      z *= Complex(-0.5, 0.5 * kSqrt3);  // w
    SpectralPoint pt;
    pt.z = z;
    pt.lambda = z * z * z;
    pt.E = 0.75 * z * z;
    return pt;
  }

  static SpectralPoint from_E(Complex E) {
    // principal square root keeps arg z in (-pi/2, pi/2]; the admissible
    // E-domain has arg E in (-2pi/3, 2pi/3] so arg z lands in (-pi/3, pi/3].
    return from_z(std::sqrt(4.0 / 3.0 * E));
  }
};

}  // namespace mck

#endif  // MCK_SPECTRAL_POINT_HPP_
