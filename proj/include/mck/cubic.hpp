#ifndef MCK_CUBIC_HPP_
#define MCK_CUBIC_HPP_

#include <array>
#include <cmath>

#include "mck/scalar.hpp"

namespace mck {

// Roots of the monic cubic t^3 + a t^2 + b t + c with complex coefficients.
//
// Cardano on the depressed cubic, taking the larger-magnitude cube-root branch
// (avoids cancellation when the two branches differ wildly), then the
// largest root is deflated out and the remaining quadratic is solved with the
// stable q-formula. Every root gets two Newton polish steps; closed-form
// cubics are fragile near triple points and the polish restores ~1e-12
// residuals away from them.
inline std::array<Complex, 3> solve_cubic_monic(Complex a, Complex b, Complex c) {
  const auto poly = [&](Complex t) { return ((t + a) * t + b) * t + c; };
  const auto dpoly = [&](Complex t) { return (3.0 * t + 2.0 * a) * t + b; };
  const auto polish = [&](Complex t) {
    for (int i = 0; i < 2; ++i) {
      const Complex d = dpoly(t);
      if (d == Complex(0)) break;
      t -= poly(t) / d;
    }
    return t;
  };

  // depressed form: t = s - a/3, s^3 + 3Q s - 2R = 0
  const Complex Q = (3.0 * b - a * a) / 9.0;
  const Complex R = (a * (9.0 * b - 2.0 * a * a) - 27.0 * c) / 54.0;
  const Complex disc = std::sqrt(R * R + Q * Q * Q);
  Complex u3 = R + disc;
  if (std::abs(u3) < std::abs(R - disc)) u3 = R - disc;

  std::array<Complex, 3> s;
  if (u3 == Complex(0)) {
    // triple root of the depressed cubic (Q == R == 0 up to roundoff)
    s = {Complex(0), Complex(0), Complex(0)};
  } else {
    const Complex u = std::pow(u3, 1.0 / 3.0);
    const Complex w = omega();
    for (int k = 0; k < 3; ++k) {
      const Complex uk = u * (k == 0 ? Complex(1) : (k == 1 ? w : w * w));
      s[k] = uk - Q / uk;
    }
  }

  std::array<Complex, 3> roots;
  for (int k = 0; k < 3; ++k) roots[k] = s[k] - a / 3.0;

  // largest-magnitude root first, polish, then deflate
  int imax = 0;
  for (int k = 1; k < 3; ++k)
    if (std::abs(roots[k]) > std::abs(roots[imax])) imax = k;
  const Complex r1 = polish(roots[imax]);

  // (t^3 + a t^2 + b t + c) / (t - r1) = t^2 + a2 t + b2
  const Complex a2 = a + r1;
  const Complex b2 = b + r1 * a2;
  Complex d2 = std::sqrt(a2 * a2 - 4.0 * b2);
  if (std::real(std::conj(a2) * d2) > 0.0) d2 = -d2;  // so a2 - d2 has no cancellation
  const Complex big = 0.5 * (a2 - d2);
  Complex r2, r3;
  if (big == Complex(0)) {
    r2 = r3 = Complex(0);
  } else {
    r2 = -big;
    r3 = -b2 / big;
  }
  return {r1, polish(r2), polish(r3)};
}

// Discriminant of the monic cubic t^3 + a t^2 + b t + c,
// prod_{i<j} (r_i - r_j)^2, from symmetric functions only.
inline Complex cubic_discriminant_monic(Complex a, Complex b, Complex c) {
  return 18.0 * a * b * c - 4.0 * a * a * a * c + a * a * b * b -
         4.0 * b * b * b - 27.0 * c * c;
}

}  // namespace mck

#endif  // MCK_CUBIC_HPP_
