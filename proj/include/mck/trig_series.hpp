#ifndef MCK_TRIG_SERIES_HPP_
#define MCK_TRIG_SERIES_HPP_

#include <cmath>
#include <stdexcept>

#include "mck/scalar.hpp"

namespace mck {

// Finite trigonometric series on the unit circle,
//   f(x) = constant + sum_{n>=1} cos_n cos(2 pi n x) + sin_n sin(2 pi n x).
// Derivatives are exact, so downstream consumers never difference coefficients.
template <typename Scalar>
struct TrigSeries {
  Scalar constant{};
  VecX<Scalar> cos_coeffs;  // index 0 <-> frequency 2*pi
  VecX<Scalar> sin_coeffs;

  TrigSeries() = default;
  TrigSeries(Scalar c, VecX<Scalar> cs, VecX<Scalar> sn)
      : constant(c), cos_coeffs(std::move(cs)), sin_coeffs(std::move(sn)) {}

  static TrigSeries zero() { return TrigSeries(); }

  int modes() const {
    return static_cast<int>(std::max(cos_coeffs.size(), sin_coeffs.size()));
  }

  bool is_zero() const {
    return constant == Scalar(0) && cos_coeffs.isZero(0) && sin_coeffs.isZero(0);
  }

  Scalar cos_coeff(int n) const {
    return n >= 1 && n <= cos_coeffs.size() ? cos_coeffs[n - 1] : Scalar(0);
  }
  Scalar sin_coeff(int n) const {
    return n >= 1 && n <= sin_coeffs.size() ? sin_coeffs[n - 1] : Scalar(0);
  }

  Scalar eval(double x) const {
    Scalar v = constant;
    const int m = modes();
    for (int n = 1; n <= m; ++n) {
      const double a = 2.0 * kPi * n * x;
      v += cos_coeff(n) * std::cos(a) + sin_coeff(n) * std::sin(a);
    }
    return v;
  }

  TrigSeries derivative() const {
    const int m = modes();
    TrigSeries d;
    d.cos_coeffs.setZero(m);
    d.sin_coeffs.setZero(m);
    for (int n = 1; n <= m; ++n) {
      const double w = 2.0 * kPi * n;
      d.cos_coeffs[n - 1] = w * sin_coeff(n);
      d.sin_coeffs[n - 1] = -w * cos_coeff(n);
    }
    return d;
  }

  // Coefficients of x -> f(x + t), by angle addition.
  TrigSeries translated(double t) const {
    const int m = modes();
    TrigSeries r;
    r.constant = constant;
    r.cos_coeffs.setZero(m);
    r.sin_coeffs.setZero(m);
    for (int n = 1; n <= m; ++n) {
      const double c = std::cos(2.0 * kPi * n * t);
      const double s = std::sin(2.0 * kPi * n * t);
      r.cos_coeffs[n - 1] = cos_coeff(n) * c + sin_coeff(n) * s;
      r.sin_coeffs[n - 1] = -cos_coeff(n) * s + sin_coeff(n) * c;
    }
    return r;
  }

  // Coefficients of x -> f(1 - x) = f(-x): cos terms fixed, sin terms negated.
  TrigSeries reflected() const {
    TrigSeries r = *this;
    r.sin_coeffs = -sin_coeffs;
    return r;
  }

  TrigSeries negated() const {
    TrigSeries r;
    r.constant = -constant;
    r.cos_coeffs = -cos_coeffs;
    r.sin_coeffs = -sin_coeffs;
    return r;
  }

  // Parseval: ||f||^2 on L^2(T).
  double l2_norm_sq() const {
    double v = std::norm(Complex(constant));
    const int m = modes();
    for (int n = 1; n <= m; ++n)
      v += 0.5 * (std::norm(Complex(cos_coeff(n))) + std::norm(Complex(sin_coeff(n))));
    return v;
  }
};

template <typename Scalar>
TrigSeries<Scalar> operator*(Scalar a, const TrigSeries<Scalar>& f) {
  TrigSeries<Scalar> r = f;
  r.constant *= a;
  r.cos_coeffs *= a;
  r.sin_coeffs *= a;
  return r;
}

inline TrigSeries<Complex> complexified(const TrigSeries<double>& f) {
  TrigSeries<Complex> r;
  r.constant = f.constant;
  r.cos_coeffs = f.cos_coeffs.cast<Complex>();
  r.sin_coeffs = f.sin_coeffs.cast<Complex>();
  return r;
}

// The coefficient pair psi = (p, q) with the transforms used by the spectral
// symmetries: star(psi) = (p, -q) and reflect(psi)(x) = psi(1 - x).
template <typename Scalar>
struct CoefficientPair {
  TrigSeries<Scalar> p;
  TrigSeries<Scalar> q;

  CoefficientPair() = default;
  CoefficientPair(TrigSeries<Scalar> p_, TrigSeries<Scalar> q_)
      : p(std::move(p_)), q(std::move(q_)) {}

  static CoefficientPair zero() { return CoefficientPair(); }

  bool is_zero() const { return p.is_zero() && q.is_zero(); }

  CoefficientPair star() const { return {p, q.negated()}; }
  CoefficientPair reflect() const { return {p.reflected(), q.reflected()}; }
  CoefficientPair star_reflect() const { return {p.reflected(), q.reflected().negated()}; }
  CoefficientPair translated(double t) const { return {p.translated(t), q.translated(t)}; }
};

inline CoefficientPair<Complex> complexified(const CoefficientPair<double>& pair) {
  return {complexified(pair.p), complexified(pair.q)};
}

enum class SymmetryKind { Star, Reflect, StarReflect, Translate };

template <typename Scalar>
CoefficientPair<Scalar> symmetry_transform(const CoefficientPair<Scalar>& psi,
                                           SymmetryKind kind, double t = 0.0) {
  switch (kind) {
    case SymmetryKind::Star: return psi.star();
    case SymmetryKind::Reflect: return psi.reflect();
    case SymmetryKind::StarReflect: return psi.star_reflect();
    case SymmetryKind::Translate: return psi.translated(t);
  }
  throw std::invalid_argument("unknown symmetry kind");
}

// sqrt(||p||^2 + ||p'||^2 + ||q||^2), the smallness gauge for the
// perturbative pipelines. Exact by Parseval.
inline double norm_h1(const CoefficientPair<double>& psi) {
  return std::sqrt(psi.p.l2_norm_sq() + psi.p.derivative().l2_norm_sq() +
                   psi.q.l2_norm_sq());
}

}  // namespace mck

#endif  // MCK_TRIG_SERIES_HPP_
