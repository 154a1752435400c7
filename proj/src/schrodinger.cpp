#include "mck/schrodinger.hpp"

#include <cmath>

#include "mck/errors.hpp"
#include "mck/zeros.hpp"

namespace mck {

namespace {

EnergyPotential build_potential(const CoefficientPair<double>& psi, Complex E,
                                const HillOptions& opts) {
  return opts.route == Route::Direct
             ? potential_direct(psi, E, opts.grid)
             : potential_fixed_point(psi, E, 50, 1e-12, opts.grid);
}

HillPointData hill_from_potential(const EnergyPotential& ep) {
  const int steps = static_cast<int>(ep.V.size() - 1) / 2;
  const Trajectory2 tr = propagate_schrodinger(ep.V, ep.E, 1.0, steps);
  const Mat2C& P = tr.at_end();
  HillPointData h;
  h.E = ep.E;
  h.theta1 = P(0, 0);
  h.theta1p = P(1, 0);
  h.phi1 = P(0, 1);
  h.phi1p = P(1, 1);
  h.Delta = 0.5 * (h.theta1 + h.phi1p);
  return h;
}

// image-domain interval S_n on the real axis: ((pi n - sqrt3/2)^2, (+)^2)
void domain_interval(int n, double& lo, double& hi) {
  const double c = kPi * n;
  lo = (c - 0.5 * kSqrt3) * (c - 0.5 * kSqrt3);
  hi = (c + 0.5 * kSqrt3) * (c + 0.5 * kSqrt3);
}

ContourFn domain_contour(int n) {
  return [n](double theta) {
    const Complex s = kPi * n + 0.5 * kSqrt3 * std::polar(1.0, theta);
    return s * s;
  };
}

double bisect(const std::function<double(double)>& f, double a, double b,
              double fa) {
  double fb = f(b);
  (void)fb;
  for (int it = 0; it < 64 && (b - a) > 1e-14 * (1.0 + std::abs(a)); ++it) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if ((fm < 0) == (fa < 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

HillPointData hill_point(const CoefficientPair<double>& psi, Complex E,
                         const HillOptions& opts) {
  return hill_from_potential(build_potential(psi, E, opts));
}

double find_dirichlet_eig(const CoefficientPair<double>& psi, int n,
                          const HillOptions& opts) {
  if (n < 1) throw std::invalid_argument("Dirichlet search needs n >= 1");
  double lo, hi;
  domain_interval(n, lo, hi);
  const auto phi1 = [&](double E) {
    return hill_point(psi, Complex(E, 0), opts).phi1.real();
  };

  for (int K : {33, 129, 1025}) {
    std::vector<double> xs(K), fs(K);
    for (int k = 0; k < K; ++k) {
      xs[k] = lo + (hi - lo) * k / (K - 1);
      fs[k] = phi1(xs[k]);
    }
    std::vector<int> crossings;
    for (int k = 0; k + 1 < K; ++k)
      if ((fs[k] < 0) != (fs[k + 1] < 0)) crossings.push_back(k);
    if (crossings.size() == 1) {
      const int k = crossings[0];
      return bisect(phi1, xs[k], xs[k + 1], fs[k]);
    }
    if (crossings.size() > 1) break;  // spurious structure; diagnose below
  }

  const int count = count_zeros_inside(
      [&](Complex E) { return hill_point(psi, E, opts).phi1; },
      domain_contour(n), 256);
  fail(ErrorCode::WrongCount,
       "domain S_" + std::to_string(n) + " holds " + std::to_string(count) +
           " Dirichlet eigenvalues, expected 1");
}

std::map<int, double> find_dirichlet_eigs(const CoefficientPair<double>& psi,
                                          int n_max, const HillOptions& opts) {
  if (norm_h1(psi) > opts.smallness)
    fail(ErrorCode::WrongCount,
         "norm_h1(psi) exceeds the smallness threshold; domain localization "
         "is not guaranteed");
  std::map<int, double> out;
  for (int n = 1; n <= n_max; ++n) out[n] = find_dirichlet_eig(psi, n, opts);
  return out;
}

BandEdges find_periodic_pair(const CoefficientPair<double>& psi, int n,
                             const HillOptions& opts) {
  if (n < 1) throw std::invalid_argument("band search needs n >= 1");
  double lo, hi;
  domain_interval(n, lo, hi);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const auto F = [&](double E) {
    return sign * hill_point(psi, Complex(E, 0), opts).Delta.real() - 1.0;
  };

  // the Dirichlet eigenvalue always sits inside [E_n^-, E_n^+], where F >= 0
  const double gamma = find_dirichlet_eig(psi, n, opts);

  // bracket the maximum of F around gamma, then golden-section
  double h = 1e-6 * (1.0 + std::abs(gamma));
  double b = gamma, fb = F(b);
  double a = std::max(lo, b - h), c = std::min(hi, b + h);
  double fa = F(a), fc = F(c);
  while (fa > fb || fc > fb) {
    if (fa > fb) {
      c = b;
      fc = fb;
      b = a;
      fb = fa;
      a = std::max(lo, b - h);
      fa = F(a);
    } else {
      a = b;
      fa = fb;
      b = c;
      fb = fc;
      c = std::min(hi, b + h);
      fc = F(c);
    }
    h *= 2.0;
    if (a <= lo && c >= hi) break;
  }
  const double gr = 0.61803398874989485;
  while (c - a > 1e-10 * (1.0 + std::abs(b))) {
    const double x = (b - a > c - b) ? b - gr * (b - a) : b + gr * (c - b);
    const double fx = F(x);
    if (fx > fb) {
      if (x < b) {
        c = b;
      } else {
        a = b;
      }
      b = x;
      fb = fx;
    } else {
      if (x < b) {
        a = x;
      } else {
        c = x;
      }
    }
  }
  const double E_max = b, F_max = fb;

  BandEdges edges;
  if (F_max <= 1e-10) {
    // gap closed to working precision: a double eigenvalue at the touch point
    edges.lower = edges.upper = E_max;
    edges.kind = PairKind::Double;
    return edges;
  }

  // walk out from the maximum until F < 0, then bisect each crossing
  const auto walk = [&](double dir) {
    double step = 1e-3 * (1.0 + std::abs(E_max));
    double x = E_max;
    for (int it = 0; it < 60; ++it) {
      double x2 = x + dir * step;
      if (x2 < lo || x2 > hi) x2 = dir < 0 ? lo : hi;
      const double f2 = F(x2);
      if (f2 < 0) return dir < 0 ? bisect(F, x2, x, f2) : bisect(F, x, x2, F(x));
      x = x2;
      step *= 2.0;
      if ((x <= lo && dir < 0) || (x >= hi && dir > 0)) break;
    }
    fail(ErrorCode::WrongCount,
         "band edge walk left the domain S_" + std::to_string(n));
  };
  edges.lower = walk(-1.0);
  edges.upper = walk(+1.0);
  edges.kind = PairKind::SimplePair;
  if (edges.upper < edges.lower) std::swap(edges.lower, edges.upper);
  return edges;
}

std::map<int, BandEdges> find_periodic_eigs(const CoefficientPair<double>& psi,
                                            int n_max,
                                            const HillOptions& opts) {
  if (norm_h1(psi) > opts.smallness)
    fail(ErrorCode::WrongCount,
         "norm_h1(psi) exceeds the smallness threshold; domain localization "
         "is not guaranteed");
  std::map<int, BandEdges> out;
  for (int n = 1; n <= n_max; ++n) out[n] = find_periodic_pair(psi, n, opts);
  return out;
}

double norming_constant_g(const CoefficientPair<double>& psi, int n,
                          double gamma_n, const HillOptions& opts) {
  if (n < 1) throw std::invalid_argument("norming constants need n >= 1");
  const HillPointData h = hill_point(psi, Complex(gamma_n, 0), opts);
  return 2.0 * kPi * n * std::log(std::abs(h.phi1p));
}

double norming_constant_g(const CoefficientPair<double>& psi, int n,
                          const HillOptions& opts) {
  return norming_constant_g(psi, n, find_dirichlet_eig(psi, n, opts), opts);
}

}  // namespace mck
