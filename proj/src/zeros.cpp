#include "mck/zeros.hpp"

#include <cmath>
#include <limits>

#include "mck/errors.hpp"
#include "mck/spectral_point.hpp"

namespace mck {

bool DiskSpec::contains(Complex lambda) const {
  if (n == 0) return std::abs(lambda) < 1.0;
  if (n < 0) lambda = -lambda;
  const Complex z = SpectralPoint::from_lambda(lambda).z;
  return std::abs(z - z_center()) < 1.0;
}

Complex DiskSpec::boundary(double theta) const {
  if (n == 0) return std::polar(1.0, theta);
  const Complex z = z_center() + std::polar(1.0, theta);
  const Complex lambda = z * z * z;
  // the z chart is conformal and orientation-preserving; -D_n is a rotation
  return n > 0 ? lambda : -lambda;
}

namespace {

struct ContourData {
  std::vector<double> theta;
  std::vector<Complex> f;
  double max_abs = 0.0;
  double min_abs = std::numeric_limits<double>::infinity();
};

// Sample f on the contour, subdividing until successive phase jumps stay
// below pi/2.
ContourData sample_contour(const ComplexFn& f, const ContourFn& contour,
                           int samples) {
  constexpr int kMaxPoints = 1 << 14;
  ContourData d;
  d.theta.reserve(samples + 1);
  for (int k = 0; k <= samples; ++k)
    d.theta.push_back(2.0 * kPi * k / samples);
  d.f.resize(d.theta.size());
  for (size_t k = 0; k < d.theta.size(); ++k)
    d.f[k] = f(contour(d.theta[k]));

  for (int pass = 0;; ++pass) {
    bool split = false;
    std::vector<double> th2;
    std::vector<Complex> f2;
    th2.reserve(2 * d.theta.size());
    f2.reserve(2 * d.theta.size());
    for (size_t k = 0; k + 1 < d.theta.size(); ++k) {
      th2.push_back(d.theta[k]);
      f2.push_back(d.f[k]);
      const double jump = std::abs(std::arg(d.f[k + 1] / d.f[k]));
      if (jump > 0.5 * kPi) {
        const double tm = 0.5 * (d.theta[k] + d.theta[k + 1]);
        th2.push_back(tm);
        f2.push_back(f(contour(tm)));
        split = true;
      }
    }
    th2.push_back(d.theta.back());
    f2.push_back(d.f.back());
    if (!split) break;
    d.theta = std::move(th2);
    d.f = std::move(f2);
    if (d.theta.size() > kMaxPoints)
      fail(ErrorCode::NonConvergent,
           "contour subdivision exceeded 2^14 points");
  }

  for (const Complex& v : d.f) {
    const double a = std::abs(v);
    d.max_abs = std::max(d.max_abs, a);
    d.min_abs = std::min(d.min_abs, a);
  }
  if (d.min_abs <= 1e-8 * d.max_abs)
    fail(ErrorCode::ZeroOnContour, "|f| dips to zero on the contour");
  return d;
}

}  // namespace

int count_zeros_inside(const ComplexFn& f, const ContourFn& contour,
                       int samples) {
  const ContourData d = sample_contour(f, contour, samples);
  double total = 0.0;
  for (size_t k = 0; k + 1 < d.theta.size(); ++k)
    total += std::arg(d.f[k + 1] / d.f[k]);
  return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

ContourSums contour_power_sums(const ComplexFn& f, const ContourFn& contour,
                               int samples) {
  const ContourData d = sample_contour(f, contour, samples);
  double winding = 0.0;
  Complex s1 = 0.0, s2 = 0.0;
  for (size_t k = 0; k + 1 < d.theta.size(); ++k) {
    // dlog f on the segment, with the continuous phase branch
    const Complex ratio = d.f[k + 1] / d.f[k];
    const Complex dlog(std::log(std::abs(ratio)), std::arg(ratio));
    const double tm = 0.5 * (d.theta[k] + d.theta[k + 1]);
    const Complex lm = contour(tm);
    winding += dlog.imag();
    s1 += lm * dlog;
    s2 += lm * lm * dlog;
  }
  ContourSums out;
  out.count = static_cast<int>(std::lround(winding / (2.0 * kPi)));
  const Complex two_pi_i(0.0, 2.0 * kPi);
  out.s1 = s1 / two_pi_i;
  out.s2 = s2 / two_pi_i;
  out.max_abs_f = d.max_abs;
  return out;
}

int count_zeros_in_disk(const ComplexFn& f, const DiskSpec& disk, int samples) {
  return count_zeros_inside(f, [&](double t) { return disk.boundary(t); }, samples);
}

ContourSums contour_power_sums(const ComplexFn& f, const DiskSpec& disk,
                               int samples) {
  return contour_power_sums(f, [&](double t) { return disk.boundary(t); }, samples);
}

Complex quadratic_vertex(const ComplexFn& f, Complex x0) {
  const double h = 1e-5 * (1.0 + std::abs(x0));
  const Complex fm = f(x0 - h), f0 = f(x0), fp = f(x0 + h);
  const Complex d1 = (fp - fm) / (2.0 * h);
  const Complex d2 = (fp - 2.0 * f0 + fm) / (h * h);
  if (d2 == Complex(0)) return x0;
  return x0 - d1 / d2;
}

Complex refine_zero(const ComplexFn& f, Complex guess, int max_iter) {
  Complex x = guess;
  double best_abs = std::abs(f(x));
  Complex best = x;
  int stalls = 0;
  for (int it = 0; it < max_iter; ++it) {
    const double h = 1e-5 * (1.0 + std::abs(x));
    const Complex fm = f(x - h), f0 = f(x), fp = f(x + h);
    const Complex d = (fp - fm) / (2.0 * h);
    if (d == Complex(0)) break;
    const Complex step = f0 / d;
    x -= step;
    const double fa = std::abs(f(x));
    if (fa < best_abs) {
      best_abs = fa;
      best = x;
      stalls = 0;
    } else if (++stalls >= 3) {
      // Newton is bouncing (near-double zero): switch to the quadratic model
      return quadratic_vertex(f, best);
    }
    if (std::abs(step) < 1e-13 * (1.0 + std::abs(x))) break;
  }
  return best_abs <= std::abs(f(x)) ? best : x;
}

}  // namespace mck
