#ifndef MCK_ZEROS_HPP_
#define MCK_ZEROS_HPP_

#include <functional>
#include <vector>

#include "mck/scalar.hpp"

namespace mck {

// The localization disks D_n of the lambda plane:
//   D_0 = {|lambda| < 1},
//   D_n = {|lambda^{1/3} - 2 pi n/sqrt3| < 1}      (n > 0),
//   D_{-n} = -D_n.
struct DiskSpec {
  int n = 0;

  static DiskSpec index(int n) { return DiskSpec{n}; }

  double z_center() const { return 2.0 * kPi * std::abs(n) / kSqrt3; }

  bool contains(Complex lambda) const;

  // Positively oriented boundary point at angle theta (in the lambda plane).
  Complex boundary(double theta) const;
};

using ComplexFn = std::function<Complex(Complex)>;
// theta in [0, 2 pi] -> positively oriented boundary point
using ContourFn = std::function<Complex(double)>;

// Winding number of f along the discretized contour (= number of zeros
// inside, counted with multiplicity, for analytic f). Phase increments above
// pi/2 trigger adaptive subdivision; more than 2^14 contour points is
// NonConvergent, a dip of |f| below 1e-8 * (contour scale) is ZeroOnContour.
int count_zeros_inside(const ComplexFn& f, const ContourFn& contour,
                       int samples);
int count_zeros_in_disk(const ComplexFn& f, const DiskSpec& disk, int samples);

// Zero counting plus the first two Newton power sums s1 = sum lambda_i,
// s2 = sum lambda_i^2 over the zeros inside, via
// s_m = (1/2 pi i) oint lambda^m dlog f.
struct ContourSums {
  int count = 0;
  Complex s1, s2;
  double max_abs_f = 0.0;
};
ContourSums contour_power_sums(const ComplexFn& f, const ContourFn& contour,
                               int samples);
ContourSums contour_power_sums(const ComplexFn& f, const DiskSpec& disk,
                               int samples);

// Newton with central-difference derivative, step 1e-5*(1+|lambda|); falls
// back to a local quadratic model when the iteration stalls (near-double
// zeros leave Newton ill-conditioned).
Complex refine_zero(const ComplexFn& f, Complex guess, int max_iter = 40);

// Vertex of the local quadratic model of f around x0 (the stall fallback and
// the double-zero locator).
Complex quadratic_vertex(const ComplexFn& f, Complex x0);

}  // namespace mck

#endif  // MCK_ZEROS_HPP_
