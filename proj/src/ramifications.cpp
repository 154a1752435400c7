#include "mck/ramifications.hpp"

#include <cmath>

#include "mck/errors.hpp"

namespace mck {

namespace {

// sort a refined pair so that (r_minus, r_plus) is ordered by real part
void order_pair(RamificationPair& pair) {
  if (pair.r_plus.real() < pair.r_minus.real()) std::swap(pair.r_minus, pair.r_plus);
}

}  // namespace

RamificationPair find_ramification_pair(const CoefficientPair<double>& psi,
                                        int n, const RamOptions& opts) {
  const auto psic = complexified(psi);
  const ComplexFn rho = [&](Complex lambda) {
    return discriminant_rho(psic, SpectralPoint::from_lambda(lambda), opts.steps);
  };
  const DiskSpec disk = DiskSpec::index(n);
  const ContourSums sums = contour_power_sums(rho, disk, opts.contour_samples);
  if (sums.count != 2)
    fail(ErrorCode::WrongCount,
         "disk " + std::to_string(n) + " holds " + std::to_string(sums.count) +
             " zeros of rho, expected 2 (psi outside the perturbative regime?)");

  // zeros of the quadratic lambda^2 - s1 lambda + e2 matching the power sums
  const Complex e2 = 0.5 * (sums.s1 * sums.s1 - sums.s2);
  Complex d = std::sqrt(sums.s1 * sums.s1 - 4.0 * e2);
  Complex w1 = 0.5 * (sums.s1 + d);
  Complex w2 = 0.5 * (sums.s1 - d);

  const double scale = 1.0 + std::abs(sums.s1) / 2.0;
  const double merge_tol = 1e-6 * scale;

  RamificationPair pair;
  if (std::abs(w1 - w2) < merge_tol) {
    const Complex v = quadratic_vertex(rho, 0.5 * sums.s1);
    pair.r_minus = pair.r_plus = v;
    pair.kind = PairKind::Double;
  } else {
    w1 = refine_zero(rho, w1);
    w2 = refine_zero(rho, w2);
    if (std::abs(w1 - w2) < merge_tol) {
      const Complex v = quadratic_vertex(rho, 0.5 * (w1 + w2));
      pair.r_minus = pair.r_plus = v;
      pair.kind = PairKind::Double;
    } else {
      pair.r_minus = w1;
      pair.r_plus = w2;
      pair.kind = PairKind::SimplePair;
      order_pair(pair);
    }
  }
  return pair;
}

RamificationSet find_ramifications(const CoefficientPair<double>& psi,
                                   int n_max, const RamOptions& opts) {
  if (norm_h1(psi) > opts.smallness)
    fail(ErrorCode::WrongCount,
         "norm_h1(psi) exceeds the smallness threshold; disk localization is "
         "not guaranteed");
  RamificationSet set;
  for (int n = 1; n <= n_max; ++n) {
    set.entries[n] = find_ramification_pair(psi, n, opts);
    set.entries[-n] = find_ramification_pair(psi, -n, opts);
  }
  if (opts.include_zero_disk)
    set.entries[0] = find_ramification_pair(psi, 0, opts);
  return set;
}

RamSymmetryResiduals check_ramification_symmetries(
    const CoefficientPair<double>& psi, const RamificationSet& set,
    const RamOptions& opts) {
  RamSymmetryResiduals out;
  const auto update = [](double& acc, Complex a, Complex b) {
    acc = std::max(acc, std::abs(a - b) / (1.0 + std::abs(a)));
  };
  for (const auto& [n, pair] : set.entries) {
    if (n == 0 || set.entries.count(-n) == 0) continue;
    // r_n^+(psi) = -r_{-n}^-(psi_*): negation swaps the pair order
    const auto star = find_ramification_pair(psi.star(), -n, opts);
    const auto star_reflect = find_ramification_pair(psi.star_reflect(), -n, opts);
    const auto reflect = find_ramification_pair(psi.reflect(), n, opts);
    update(out.star, pair.r_plus, -star.r_minus);
    update(out.star, pair.r_minus, -star.r_plus);
    update(out.star_reflect, pair.r_plus, -star_reflect.r_minus);
    update(out.star_reflect, pair.r_minus, -star_reflect.r_plus);
    update(out.reflect, pair.r_plus, reflect.r_plus);
    update(out.reflect, pair.r_minus, reflect.r_minus);
  }
  return out;
}

}  // namespace mck
