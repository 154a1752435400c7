#ifndef MCK_RAMIFICATIONS_HPP_
#define MCK_RAMIFICATIONS_HPP_

#include <map>

#include "mck/monodromy.hpp"
#include "mck/zeros.hpp"

namespace mck {

enum class PairKind { SimplePair, Double };

struct RamificationPair {
  Complex r_minus, r_plus;
  PairKind kind = PairKind::SimplePair;
};

// Zeros of rho inside the disks D_n: the branch points r_n^- , r_n^+ of the
// multiplier surface, exactly two per disk (with multiplicity) in the small
// regime.
struct RamificationSet {
  std::map<int, RamificationPair> entries;
};

struct RamOptions {
  int contour_samples = 512;
  int steps = 0;           // ODE steps (0 = default rule)
  double smallness = 0.25; // norm_h1 threshold guarding the perturbative regime
  bool include_zero_disk = false;
};

// One disk: argument-principle count (must be 2), zero extraction from the
// first two contour power sums, then Newton refinement; pairs closer than
// 1e-6 (1+|lambda|) merge into a flagged double at the local quadratic vertex.
RamificationPair find_ramification_pair(const CoefficientPair<double>& psi,
                                        int n, const RamOptions& opts = {});

// All disks 1 <= |n| <= n_max (plus n = 0 when asked). Throws WrongCount if a
// disk does not hold exactly two zeros (psi outside the perturbative regime).
RamificationSet find_ramifications(const CoefficientPair<double>& psi,
                                   int n_max, const RamOptions& opts = {});

// Residuals of the chained symmetry
// r_n^±(psi) = -r_{-n}^∓(psi_*) = -r_{-n}^∓(psi_*^-) = r_n^±(psi^-),
// each as a max over the entries of |difference| / (1 + |r|).
struct RamSymmetryResiduals {
  double star = 0.0;
  double star_reflect = 0.0;
  double reflect = 0.0;
};
RamSymmetryResiduals check_ramification_symmetries(
    const CoefficientPair<double>& psi, const RamificationSet& set,
    const RamOptions& opts = {});

}  // namespace mck

#endif  // MCK_RAMIFICATIONS_HPP_
