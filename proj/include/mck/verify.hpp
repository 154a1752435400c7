#ifndef MCK_VERIFY_HPP_
#define MCK_VERIFY_HPP_

#include <map>
#include <string>

#include "mck/ramifications.hpp"
#include "mck/schrodinger.hpp"
#include "mck/three_point.hpp"

namespace mck {

struct ToleranceSet {
  double identity = 1e-5;
  double reality = 1e-7;
  double route = 1e-7;
  double inclusion_slack = 1e-7;
};

struct VerifyOptions {
  int contour_samples = 512;
  int grid = 0;
  double smallness = 0.25;
  bool cross_route = false;  // recompute E/gamma with the fixed-point potential
};

// Matched spectral tables of the two pictures plus the residual of every
// correspondence identity, all reproducible from the tables alone.
struct SpectralReport {
  std::string psi_descriptor;
  int n_max = 0;

  std::map<int, RamificationPair> r;       // |n| <= n_max, n != 0
  std::map<int, Complex> mu;               // 3-point, direct
  std::map<int, Complex> mu_tilde;         // 3-point, transpose (direct route)
  std::map<int, Complex> mu_of_reflect;    // mu_n(psi^-), the symmetry route
  std::map<int, double> h_s;               // n >= 1
  std::map<int, BandEdges> E_pairs;        // n >= 1
  std::map<int, double> gamma;             // n >= 1
  std::map<int, double> g_s;               // n >= 1

  std::map<std::string, double> residuals;
  std::map<std::string, bool> pass;
  ToleranceSet tolerances;

  bool all_pass() const {
    for (const auto& [k, ok] : pass)
      if (!ok) return false;
    return true;
  }
};

// Full fan-out over the coefficient variants psi, psi^-, psi_*, psi_*^- as
// the identities demand; residual = max over n of the relative deviation.
SpectralReport verify_all(const CoefficientPair<double>& psi, int n_max,
                          const ToleranceSet& tol = {},
                          const VerifyOptions& opts = {});

// Deterministic JSON rendering (schema 1).
std::string report_to_json(const SpectralReport& report);

struct WindingOptions {
  int contour_samples = 512;
  double smallness = 0.25;
};

// Integer winding of mu_n(psi(.+t)) around the gap (r_n^-, r_n^+) as t runs
// [0,1], lifted to the two-sheeted cover of the gap; the sheet bit is
// sign(log(|A|^2 |tau_big|)) from the eigenfunction multiplier A, which
// crosses zero exactly at the branch points.
int track_winding(const CoefficientPair<double>& psi, int n, int steps,
                  const WindingOptions& opts = {});

}  // namespace mck

#endif  // MCK_VERIFY_HPP_
