#include "mck/verify.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <functional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "mck/errors.hpp"
#include "mck/parallel.hpp"

namespace mck {

namespace {

std::string describe_series(const TrigSeries<double>& s) {
  std::ostringstream os;
  os << s.constant;
  for (int n = 1; n <= s.modes(); ++n) {
    if (s.cos_coeff(n) != 0.0) os << " + " << s.cos_coeff(n) << "*cos(2pi*" << n << "x)";
    if (s.sin_coeff(n) != 0.0) os << " + " << s.sin_coeff(n) << "*sin(2pi*" << n << "x)";
  }
  return os.str();
}

double rel(Complex a, Complex b, double floor = 0.0) {
  return std::abs(a - b) / std::max(floor, std::max(std::abs(a), 1e-300));
}

// 3/4 r^{2/3} on the positive real branch used by the correspondence
double energy_of(double r) { return 0.75 * std::pow(r, 2.0 / 3.0); }

struct Tables {
  RamificationSet r_psi;
  std::vector<ThreePointEig> mu_psi, mu_tilde_psi;
  std::map<int, double> mu_reflect;           // mu_n(psi^-), n >= 1
  std::map<int, Complex> mu_star_neg;         // mu_{-n}(psi_*), n >= 1
  std::map<int, BandEdges> E_psi, E_reflect, E_star, E_star_reflect;
  std::map<int, double> gamma_psi, gamma_reflect;
  std::map<int, double> h_psi, g_psi;
  std::map<int, BandEdges> E_psi_fp;          // cross-route (optional)
  std::map<int, double> gamma_psi_fp;
};

}  // namespace

SpectralReport verify_all(const CoefficientPair<double>& psi, int n_max,
                          const ToleranceSet& tol, const VerifyOptions& opts) {
  if (norm_h1(psi) > opts.smallness)
    fail(ErrorCode::WrongCount, "norm_h1(psi) exceeds the smallness threshold");

  const CoefficientPair<double> psi_r = psi.reflect();
  const CoefficientPair<double> psi_s = psi.star();
  const CoefficientPair<double> psi_sr = psi.star_reflect();

  RamOptions ram_opts;
  ram_opts.contour_samples = opts.contour_samples;
  ram_opts.smallness = opts.smallness;
  ThreePointOptions tp_opts;
  tp_opts.contour_samples = opts.contour_samples;
  tp_opts.smallness = opts.smallness;
  HillOptions hill_opts;
  hill_opts.grid = opts.grid;
  hill_opts.smallness = opts.smallness;
  HillOptions hill_fp = hill_opts;
  hill_fp.route = Route::FixedPoint;

  Tables t;

  // independent pipeline fills; each task owns one table
  std::vector<std::pair<std::string, std::function<void()>>> tasks;
  tasks.emplace_back("r(psi)", [&] { t.r_psi = find_ramifications(psi, n_max, ram_opts); });
  tasks.emplace_back("mu(psi)", [&] {
    t.mu_psi = find_three_point_eigs(psi, n_max, Which::Direct, tp_opts);
  });
  tasks.emplace_back("mu~(psi)", [&] {
    t.mu_tilde_psi = find_three_point_eigs(psi, n_max, Which::Transpose, tp_opts);
  });
  tasks.emplace_back("mu(psi^-)", [&] {
    for (int n = 1; n <= n_max; ++n)
      t.mu_reflect[n] = find_three_point_eig(psi_r, n, Which::Direct, tp_opts).mu.real();
  });
  tasks.emplace_back("mu(psi_*)", [&] {
    for (int n = 1; n <= n_max; ++n)
      t.mu_star_neg[n] = find_three_point_eig(psi_s, -n, Which::Direct, tp_opts).mu;
  });
  tasks.emplace_back("E(psi)", [&] { t.E_psi = find_periodic_eigs(psi, n_max, hill_opts); });
  tasks.emplace_back("E(psi^-)", [&] { t.E_reflect = find_periodic_eigs(psi_r, n_max, hill_opts); });
  tasks.emplace_back("E(psi_*)", [&] { t.E_star = find_periodic_eigs(psi_s, n_max, hill_opts); });
  tasks.emplace_back("E(psi_*^-)", [&] {
    t.E_star_reflect = find_periodic_eigs(psi_sr, n_max, hill_opts);
  });
  tasks.emplace_back("gamma(psi)", [&] { t.gamma_psi = find_dirichlet_eigs(psi, n_max, hill_opts); });
  tasks.emplace_back("gamma(psi^-)", [&] {
    t.gamma_reflect = find_dirichlet_eigs(psi_r, n_max, hill_opts);
  });
  if (opts.cross_route) {
    tasks.emplace_back("E(psi) fixed-point", [&] {
      t.E_psi_fp = find_periodic_eigs(psi, n_max, hill_fp);
    });
    tasks.emplace_back("gamma(psi) fixed-point", [&] {
      t.gamma_psi_fp = find_dirichlet_eigs(psi, n_max, hill_fp);
    });
  }

  std::vector<std::string> task_errors(tasks.size());
  parallel_for(static_cast<int>(tasks.size()), [&](int i) {
    try {
      tasks[i].second();
    } catch (const NumericError& e) {
      task_errors[i] = e.what();
    }
  });
  for (size_t i = 0; i < tasks.size(); ++i)
    if (!task_errors[i].empty())
      fail(ErrorCode::WrongCount,
           "pipeline '" + tasks[i].first + "' failed: " + task_errors[i]);

  // norming constants reuse the transpose eigenfunctions / Dirichlet points
  for (const auto& eig : t.mu_tilde_psi)
    if (eig.n >= 1) t.h_psi[eig.n] = norming_constant_h(psi, eig);
  for (int n = 1; n <= n_max; ++n)
    t.g_psi[n] = norming_constant_g(psi, n, t.gamma_psi.at(n), hill_opts);

  SpectralReport rep;
  rep.psi_descriptor =
      "p = " + describe_series(psi.p) + "; q = " + describe_series(psi.q);
  rep.n_max = n_max;
  rep.tolerances = tol;
  rep.r = t.r_psi.entries;
  for (const auto& e : t.mu_psi) rep.mu[e.n] = e.mu;
  for (const auto& e : t.mu_tilde_psi) rep.mu_tilde[e.n] = e.mu;
  for (const auto& [n, v] : t.mu_reflect) rep.mu_of_reflect[n] = v;
  rep.h_s = t.h_psi;
  rep.E_pairs = t.E_psi;
  rep.gamma = t.gamma_psi;
  rep.g_s = t.g_psi;

  auto& res = rep.residuals;
  const auto acc = [&](const std::string& key, double v) {
    auto it = res.find(key);
    if (it == res.end() || it->second < v) res[key] = v;
  };

  for (int n = 1; n <= n_max; ++n) {
    const auto& rp = t.r_psi.entries.at(n);
    const auto& rm = t.r_psi.entries.at(-n);
    const auto& Ep = t.E_psi.at(n);
    const auto& Er = t.E_reflect.at(n);
    const auto& Es = t.E_star.at(n);
    const auto& Esr = t.E_star_reflect.at(n);
    const Complex mu_n = rep.mu.at(n);
    const Complex mut_n = rep.mu_tilde.at(n);
    const double gam = t.gamma_psi.at(n);
    const double gam_r = t.gamma_reflect.at(n);

    // Correspondence of band edges with ramifications
    acc("E_vs_r", rel(Ep.lower, energy_of(rp.r_minus.real())));
    acc("E_vs_r", rel(Ep.upper, energy_of(rp.r_plus.real())));
    acc("E_reflect", rel(Ep.lower, Er.lower));
    acc("E_reflect", rel(Ep.upper, Er.upper));
    acc("E_star_vs_r", rel(Es.lower, energy_of(-rm.r_plus.real())));
    acc("E_star_vs_r", rel(Es.upper, energy_of(-rm.r_minus.real())));
    acc("E_star_reflect", rel(Es.lower, Esr.lower));
    acc("E_star_reflect", rel(Es.upper, Esr.upper));

    // Dirichlet vs 3-point
    acc("gamma_reflect_vs_mu", rel(gam_r, energy_of(mu_n.real())));
    acc("gamma_vs_mu_tilde", rel(gam, energy_of(mut_n.real())));
    acc("gamma_vs_mu_star", rel(gam, energy_of(-t.mu_star_neg.at(n).real())));
    acc("mu_tilde_sym", rel(mut_n, t.mu_reflect.at(n)));

    // Norming constants
    const double g = t.g_psi.at(n);
    const double h = t.h_psi.at(n);
    acc("norming", std::abs(g - h / (4.0 * kPi * n)) / (1.0 + std::abs(g)));

    // Inclusions (residual = violation beyond the interval)
    acc("mu_in_r_gap",
        std::max({0.0, rp.r_minus.real() - mu_n.real(), mu_n.real() - rp.r_plus.real()}));
    acc("gamma_in_E_gap", std::max({0.0, Ep.lower - gam, gam - Ep.upper}));

    // Reality of the third-order tables
    acc("reality", std::abs(rp.r_minus.imag()));
    acc("reality", std::abs(rp.r_plus.imag()));
    acc("reality", std::abs(rm.r_minus.imag()));
    acc("reality", std::abs(rm.r_plus.imag()));
    acc("reality", std::abs(mu_n.imag()));
    acc("reality", std::abs(mut_n.imag()));
  }

  // Orderings: 2 < E_1^- <= E_1^+ < E_2^- <= ... and the mirrored r-chain
  double ordering = 0.0;
  double prev = 2.0;
  for (int n = 1; n <= n_max; ++n) {
    const auto& Ep = t.E_psi.at(n);
    if (!(prev < Ep.lower) || !(Ep.lower <= Ep.upper + 1e-12)) ordering = 1.0;
    prev = Ep.upper;
  }
  double prev_r = t.r_psi.entries.at(-1).r_plus.real();
  for (int n = 1; n <= n_max; ++n) {
    const auto& rp = t.r_psi.entries.at(n);
    if (!(prev_r < rp.r_minus.real()) ||
        !(rp.r_minus.real() <= rp.r_plus.real() + 1e-9))
      ordering = 1.0;
    prev_r = rp.r_plus.real();
  }
  res["ordering"] = ordering;

  if (opts.cross_route) {
    for (int n = 1; n <= n_max; ++n) {
      acc("route_gap_spectra", std::abs(t.E_psi.at(n).lower - t.E_psi_fp.at(n).lower));
      acc("route_gap_spectra", std::abs(t.E_psi.at(n).upper - t.E_psi_fp.at(n).upper));
      acc("route_gap_spectra", std::abs(t.gamma_psi.at(n) - t.gamma_psi_fp.at(n)));
    }
  }

  auto& pass = rep.pass;
  for (const auto& [key, v] : res) {
    if (key == "reality")
      pass[key] = v <= tol.reality;
    else if (key == "mu_in_r_gap" || key == "gamma_in_E_gap")
      pass[key] = v <= tol.inclusion_slack;
    else if (key == "ordering")
      pass[key] = v == 0.0;
    else if (key == "route_gap_spectra")
      pass[key] = v <= tol.route;
    else
      pass[key] = v <= tol.identity;
  }
  return rep;
}

std::string report_to_json(const SpectralReport& rep) {
  using json = nlohmann::ordered_json;
  json j;
  j["schema"] = 1;
  j["psi"] = rep.psi_descriptor;
  j["n_max"] = rep.n_max;
  j["tolerances"] = {{"identity", rep.tolerances.identity},
                     {"reality", rep.tolerances.reality},
                     {"route", rep.tolerances.route},
                     {"inclusion_slack", rep.tolerances.inclusion_slack}};

  json r = json::object();
  for (const auto& [n, pair] : rep.r) {
    r[std::to_string(n)] = {{"r_minus_re", pair.r_minus.real()},
                            {"r_minus_im", pair.r_minus.imag()},
                            {"r_plus_re", pair.r_plus.real()},
                            {"r_plus_im", pair.r_plus.imag()},
                            {"double", pair.kind == PairKind::Double}};
  }
  j["r"] = r;

  const auto complex_table = [](const std::map<int, Complex>& m) {
    json out = json::object();
    for (const auto& [n, v] : m)
      out[std::to_string(n)] = {{"re", v.real()}, {"im", v.imag()}};
    return out;
  };
  j["mu"] = complex_table(rep.mu);
  j["mu_tilde"] = complex_table(rep.mu_tilde);
  j["mu_of_reflect"] = complex_table(rep.mu_of_reflect);

  const auto real_table = [](const std::map<int, double>& m) {
    json out = json::object();
    for (const auto& [n, v] : m) out[std::to_string(n)] = v;
    return out;
  };
  j["h_s"] = real_table(rep.h_s);
  json bands = json::object();
  for (const auto& [n, e] : rep.E_pairs) {
    bands[std::to_string(n)] = {{"lower", e.lower},
                                {"upper", e.upper},
                                {"double", e.kind == PairKind::Double}};
  }
  j["E"] = bands;
  j["gamma"] = real_table(rep.gamma);
  j["g_s"] = real_table(rep.g_s);

  j["residuals"] = json::object();
  for (const auto& [k, v] : rep.residuals) j["residuals"][k] = v;
  j["pass"] = json::object();
  for (const auto& [k, v] : rep.pass) j["pass"][k] = v;
  j["all_pass"] = rep.all_pass();
  return j.dump(2) + "\n";
}

int track_winding(const CoefficientPair<double>& psi, int n, int steps,
                  const WindingOptions& opts) {
  if (n == 0) throw std::invalid_argument("winding needs n != 0");
  if (steps < 64 * std::abs(n))
    throw std::invalid_argument("winding needs steps >= 64 n");
  if (norm_h1(psi) > opts.smallness)
    fail(ErrorCode::WrongCount, "norm_h1(psi) exceeds the smallness threshold");

  RamOptions ram_opts;
  ram_opts.contour_samples = opts.contour_samples;
  ram_opts.smallness = opts.smallness;
  const RamificationPair gap_pair = find_ramification_pair(psi, n, ram_opts);
  const double r_lo = gap_pair.r_minus.real();
  const double r_hi = gap_pair.r_plus.real();
  const double gap = r_hi - r_lo;
  if (gap_pair.kind == PairKind::Double || gap < 1e-9 * (1.0 + std::abs(r_hi)))
    fail(ErrorCode::DegenerateGap,
         "gap (r_n^-, r_n^+) is degenerate; the winding is undefined");

  ThreePointOptions tp_opts;
  tp_opts.contour_samples = opts.contour_samples;
  tp_opts.smallness = opts.smallness;

  // sheet bit: log(|A|^2 |tau_big|) crosses zero exactly when mu touches a
  // branch point (A is the eigenfunction multiplier, tau_big the remaining
  // large multiplier; |A|^2 |tau_big| = |A^2 / A_partner^{-1}|... = 1 there)
  const auto sheet_signal = [&](const CoefficientPair<double>& psi_t,
                                Complex mu) {
    const MonodromyData mono =
        monodromy_matrix(psi_t, SpectralPoint::from_lambda(mu));
    Eigen::ComplexEigenSolver<Mat3C> es(mono.M);
    int ia = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 3; ++k) {
      const double f = std::abs(es.eigenvectors()(0, k)) / es.eigenvectors().col(k).norm();
      if (f < best) {
        best = f;
        ia = k;
      }
    }
    const Complex A = es.eigenvalues()[ia];
    double tau_big = 0.0;
    for (int k = 0; k < 3; ++k)
      if (k != ia) tau_big = std::max(tau_big, std::abs(es.eigenvalues()[k]));
    return std::log(std::abs(A) * std::abs(A) * tau_big);
  };

  Complex mu = find_three_point_eig(psi, n, Which::Direct, tp_opts).mu;
  const Complex mu0 = mu;

  double prev_signal = sheet_signal(psi, mu);
  int flips = 0;
  constexpr double kHysteresis = 1e-9;

  for (int j = 1; j <= steps; ++j) {
    const double tj = static_cast<double>(j) / steps;
    const CoefficientPair<double> psi_t = psi.translated(tj);
    const ComplexFn bdet = [&](Complex lambda) {
      const SpectralPoint pt = SpectralPoint::from_lambda(lambda);
      return three_point_determinant(psi_t, pt, Which::Direct);
    };
    const Complex mu_next = refine_zero(bdet, mu, 20);
    if (std::abs(mu_next - mu) > 0.5 * gap + 1e-9)
      fail(ErrorCode::LostTracking,
           "mu jumped more than half the gap between translation steps");
    mu = mu_next;

    const double s = sheet_signal(psi_t, mu);
    if (std::abs(s) > kHysteresis) {
      if (std::signbit(s) != std::signbit(prev_signal)) ++flips;
      prev_signal = s;
    }
  }

  if (std::abs(mu - mu0) > 1e-6 * (1.0 + std::abs(mu0)))
    fail(ErrorCode::LostTracking, "mu(1) did not return to mu(0)");
  if (flips % 2 != 0)
    fail(ErrorCode::LostTracking, "sheet bit did not close after a full loop");
  return flips / 2;
}

}  // namespace mck
