// Command-line front end: load a coefficient config, run one of the spectral
// pipelines, write JSON reports or CSV traces.
//
// Exit codes: 0 success (and, for `verify`, all identities pass),
// 1 usage/config error, 2 numeric regime error or failed identities.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "mck/errors.hpp"
#include "mck/io.hpp"
#include "mck/verify.hpp"

namespace {

using nlohmann::ordered_json;

struct CommonArgs {
  std::string config_path;
  std::string out_path;
  std::optional<int> n_max;
  std::optional<int> steps;
  std::optional<double> tol_identity, tol_reality, tol_route, tol_inclusion;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool config_required = true) {
  auto* c = cmd->add_option("--config", args.config_path,
                            "coefficient/config file (.toml or .json)");
  if (config_required) c->required();
  cmd->add_option("--out", args.out_path, "output path (default: stdout)");
  cmd->add_option("--n-max", args.n_max, "override n_max");
  cmd->add_option("--steps", args.steps, "override ODE step count (0 = auto)");
  cmd->add_option("--tol-identity", args.tol_identity, "identity tolerance");
  cmd->add_option("--tol-reality", args.tol_reality, "reality tolerance");
  cmd->add_option("--tol-route", args.tol_route, "route-equivalence tolerance");
  cmd->add_option("--tol-inclusion", args.tol_inclusion, "inclusion slack");
}

mck::RunConfig resolve(const CommonArgs& args) {
  mck::RunConfig cfg = mck::load_config(args.config_path);
  if (args.n_max) cfg.n_max = *args.n_max;
  if (args.steps) cfg.steps = *args.steps;
  if (args.tol_identity) cfg.tol.identity = *args.tol_identity;
  if (args.tol_reality) cfg.tol.reality = *args.tol_reality;
  if (args.tol_route) cfg.tol.route = *args.tol_route;
  if (args.tol_inclusion) cfg.tol.inclusion_slack = *args.tol_inclusion;
  return cfg;
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write to " + out_path);
  out << text;
}

ordered_json complex_json(mck::Complex v) {
  return {{"re", v.real()}, {"im", v.imag()}};
}

int run_trace(const CommonArgs& args, const std::string& what, double lo,
              double hi, int points, double im, double energy) {
  const mck::RunConfig cfg = resolve(args);
  std::string csv;
  const auto row4 = [&](mck::Complex x, mck::Complex f) {
    csv += mck::format_number(x.real()) + "," + mck::format_number(x.imag()) +
           "," + mck::format_number(f.real()) + "," +
           mck::format_number(f.imag()) + "\n";
  };

  if (what == "potential") {
    const mck::EnergyPotential ep =
        mck::potential_direct(cfg.psi, mck::Complex(energy, im));
    csv = "x,V_re,V_im\n";
    for (int k = 0; k < ep.x_grid.size(); ++k)
      csv += mck::format_number(ep.x_grid[k]) + "," +
             mck::format_number(ep.V[k].real()) + "," +
             mck::format_number(ep.V[k].imag()) + "\n";
    write_output(args.out_path, csv);
    return 0;
  }

  csv = what == "lyapunov" ? "E_re,E_im,f_re,f_im\n" : "lambda_re,lambda_im,f_re,f_im\n";
  for (int k = 0; k < points; ++k) {
    const double x = points == 1 ? lo : lo + (hi - lo) * k / (points - 1);
    const mck::Complex at(x, im);
    mck::Complex f;
    if (what == "rho") {
      f = mck::discriminant_rho(cfg.psi, mck::SpectralPoint::from_lambda(at),
                                cfg.steps);
    } else if (what == "bdet") {
      f = mck::three_point_determinant(
          cfg.psi, mck::SpectralPoint::from_lambda(at), mck::Which::Direct,
          cfg.steps);
    } else if (what == "lyapunov") {
      f = mck::hill_point(cfg.psi, at).Delta;
    } else {
      throw CLI::ValidationError("--what must be rho|bdet|lyapunov|potential");
    }
    row4(at, f);
  }
  write_output(args.out_path, csv);
  return 0;
}

int run_monodromy(const CommonArgs& args, double lre, double lim) {
  const mck::RunConfig cfg = resolve(args);
  const auto pt = mck::SpectralPoint::from_lambda({lre, lim});
  const mck::MonodromyData data = mck::monodromy_matrix(cfg.psi, pt, cfg.steps);
  ordered_json j;
  j["lambda"] = complex_json(pt.lambda);
  j["z"] = complex_json(pt.z);
  j["E"] = complex_json(pt.E);
  ordered_json M = ordered_json::array();
  for (int r = 0; r < 3; ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < 3; ++c) row.push_back(complex_json(data.M(r, c)));
    M.push_back(row);
  }
  j["M"] = M;
  j["multipliers"] = ordered_json::array();
  for (const auto& t : data.multipliers) j["multipliers"].push_back(complex_json(t));
  j["rho"] = complex_json(data.rho);
  j["det_M"] = complex_json(data.M.determinant());
  try {
    const auto [tau3, idx] = mck::select_tau3(data);
    j["tau3"] = complex_json(tau3);
    j["tau3_index"] = idx;
  } catch (const mck::NumericError&) {
    j["tau3"] = nullptr;
  }
  write_output(args.out_path, j.dump(2) + "\n");
  return 0;
}

int run_ramifications(const CommonArgs& args) {
  const mck::RunConfig cfg = resolve(args);
  mck::RamOptions opts;
  opts.steps = cfg.steps;
  opts.include_zero_disk = true;
  const mck::RamificationSet set =
      mck::find_ramifications(cfg.psi, cfg.n_max, opts);
  const mck::RamSymmetryResiduals sym =
      mck::check_ramification_symmetries(cfg.psi, set, opts);
  ordered_json j;
  j["schema"] = 1;
  ordered_json table = ordered_json::object();
  for (const auto& [n, pair] : set.entries) {
    table[std::to_string(n)] = {
        {"r_minus", complex_json(pair.r_minus)},
        {"r_plus", complex_json(pair.r_plus)},
        {"double", pair.kind == mck::PairKind::Double}};
  }
  j["ramifications"] = table;
  j["symmetry_residuals"] = {{"star", sym.star},
                             {"star_reflect", sym.star_reflect},
                             {"reflect", sym.reflect}};
  write_output(args.out_path, j.dump(2) + "\n");
  return 0;
}

int run_three_point(const CommonArgs& args) {
  const mck::RunConfig cfg = resolve(args);
  mck::ThreePointOptions opts;
  opts.steps = cfg.steps;
  ordered_json j;
  j["schema"] = 1;
  ordered_json direct = ordered_json::object(), transpose = ordered_json::object(),
               h = ordered_json::object(), sym_gap = ordered_json::object();
  const auto reflected = cfg.psi.reflect();
  for (int n = -cfg.n_max; n <= cfg.n_max; ++n) {
    if (n == 0) continue;
    const auto d = mck::find_three_point_eig(cfg.psi, n, mck::Which::Direct, opts);
    const auto t = mck::find_three_point_eig(cfg.psi, n, mck::Which::Transpose, opts);
    direct[std::to_string(n)] = complex_json(d.mu);
    transpose[std::to_string(n)] = complex_json(t.mu);
    const auto via_sym =
        mck::find_three_point_eig(reflected, n, mck::Which::Direct, opts);
    sym_gap[std::to_string(n)] = std::abs(t.mu - via_sym.mu);
    if (n >= 1) h[std::to_string(n)] = mck::norming_constant_h(cfg.psi, t);
  }
  j["mu"] = direct;
  j["mu_tilde"] = transpose;
  j["mu_tilde_symmetry_gap"] = sym_gap;
  j["h_s"] = h;
  write_output(args.out_path, j.dump(2) + "\n");
  return 0;
}

int run_schrodinger(const CommonArgs& args) {
  const mck::RunConfig cfg = resolve(args);
  mck::HillOptions opts;
  const auto bands = mck::find_periodic_eigs(cfg.psi, cfg.n_max, opts);
  const auto dirichlet = mck::find_dirichlet_eigs(cfg.psi, cfg.n_max, opts);
  ordered_json j;
  j["schema"] = 1;
  ordered_json bj = ordered_json::object(), gj = ordered_json::object(),
               nj = ordered_json::object();
  for (const auto& [n, e] : bands)
    bj[std::to_string(n)] = {{"lower", e.lower},
                             {"upper", e.upper},
                             {"double", e.kind == mck::PairKind::Double}};
  for (const auto& [n, g] : dirichlet) {
    gj[std::to_string(n)] = g;
    nj[std::to_string(n)] = mck::norming_constant_g(cfg.psi, n, g, opts);
  }
  j["E"] = bj;
  j["gamma"] = gj;
  j["g_s"] = nj;
  write_output(args.out_path, j.dump(2) + "\n");
  return 0;
}

int run_verify(const CommonArgs& args, bool cross_route) {
  const mck::RunConfig cfg = resolve(args);
  mck::VerifyOptions opts;
  opts.cross_route = cross_route;
  const mck::SpectralReport rep = mck::verify_all(cfg.psi, cfg.n_max, cfg.tol, opts);
  write_output(args.out_path, mck::report_to_json(rep));
  return rep.all_pass() ? 0 : 2;
}

int run_winding(const CommonArgs& args, int n, int steps) {
  const mck::RunConfig cfg = resolve(args);
  if (steps == 0) steps = std::max(256, 64 * std::abs(n));
  const int w = mck::track_winding(cfg.psi, n, steps);
  ordered_json j;
  j["schema"] = 1;
  j["n"] = n;
  j["translation_steps"] = steps;
  j["winding"] = w;
  write_output(args.out_path, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral toolkit for the periodic third-order operator and "
               "its energy-dependent Hill transform"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string what = "rho";
  double grid_min = 1.0, grid_max = 500.0, grid_im = 0.0, energy = 9.0;
  int grid_points = 1000;
  double lambda_re = 1.0, lambda_im = 0.0;
  int winding_n = 1, winding_steps = 0;
  bool cross_route = false;

  auto* trace = app.add_subcommand("trace", "CSV traces of rho, the 3-point "
                                            "determinant, the Lyapunov function, or V(x,E)");
  add_common(trace, args);
  trace->add_option("--what", what, "rho|bdet|lyapunov|potential")->required();
  trace->add_option("--grid-min", grid_min, "grid start (lambda or E)");
  trace->add_option("--grid-max", grid_max, "grid end");
  trace->add_option("--grid-points", grid_points, "number of grid points");
  trace->add_option("--grid-im", grid_im, "imaginary offset of the grid");
  trace->add_option("--energy", energy, "energy E for --what=potential");

  auto* monodromy = app.add_subcommand("monodromy", "monodromy matrix, multipliers, rho at one lambda");
  add_common(monodromy, args);
  monodromy->add_option("--lambda-re", lambda_re, "Re lambda")->required();
  monodromy->add_option("--lambda-im", lambda_im, "Im lambda");

  auto* ram = app.add_subcommand("ramifications", "branch points r_n^± per disk");
  add_common(ram, args);

  auto* three = app.add_subcommand("three-point", "3-point spectra mu_n, mu~_n and norming constants");
  add_common(three, args);

  auto* schr = app.add_subcommand("schrodinger", "Hill spectra E_n^±, gamma_n and norming constants");
  add_common(schr, args);

  auto* verify = app.add_subcommand("verify", "full correspondence report (exit 0 iff all identities pass)");
  add_common(verify, args);
  verify->add_flag("--cross-route", cross_route,
                   "also recompute the Hill spectra through the fixed-point potential");

  auto* winding = app.add_subcommand("winding", "winding count of mu_n under coefficient translation");
  add_common(winding, args);
  winding->add_option("--n", winding_n, "gap index n >= 1")->required();
  winding->add_option("--winding-steps", winding_steps,
                      "translation steps (default max(256, 64 n))");

  CLI11_PARSE(app, argc, argv);

  try {
    if (trace->parsed())
      return run_trace(args, what, grid_min, grid_max, grid_points, grid_im, energy);
    if (monodromy->parsed()) return run_monodromy(args, lambda_re, lambda_im);
    if (ram->parsed()) return run_ramifications(args);
    if (three->parsed()) return run_three_point(args);
    if (schr->parsed()) return run_schrodinger(args);
    if (verify->parsed()) return run_verify(args, cross_route);
    if (winding->parsed()) return run_winding(args, winding_n, winding_steps);
  } catch (const mck::NumericError& e) {
    std::cerr << "numeric regime error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
