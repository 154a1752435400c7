#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mck/cubic.hpp"
#include "mck/monodromy.hpp"
#include "mck/ode.hpp"

using namespace mck;

namespace {

TrigSeries<double> cos_series(double a1, double a2 = 0.0) {
  TrigSeries<double> s;
  s.cos_coeffs = Vec(2);
  s.cos_coeffs << a1, a2;
  return s;
}

TrigSeries<double> constant_series(double c) {
  TrigSeries<double> s;
  s.constant = c;
  return s;
}

CoefficientPair<double> sample_psi() {
  TrigSeries<double> p = cos_series(0.05, 0.02);
  TrigSeries<double> q;
  q.sin_coeffs = Vec(1);
  q.sin_coeffs << 0.03;
  return {p, q};
}

}  // namespace

TEST_CASE("free equation at lambda = 0 gives the polynomial fundamental matrix") {
  const CoefficientPair<double> psi;
  const auto tr = propagate_third_order(psi, SpectralPoint::from_lambda(0.0), 1.0, 1024);
  Mat3C expected;
  expected << 1, 1, 0.5,
      0, 1, 1,
      0, 0, 1;
  CHECK((tr.at_end() - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("free equation at lambda = 1: trace and circulant structure") {
  const CoefficientPair<double> psi;
  const auto tr = propagate_third_order(psi, SpectralPoint::from_lambda(1.0), 1.0, 2048);
  const Mat3C M = tr.at_end();
  // frozen closed form e^z + e^{wz} + e^{w^2 z} at z = 1
  CHECK(std::abs(M.trace() - Complex(3.5041749401277556)) < 1e-11);
  // Phi(1) is circulant for psi = 0: rows (a,b,c),(c,a,b),(b,c,a)
  const Complex a(1.1680583133759185), b(1.0418653550989098),
      c(0.50835815998421686);
  Mat3C expected;
  expected << a, b, c,
      c, a, b,
      b, c, a;
  CHECK((M - expected).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("constant p0: trace equals the exponential sum of the cubic roots") {
  const double p0 = -0.1;
  const CoefficientPair<double> psi{constant_series(p0), {}};
  for (double lambda : {1.0, 5.0}) {
    const auto tr =
        propagate_third_order(psi, SpectralPoint::from_lambda(lambda), 1.0, 2048);
    // roots of k^3 + 2 p0 k - lambda (cubic oracle, independent of RK4)
    const auto ks = solve_cubic_monic(0.0, 2.0 * p0, -lambda);
    const Complex want = std::exp(ks[0]) + std::exp(ks[1]) + std::exp(ks[2]);
    CHECK(std::abs(tr.at_end().trace() - want) < 1e-10 * std::abs(want));
  }
}

TEST_CASE("volume conservation: det Phi = 1 along trajectories up to |z| = 40") {
  const auto psi = sample_psi();
  for (const Complex z : {Complex(5, 0), Complex(12, 3), Complex(0, 20),
                          Complex(28, -7), Complex(40, 0)}) {
    const auto pt = SpectralPoint::from_z(z);
    const auto tr = propagate_third_order(psi, pt, 1.0);
    for (int k = 0; k < tr.det_flow.size(); k += 64) {
      CHECK(std::abs(tr.det_flow[k] - Complex(1.0)) < 1e-9);
    }
    CHECK(std::abs(tr.det_flow[tr.det_flow.size() - 1] - Complex(1.0)) < 1e-9);
  }
  // at small |z| the direct determinant is well conditioned and must agree
  const auto small = propagate_third_order(psi, SpectralPoint::from_z(Complex(3, 1)), 1.0);
  for (size_t k = 0; k < small.Phi.size(); k += 256) {
    CHECK(std::abs(small.Phi[k].determinant() - Complex(1.0)) < 1e-10);
  }
}

TEST_CASE("transpose trajectory equals the direct trajectory of (psi_*, -lambda)") {
  const auto psi = sample_psi();
  const Complex lambda(7.0, 2.0);
  const auto tr_t =
      propagate_transpose(psi, SpectralPoint::from_lambda(lambda), 1.0, 1024);
  const auto tr_d = propagate_third_order(
      psi.star(), SpectralPoint::from_lambda(-lambda), 1.0, 1024);
  for (size_t k = 0; k < tr_t.Phi.size(); k += 128) {
    CHECK((tr_t.Phi[k] - tr_d.Phi[k]).cwiseAbs().maxCoeff() < 1e-10);
  }
  // both reduce to y''' = 0 at lambda = 0 for psi = 0
  const CoefficientPair<double> zero;
  const auto a = propagate_transpose(zero, SpectralPoint::from_lambda(0.0), 1.0, 1024);
  const auto b = propagate_third_order(zero, SpectralPoint::from_lambda(0.0), 1.0, 1024);
  CHECK((a.at_end() - b.at_end()).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("transpose symmetry M~^T J M = J") {
  const auto psi = sample_psi();
  const Mat3C J = symmetry_J();
  for (const Complex lambda : {Complex(3.0, 0.0), Complex(-11.0, 4.0),
                               Complex(40.0, 25.0)}) {
    const auto pt = SpectralPoint::from_lambda(lambda);
    const Mat3C M = propagate_third_order(psi, pt, 1.0).at_end();
    const Mat3C Mt = propagate_transpose(psi, pt, 1.0).at_end();
    CHECK((Mt.transpose() * J * M - J).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("bilinear invariant of direct/transpose solution pairs") {
  const auto psi = sample_psi();
  const auto pt = SpectralPoint::from_lambda(Complex(9.0, 3.0));
  const auto dir = propagate_third_order(psi, pt, 1.0, 1024);
  const auto tra = propagate_transpose(psi, pt, 1.0, 1024);
  const Mat3C J = symmetry_J();
  // (G, J Y~) = g y~^[2] - g' y~' + g^[2] y~ stays constant for every pair of
  // direct column g and transpose column y~
  for (int cg = 0; cg < 3; ++cg) {
    for (int cy = 0; cy < 3; ++cy) {
      const Complex at0 =
          dir.Phi[0].col(cg).transpose() * J * tra.Phi[0].col(cy);
      for (size_t k = 0; k < dir.Phi.size(); k += 100) {
        const Complex at =
            dir.Phi[k].col(cg).transpose() * J * tra.Phi[k].col(cy);
        CHECK(std::abs(at - at0) < 1e-8);
      }
    }
  }
}

TEST_CASE("Richardson order check: doubling steps cuts the error ~16x") {
  const auto psi = sample_psi();
  const auto pt = SpectralPoint::from_z(Complex(10.0, 0.0));
  const Mat3C c1 = propagate_third_order(psi, pt, 1.0, 512).at_end();
  const Mat3C c2 = propagate_third_order(psi, pt, 1.0, 1024).at_end();
  const Mat3C c3 = propagate_third_order(psi, pt, 1.0, 2048).at_end();
  const Mat3C ref = propagate_third_order(psi, pt, 1.0, 8192).at_end();
  const double e1 = (c1 - ref).cwiseAbs().maxCoeff();
  const double e2 = (c2 - ref).cwiseAbs().maxCoeff();
  const double e3 = (c3 - ref).cwiseAbs().maxCoeff();
  CHECK(e1 / e2 > 12.0);
  CHECK(e1 / e2 < 20.0);
  CHECK(e2 / e3 > 12.0);
  CHECK(e2 / e3 < 20.0);
}

TEST_CASE("Hill propagation against free closed forms") {
  const PotentialFn zero = [](double) { return Complex(0.0); };
  {
    const auto tr = propagate_schrodinger(zero, Complex(kPi * kPi, 0), 1.0, 1024);
    CHECK(std::abs(tr.at_end()(0, 1)) < 1e-8);               // phi(1) = sin(pi)/pi
    CHECK(std::abs(tr.at_end()(0, 0) - Complex(-1.0)) < 1e-10);  // theta(1) = cos(pi)
  }
  {
    const auto tr = propagate_schrodinger(zero, Complex(1.0, 0), 1.0, 1024);
    const Complex delta = 0.5 * (tr.at_end()(0, 0) + tr.at_end()(1, 1));
    CHECK(std::abs(delta - Complex(0.54030230586813972)) < 1e-12);  // cos 1
  }
}

TEST_CASE("Hill propagation: constant potential shifts the energy") {
  const double c = 2.7;
  const PotentialFn vc = [&](double) { return Complex(c); };
  const Complex E(9.0, 0.0);
  const auto shifted = propagate_schrodinger(vc, E, 1.0, 1024);
  const PotentialFn zero = [](double) { return Complex(0.0); };
  const auto free_tr = propagate_schrodinger(zero, E - c, 1.0, 1024);
  CHECK((shifted.at_end() - free_tr.at_end()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Wronskian stays 1 along Hill trajectories") {
  // sampled-potential variant, mildly oscillatory V
  const int steps = 512;
  VecC v(2 * steps + 1);
  for (int j = 0; j <= 2 * steps; ++j) {
    const double x = static_cast<double>(j) / (2 * steps);
    v[j] = Complex(0.3 * std::cos(2 * kPi * x), 0.05 * std::sin(2 * kPi * x));
  }
  const auto tr = propagate_schrodinger(v, Complex(25.0, 1.0), 1.0, steps);
  for (size_t k = 0; k < tr.Psi.size(); k += 32) {
    CHECK(std::abs(tr.Psi[k].determinant() - Complex(1.0)) < 1e-9);
  }
}
