#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mck/trig_series.hpp"

using namespace mck;

namespace {

TrigSeries<double> series(double constant, std::initializer_list<double> cs,
                          std::initializer_list<double> sn) {
  TrigSeries<double> s;
  s.constant = constant;
  s.cos_coeffs = Vec(cs.size());
  int i = 0;
  for (double v : cs) s.cos_coeffs[i++] = v;
  s.sin_coeffs = Vec(sn.size());
  i = 0;
  for (double v : sn) s.sin_coeffs[i++] = v;
  return s;
}

double trapezoid_l2_sq(const TrigSeries<double>& f, int n_pts) {
  double acc = 0.0;
  for (int k = 0; k < n_pts; ++k) {
    const double v = f.eval(static_cast<double>(k) / n_pts);
    acc += v * v;
  }
  return acc / n_pts;
}

}  // namespace

TEST_CASE("eval matches the stated sample values") {
  CHECK(series(0, {1}, {}).eval(0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(series(0, {}, {1}).eval(0.25) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(series(2, {0, 3}, {}).eval(0.5) == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("evaluation is exactly 1-periodic") {
  const auto f = series(0.3, {0.2, -0.1, 0.05}, {0.4, 0.0, -0.2});
  for (double x : {0.0, 0.123, 0.5, 0.987}) {
    CHECK(f.eval(x + 1.0) == doctest::Approx(f.eval(x)).epsilon(1e-13));
  }
}

TEST_CASE("derivative series agrees with central differences") {
  const auto f = series(0.3, {0.2, -0.1, 0.05}, {0.4, 0.0, -0.2});
  const auto df = f.derivative();
  const double h = 1e-5;
  for (double x : {0.0, 0.2, 0.33, 0.71}) {
    const double fd = (f.eval(x + h) - f.eval(x - h)) / (2 * h);
    CHECK(df.eval(x) == doctest::Approx(fd).epsilon(1e-8));
  }
}

TEST_CASE("symmetry transforms") {
  CoefficientPair<double> psi{series(0, {1}, {}), series(0, {}, {1})};

  SUBCASE("star negates q only") {
    const auto st = symmetry_transform(psi, SymmetryKind::Star);
    CHECK(st.p.cos_coeffs[0] == 1.0);
    CHECK(st.q.sin_coeffs[0] == -1.0);
  }
  SUBCASE("reflect fixes pure cosine series") {
    const auto rf = symmetry_transform(psi, SymmetryKind::Reflect);
    for (double x : {0.1, 0.4, 0.9})
      CHECK(rf.p.eval(x) == doctest::Approx(psi.p.eval(1.0 - x)).epsilon(1e-13));
    CHECK(rf.p.cos_coeffs[0] == 1.0);
    CHECK(rf.p.sin_coeffs.size() == 0);
  }
  SUBCASE("translate by half period negates sin(2 pi x)") {
    const auto tr = psi.q.translated(0.5);
    CHECK(tr.sin_coeffs[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(tr.cos_coeffs[0] == doctest::Approx(0.0).epsilon(1e-14));
  }
  SUBCASE("star and reflect are involutions") {
    const auto a = psi.star().star();
    const auto b = psi.reflect().reflect();
    for (double x : {0.15, 0.6}) {
      CHECK(a.q.eval(x) == doctest::Approx(psi.q.eval(x)).epsilon(1e-14));
      CHECK(b.p.eval(x) == doctest::Approx(psi.p.eval(x)).epsilon(1e-14));
      CHECK(b.q.eval(x) == doctest::Approx(psi.q.eval(x)).epsilon(1e-14));
    }
  }
}

TEST_CASE("norm_h1 examples") {
  CHECK(norm_h1({TrigSeries<double>::zero(), TrigSeries<double>::zero()}) == 0.0);
  // 0.05 sqrt((1 + 4 pi^2)/2), frozen from the Parseval identity
  CoefficientPair<double> psi{series(0, {0.05}, {}), TrigSeries<double>::zero()};
  CHECK(norm_h1(psi) == doctest::Approx(0.22494004091189899).epsilon(1e-12));
  CoefficientPair<double> psi2{TrigSeries<double>::zero(), series(-0.7, {}, {})};
  CHECK(norm_h1(psi2) == doctest::Approx(0.7).epsilon(1e-14));
}

TEST_CASE("Parseval consistency against trapezoid quadrature") {
  const auto p = series(0.1, {0.3, -0.07}, {0.12, 0.0, 0.2});
  const auto q = series(-0.2, {0.05}, {0.33});
  const CoefficientPair<double> psi{p, q};
  const double quad = std::sqrt(trapezoid_l2_sq(p, 1024) +
                                trapezoid_l2_sq(p.derivative(), 1024) +
                                trapezoid_l2_sq(q, 1024));
  CHECK(norm_h1(psi) == doctest::Approx(quad).epsilon(1e-10));
}

TEST_CASE("translate composes additively mod 1") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int rep = 0; rep < 20; ++rep) {
    const auto f = series(coef(rng), {coef(rng), coef(rng), coef(rng)},
                          {coef(rng), coef(rng)});
    const double t1 = 0.5 * (coef(rng) + 1.0), t2 = 0.5 * (coef(rng) + 1.0);
    const auto lhs = f.translated(t1).translated(t2);
    const auto rhs = f.translated(std::fmod(t1 + t2, 1.0));
    for (int n = 1; n <= 3; ++n) {
      CHECK(lhs.cos_coeff(n) == doctest::Approx(rhs.cos_coeff(n)).epsilon(1e-12));
      CHECK(lhs.sin_coeff(n) == doctest::Approx(rhs.sin_coeff(n)).epsilon(1e-12));
    }
  }
}

TEST_CASE("derivative of reflect equals minus reflect of derivative") {
  const auto p = series(0.0, {0.4, -0.3}, {0.25, 0.1});
  const auto lhs = p.reflected().derivative();
  const auto rhs = p.derivative().reflected().negated();
  for (int n = 1; n <= 2; ++n) {
    CHECK(lhs.cos_coeff(n) == doctest::Approx(rhs.cos_coeff(n)).epsilon(1e-12));
    CHECK(lhs.sin_coeff(n) == doctest::Approx(rhs.sin_coeff(n)).epsilon(1e-12));
  }
}
