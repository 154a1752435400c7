#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "mck/cubic.hpp"

using namespace mck;

namespace {

// match computed roots to expected as multisets
double multiset_gap(std::array<Complex, 3> got, std::array<Complex, 3> want) {
  double best = 1e300;
  std::array<int, 3> idx{0, 1, 2};
  std::sort(idx.begin(), idx.end());
  do {
    double m = 0;
    for (int k = 0; k < 3; ++k)
      m = std::max(m, std::abs(got[k] - want[idx[k]]));
    best = std::min(best, m);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return best;
}

std::array<Complex, 3> coeffs_from_roots(Complex r1, Complex r2, Complex r3) {
  return {-(r1 + r2 + r3), r1 * r2 + r1 * r3 + r2 * r3, -r1 * r2 * r3};
}

}  // namespace

TEST_CASE("known real and complex root sets") {
  {
    auto [a, b, c] = coeffs_from_roots(1.0, 2.0, 3.0);
    CHECK(multiset_gap(solve_cubic_monic(a, b, c), {1.0, 2.0, 3.0}) < 1e-12);
  }
  {
    const Complex r1(2.0, 0.0), r2(0.5, 1.5), r3(0.5, -1.5);
    auto [a, b, c] = coeffs_from_roots(r1, r2, r3);
    CHECK(multiset_gap(solve_cubic_monic(a, b, c), {r1, r2, r3}) < 1e-12);
  }
  {
    // wide dynamic range
    auto [a, b, c] = coeffs_from_roots(1e6, 1.0, 1e-6);
    CHECK(multiset_gap(solve_cubic_monic(a, b, c), {1e6, 1.0, 1e-6}) < 1e-6);
  }
}

TEST_CASE("double and triple roots are reproduced") {
  {
    auto [a, b, c] = coeffs_from_roots(2.0, 2.0, -1.0);
    CHECK(multiset_gap(solve_cubic_monic(a, b, c), {2.0, 2.0, -1.0}) < 1e-7);
  }
  {
    auto [a, b, c] = coeffs_from_roots(1.5, 1.5, 1.5);
    CHECK(multiset_gap(solve_cubic_monic(a, b, c), {1.5, 1.5, 1.5}) < 1e-5);
  }
}

TEST_CASE("characteristic cubic of the free multipliers") {
  // tau^3 - T tau^2 + c2 tau - 1 with roots e^z, e^{wz}, e^{w^2 z}
  const Complex z = 1.0;
  const Complex w = omega();
  const Complex t1 = std::exp(z), t2 = std::exp(w * z), t3 = std::exp(w * w * z);
  auto [a, b, c] = coeffs_from_roots(t1, t2, t3);
  CHECK(std::abs(c - Complex(-1.0)) < 1e-14);  // product of multipliers = 1
  CHECK(multiset_gap(solve_cubic_monic(a, b, c), {t1, t2, t3}) < 1e-13);
}

TEST_CASE("random cubics: residual and discriminant vs product form") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int rep = 0; rep < 200; ++rep) {
    const Complex a(u(rng), u(rng)), b(u(rng), u(rng)), c(u(rng), u(rng));
    const auto roots = solve_cubic_monic(a, b, c);
    for (const auto& r : roots) {
      const Complex residual = ((r + a) * r + b) * r + c;
      CHECK(std::abs(residual) < 1e-10);
    }
    const Complex d12 = roots[0] - roots[1], d13 = roots[0] - roots[2],
                  d23 = roots[1] - roots[2];
    const Complex prod = d12 * d12 * d13 * d13 * d23 * d23;
    const Complex sym = cubic_discriminant_monic(a, b, c);
    CHECK(std::abs(prod - sym) < 1e-8 * (1.0 + std::abs(sym)));
  }
}
