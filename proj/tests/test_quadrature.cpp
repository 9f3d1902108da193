#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "casimir/quadrature.hpp"

using casimir::integrate;
using casimir::integrate_to_infinity;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("finite intervals with known antiderivatives") {
  auto sine = integrate([](double x) { return std::sin(x); }, 0.0, kPi,
                        1e-12, 1e-14);
  CHECK(sine.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(sine.value - 2.0) <= sine.error_estimate);

  auto cubic = integrate([](double x) { return x * x; }, 0.0, 1.0, 1e-13,
                         1e-15);
  CHECK(cubic.value == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("sharp Gaussian against erf") {
  const double s = 0.05;
  auto g = integrate(
      [s](double x) {
        const double u = (x - 0.5) / s;
        return std::exp(-u * u);
      },
      0.0, 1.0, 1e-12, 1e-14);
  const double exact = s * std::sqrt(kPi) * std::erf(0.5 / s);
  CHECK(g.value == doctest::Approx(exact).epsilon(1e-11));
  CHECK(std::abs(g.value - exact) <= 10.0 * g.error_estimate + 1e-15);
}

TEST_CASE("semi-infinite integrals") {
  auto expo = integrate_to_infinity([](double x) { return std::exp(-x); },
                                    0.0, 1e-12, 1e-14);
  CHECK(expo.value == doctest::Approx(1.0).epsilon(1e-12));

  // Planck-type integrand: integral is pi^4 / 15.
  auto planck = integrate_to_infinity(
      [](double x) {
        if (x == 0.0) return 0.0;
        return x * x * x / std::expm1(x);
      },
      0.0, 1e-12, 1e-14);
  CHECK(planck.value ==
        doctest::Approx(kPi * kPi * kPi * kPi / 15.0).epsilon(1e-11));

  auto shifted = integrate_to_infinity(
      [](double x) { return std::exp(-2.0 * (x - 1.0)); }, 1.0, 1e-12,
      1e-14);
  CHECK(shifted.value == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("degenerate interval is rejected") {
  CHECK_THROWS_AS(
      integrate([](double x) { return x; }, 1.0, 1.0, 1e-10, 1e-12),
      std::invalid_argument);
  CHECK_THROWS_AS(
      integrate([](double x) { return x; }, 2.0, 1.0, 1e-10, 1e-12),
      std::invalid_argument);
}
