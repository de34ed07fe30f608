#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "test_support.hpp"
#include "thermofriction/errors.hpp"
#include "thermofriction/thermal_quadrature.hpp"

using namespace thermofriction;
using test::kernel_moment;
using test::rel_diff;

namespace {

auto power(int n) {
  return [n](double w) { return std::pow(w, n); };
}

}  // namespace

TEST_CASE("kernel moments against the series oracle") {
  CHECK(rel_diff(kernel_moment(3), 24.0 * 1.2020569031595942) < 1e-12);
  CHECK(rel_diff(kernel_moment(8), 256.0 / 15.0 * std::pow(std::numbers::pi, 8)) < 1e-12);

  CHECK(rel_diff(thermal_integral(power(3), 1.0), kernel_moment(3)) < 1e-8);
  CHECK(rel_diff(thermal_integral(power(8), 1.0), kernel_moment(8)) < 1e-8);
  CHECK(thermal_integral(power(3), 1.0) == doctest::Approx(28.84937).epsilon(1e-6));
  CHECK(thermal_integral(power(8), 1.0) == doctest::Approx(1.61937e5).epsilon(1e-5));
  CHECK(thermal_integral([](double) { return 0.0; }, 1.0) == 0.0);
}

TEST_CASE("scaling law in beta") {
  for (int n : {3, 4, 5, 8}) {
    const double unit = thermal_integral(power(n), 1.0);
    for (double beta : {1e-3, 0.37, 12.0, 5e4}) {
      const double scaled = thermal_integral(power(n), beta);
      CHECK(rel_diff(scaled, std::pow(beta, -n - 1) * unit) < 1e-9);
    }
  }
}

TEST_CASE("agreement with a uniform trapezoid rule") {
  std::mt19937_64 rng(2024);
  const QuadratureSpec spec;
  for (int i = 0; i < 4; ++i) {
    const auto g = test::random_smooth_integrand(rng);
    const double adaptive = thermal_integral(g, 1.0, spec);
    const double trapezoid = test::trapezoid_oracle(g, 1.0, spec.x_max, 1'000'000);
    CHECK(rel_diff(adaptive, trapezoid) < 1e-6);
  }
}

TEST_CASE("monotone in the integrand") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const auto g = test::random_smooth_integrand(rng);
    const auto h = test::random_smooth_integrand(rng);
    const auto sum = [&](double w) { return g(w) + std::abs(h(w)); };
    CHECK(thermal_integral(sum, 0.8) >= thermal_integral(g, 0.8));
  }
}

TEST_CASE("breakpoints and sharp features") {
  // Narrow Gaussian bump at omega = 3 on top of omega^3.
  const auto g = [](double w) { return w * w * w * (1.0 + 1e3 * std::exp(-std::pow((w - 3.0) / 1e-3, 2))); };
  const std::vector<double> bp{3.0};
  const auto with = thermal_integral_detailed(g, 1.0, {}, bp);
  // Laplace expansion of the bump: sqrt(pi) s [f(3) + s^2 f''(3) / 4], with
  // f = w^3 / sinh^2(w/2) and s = 1e-3.
  const auto f = [](double w) { return w * w * w / std::pow(std::sinh(0.5 * w), 2); };
  const double s = 1e-3, d = 1e-3;
  const double f2 = (f(3.0 + d) - 2.0 * f(3.0) + f(3.0 - d)) / (d * d);
  const double bump = 1e3 * std::sqrt(std::numbers::pi) * s * (f(3.0) + 0.25 * s * s * f2);
  CHECK(rel_diff(with.value, kernel_moment(3) + bump) < 1e-8);
  CHECK(with.error <= 1e-9 * with.value);
  CHECK(with.panels > 0);
}

TEST_CASE("convergence failure reports the best estimate") {
  const auto rough = [](double w) { return w * w * w * (1.0 + std::sin(1e4 * w)); };
  QuadratureSpec spec;
  spec.max_subdivisions = 5;
  try {
    thermal_integral(rough, 1.0, spec);
    FAIL("expected a convergence error");
  } catch (const ConvergenceError& e) {
    CHECK(std::isfinite(e.estimate()));
    CHECK(e.achieved_error() > 0.0);
  }
}

TEST_CASE("integrand errors propagate") {
  const auto bad = [](double w) -> double {
    if (w > 2.0) throw PoleProximityError(w, 2.0);
    return w * w * w;
  };
  CHECK_THROWS_AS(thermal_integral(bad, 1.0), PoleProximityError);
}

TEST_CASE("quadrature spec validation") {
  QuadratureSpec spec;
  CHECK_NOTHROW(spec.validate());
  spec.rel_tol = 0.0;
  CHECK_THROWS_AS(spec.validate(), DomainError);
  spec.rel_tol = 0.02;
  CHECK_THROWS_AS(spec.validate(), DomainError);
  spec = {};
  spec.x_max = 29.0;
  CHECK_THROWS_AS(thermal_integral(power(3), 1.0, spec), DomainError);
  CHECK_THROWS_AS(thermal_integral(power(3), 0.0), DomainError);
}

TEST_CASE("inverse sinh squared is stable") {
  CHECK(inverse_sinh_squared(0.5) == doctest::Approx(1.0 / std::pow(std::sinh(0.5), 2)).epsilon(1e-14));
  CHECK(inverse_sinh_squared(1e-6) == doctest::Approx(1e12).epsilon(1e-9));
  CHECK(inverse_sinh_squared(200.0) > 0.0);
  CHECK(inverse_sinh_squared(200.0) == doctest::Approx(4.0 * std::exp(-400.0)).epsilon(1e-14));
  CHECK(inverse_sinh_squared(1000.0) == 0.0);
}
