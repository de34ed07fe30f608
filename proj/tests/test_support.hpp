#pragma once

#include <cmath>
#include <filesystem>
#include <functional>
#include <random>
#include <string>

#include "thermofriction/atomdata.hpp"
#include "thermofriction/dielectric.hpp"

namespace thermofriction::test {

inline std::filesystem::path data_dir() { return THERMOFRICTION_TEST_DATA_DIR; }

inline AtomSpecies bundled_atom(const std::string& name) {
  return load_atom_file(data_dir() / "atoms" / (name + ".toml"));
}

inline DielectricModel bundled_material(const std::string& name) {
  return load_material_file(data_dir() / "materials" / (name + ".toml"));
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

/// Independent series oracle: integral over (0, inf) of x^n / sinh^2(x/2)
/// = 4 sum_k k * n! / k^(n+1) = 4 n! zeta(n), the zeta sum carried to
/// 2e5 terms plus its Euler-Maclaurin tail.
inline double kernel_moment(int n) {
  constexpr int kTerms = 200000;
  double zeta = 0.0;
  for (int k = kTerms; k >= 1; --k) zeta += std::pow(static_cast<double>(k), -n);
  const double K = kTerms;
  zeta += std::pow(K, 1 - n) / (n - 1) - 0.5 * std::pow(K, -n) + n / 12.0 * std::pow(K, -n - 1);
  double factorial = 1.0;
  for (int i = 2; i <= n; ++i) factorial *= i;
  return 4.0 * factorial * zeta;
}

/// Smooth integrand with g = O(omega^3) at the origin, drawn from a family of
/// polynomial-times-oscillatory/exponential shapes.
inline std::function<double(double)> random_smooth_integrand(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double a = 0.5 + u(rng), b = u(rng), c = 0.1 + 2.0 * u(rng);
  const double d = u(rng), e = 0.05 + 0.5 * u(rng);
  const int n = 3 + static_cast<int>(6 * u(rng));
  return [=](double w) {
    const double s = std::sin(c * w);
    return std::pow(w, n) * (a + b * s * s) + d * w * w * w * w * std::exp(-e * w);
  };
}

/// Uniform trapezoid rule for the thermal integral on (0, x_max/beta] with
/// n panels; the integrand vanishes linearly at omega = 0.
inline double trapezoid_oracle(const std::function<double(double)>& g, double beta, double x_max,
                               long n) {
  const double b = x_max / beta;
  const double h = b / static_cast<double>(n);
  const auto f = [&](double w) {
    const double s = std::sinh(0.5 * beta * w);
    return g(w) / (s * s);
  };
  double sum = 0.5 * f(b);
  for (long i = 1; i < n; ++i) sum += f(static_cast<double>(i) * h);
  return sum * h;
}

}  // namespace thermofriction::test
