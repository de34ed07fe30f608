#include "thermofriction/thermal_quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "thermofriction/errors.hpp"

namespace thermofriction {

namespace {

// Kronrod abscissae on [-1, 1] (non-negative half); odd indices are the
// 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1e-2)) throw DomainError("rel_tol must lie in (0, 1e-2)");
  if (!(x_max >= kMinimumCutoff)) throw DomainError("x_max must be at least 30");
  if (max_subdivisions < 1) throw DomainError("max_subdivisions must be positive");
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, int max_panels,
                                    std::span<const double> breakpoints) {
  if (!(b > a)) return {0.0, 0.0, 0};

  std::vector<double> edges{a};
  for (double p : breakpoints) {
    if (p > a && p < b) edges.push_back(p);
  }
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::priority_queue<Panel> queue;
  double value = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    auto p = gauss_kronrod(f, edges[i], edges[i + 1]);
    value += p.value;
    error += p.error;
    queue.push(p);
  }

  int panels = static_cast<int>(queue.size());
  while (error > rel_tol * std::abs(value)) {
    if (panels >= max_panels) {
      std::ostringstream msg;
      msg << "adaptive quadrature did not reach rel_tol " << rel_tol << " within " << max_panels
          << " panels (estimate " << value << ", error " << error << ")";
      throw ConvergenceError(msg.str(), value, error);
    }
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw ConvergenceError("panel width reached floating-point resolution", value, error);
    }
    const auto left = gauss_kronrod(f, worst.a, mid);
    const auto right = gauss_kronrod(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++panels;
  }

  // Re-sum to shed the rounding accumulated by the incremental updates.
  value = 0.0;
  error = 0.0;
  while (!queue.empty()) {
    value += queue.top().value;
    error += queue.top().error;
    queue.pop();
  }
  return {value, error, panels};
}

double inverse_sinh_squared(double y) {
  const double e = std::exp(-2.0 * y);
  const double d = -std::expm1(-2.0 * y);
  return 4.0 * e / (d * d);
}

QuadratureResult thermal_integral_detailed(const std::function<double(double)>& g, double beta,
                                           const QuadratureSpec& spec,
                                           std::span<const double> breakpoints) {
  spec.validate();
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("beta must be positive and finite");

  // x = beta omega keeps the kernel temperature-independent.
  std::vector<double> edges = {0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0};
  for (double omega : breakpoints) edges.push_back(beta * omega);
  const double inv_beta = 1.0 / beta;
  const auto integrand = [&](double x) {
    return g(x * inv_beta) * inverse_sinh_squared(0.5 * x) * inv_beta;
  };
  return integrate_adaptive(integrand, 0.0, spec.x_max, spec.rel_tol, spec.max_subdivisions, edges);
}

double thermal_integral(const std::function<double(double)>& g, double beta,
                        const QuadratureSpec& spec) {
  return thermal_integral_detailed(g, beta, spec).value;
}

}  // namespace thermofriction
