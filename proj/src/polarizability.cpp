#include "thermofriction/polarizability.hpp"

#include <cmath>
#include <numbers>

#include "thermofriction/errors.hpp"
#include "thermofriction/thermal_quadrature.hpp"
#include "thermofriction/units.hpp"

namespace thermofriction {

namespace {

constexpr double kOneLoopPrefactor =
    (2.0 / 3.0) / (kSpeedOfLightAu * kSpeedOfLightAu * kSpeedOfLightAu);

void check_frequency(double omega) {
  if (!(omega >= 0.0) || !std::isfinite(omega)) throw DomainError("frequency must be finite and >= 0");
}

}  // namespace

BroadeningPolicy BroadeningPolicy::lorentzian(double gamma) {
  if (!(gamma > 0.0)) throw DomainError("Lorentzian linewidth must be positive");
  return {Mode::lorentzian, gamma};
}

double alpha(const AtomSpecies& species, double omega, const BroadeningPolicy& policy) {
  check_frequency(omega);
  const auto& lines = species.lines();
  if (policy.broadened()) {
    const std::complex<double> z(omega, 0.5 * policy.gamma);
    return sum_over_states(lines, z).real();
  }
  for (Eigen::Index i = 0; i < lines.size(); ++i) {
    const double pole = std::abs(lines.delta_e(i));
    if (std::abs(omega - pole) < kPoleExclusion) throw PoleProximityError(omega, pole);
  }
  return sum_over_states(lines, omega);
}

double im_alpha_oneloop(const AtomSpecies& species, double omega, const BroadeningPolicy& policy) {
  const double a = alpha(species, omega, policy);
  return kOneLoopPrefactor * omega * omega * omega * a * a;
}

std::vector<DeltaLine> resonant_lines(const AtomSpecies& species, bool include_pseudo) {
  const auto& lines = species.lines();
  std::vector<DeltaLine> out;
  for (Eigen::Index i = 0; i < lines.size(); ++i) {
    if (lines.kind[i] == LineKind::pseudo && !include_pseudo) continue;
    // f/dE > 0 for upward and downward lines alike.
    out.push_back({std::abs(lines.delta_e(i)), 0.5 * std::numbers::pi * lines.f(i) / lines.delta_e(i)});
  }
  return out;
}

double ImAlphaMeasure::integrate(const std::function<double(double)>& g, double lo, double hi,
                                 double rel_tol) const {
  if (!(hi >= lo) || lo < 0.0) throw DomainError("integration range must satisfy 0 <= lo <= hi");
  double total = 0.0;
  for (const auto& line : delta_lines) {
    if (line.omega >= lo && line.omega <= hi) total += line.weight * g(line.omega);
  }
  if (smooth && hi > lo) {
    std::vector<double> breaks;
    for (double p : poles) {
      if (p > lo && p < hi) breaks.push_back(p);
    }
    total += integrate_adaptive([&](double w) { return smooth(w) * g(w); }, lo, hi, rel_tol,
                                20000, breaks)
                 .value;
  }
  return total;
}

ImAlphaMeasure im_alpha_measure(const AtomSpecies& species, const BroadeningPolicy& policy,
                                EvaluationMode mode, bool include_pseudo) {
  ImAlphaMeasure m;
  m.broadened = policy.broadened();
  m.pole_floor = lowest_resonance(species);
  const auto& de = species.lines().delta_e;
  for (Eigen::Index i = 0; i < de.size(); ++i) m.poles.push_back(std::abs(de(i)));
  if (mode == EvaluationMode::tree_only) m.pole_floor = std::numeric_limits<double>::infinity();
  if (mode != EvaluationMode::tree_only) {
    m.smooth = [species, policy](double omega) { return im_alpha_oneloop(species, omega, policy); };
  } else {
    m.smooth = [](double) { return 0.0; };
  }
  if (mode != EvaluationMode::oneloop_only) m.delta_lines = resonant_lines(species, include_pseudo);
  return m;
}

ImAlphaMeasure constant_alpha_measure(double alpha0) {
  ImAlphaMeasure m;
  const double scale = kOneLoopPrefactor * alpha0 * alpha0;
  m.smooth = [scale](double omega) { return scale * omega * omega * omega; };
  return m;
}

}  // namespace thermofriction
