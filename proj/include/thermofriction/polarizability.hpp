#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <vector>

#include "thermofriction/atomdata.hpp"

namespace thermofriction {

/// Treatment of the poles of alpha(omega) when it is squared in the one-loop
/// term. With Mode::none, evaluation near a resonance is refused.
struct BroadeningPolicy {
  enum class Mode { none, lorentzian };
  Mode mode = Mode::none;
  double gamma = 0.0;

  static BroadeningPolicy none() { return {}; }
  static BroadeningPolicy lorentzian(double gamma = 1e-6);

  bool broadened() const { return mode == Mode::lorentzian; }
};

/// Exclusion half-width (a.u.) around each resonance for unbroadened evaluation.
inline constexpr double kPoleExclusion = 1e-9;

enum class EvaluationMode { total, tree_only, oneloop_only };

/// Sum over states f_m / (dE_m^2 - z^2) for a real or complex frequency z.
template <typename Scalar>
Scalar sum_over_states(const LineTable& lines, const Scalar& z) {
  const Scalar z2 = z * z;
  Scalar total(0);
  for (Eigen::Index i = 0; i < lines.size(); ++i) {
    total += lines.f(i) / (lines.delta_e(i) * lines.delta_e(i) - z2);
  }
  return total;
}

/// Real dynamic polarizability (a.u.) at omega >= 0.
double alpha(const AtomSpecies& species, double omega, const BroadeningPolicy& policy = {});

/// One-loop density (2/3) (omega/c)^3 alpha(omega)^2 in atomic units.
double im_alpha_oneloop(const AtomSpecies& species, double omega,
                        const BroadeningPolicy& policy = {});

struct DeltaLine {
  double omega = 0.0;   // resonance frequency, a.u.
  double weight = 0.0;  // a.u. polarizability x frequency
};

/// Tree-level delta-lines: omega_m = |dE_m|, weight = (pi/2) f_m / dE_m.
std::vector<DeltaLine> resonant_lines(const AtomSpecies& species, bool include_pseudo = false);

/// Im alpha as a measure on omega >= 0: a smooth one-loop density plus
/// weighted delta-lines. pole_floor is the lowest frequency at which the
/// smooth part becomes singular (infinity for synthetic measures).
struct ImAlphaMeasure {
  std::function<double(double)> smooth;
  std::vector<DeltaLine> delta_lines;
  double pole_floor = std::numeric_limits<double>::infinity();
  std::vector<double> poles;
  bool broadened = false;

  /// Integral of g against the measure over [lo, hi].
  double integrate(const std::function<double(double)>& g, double lo, double hi,
                   double rel_tol = 1e-10) const;
};

ImAlphaMeasure im_alpha_measure(const AtomSpecies& species, const BroadeningPolicy& policy = {},
                                EvaluationMode mode = EvaluationMode::total,
                                bool include_pseudo = false);

/// Line-free measure with the low-frequency density (2/3)(omega/c)^3 alpha0^2,
/// i.e. a frequency-independent polarizability.
ImAlphaMeasure constant_alpha_measure(double alpha0);

}  // namespace thermofriction
