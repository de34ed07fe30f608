#pragma once

#include <functional>
#include <optional>
#include <string>

#include "thermofriction/atomdata.hpp"
#include "thermofriction/dielectric.hpp"
#include "thermofriction/polarizability.hpp"
#include "thermofriction/thermal_quadrature.hpp"

namespace thermofriction {

/// Whether the result honoured the resonance exclusion (strict) or relied on
/// Lorentzian broadening of the one-loop poles.
enum class Validity { strict, broadened };

std::string_view to_string(Validity v);
std::string_view to_string(EvaluationMode m);

/// A friction coefficient split into its tree-level and one-loop parts.
/// Values are stored in atomic units (m_e E_h / hbar); SI accessors in kg/s.
struct FrictionResult {
  double eta_au = 0.0;
  double tree_au = 0.0;
  double oneloop_au = 0.0;
  double temperature = 0.0;  // K
  Validity validity = Validity::strict;
  std::optional<double> distance_m;
  std::string material;

  double eta_si() const;
  double tree_si() const;
  double oneloop_si() const;
};

struct FrictionOptions {
  EvaluationMode mode = EvaluationMode::total;
  BroadeningPolicy policy;
  QuadratureSpec quadrature;
  bool include_pseudo_lines = false;
};

/// Fraction of the lowest one-loop resonance that bounds the strict thermal window.
inline constexpr double kResonanceGuard = 0.95;

using SurfaceResponseFn = std::function<double(double)>;

/// Blackbody friction for an arbitrary Im alpha measure.
FrictionResult eta_bb(const ImAlphaMeasure& measure, double temperature,
                      const QuadratureSpec& spec = {});
FrictionResult eta_bb(const AtomSpecies& species, double temperature,
                      const FrictionOptions& options = {});

/// Non-contact friction at distance_m from a surface with the given response
/// Im[(eps-1)/(eps+1)]; features are frequencies (a.u.) where it peaks.
FrictionResult eta_qf(const ImAlphaMeasure& measure, const SurfaceResponseFn& response,
                      double temperature, double distance_m, const QuadratureSpec& spec = {},
                      const std::vector<double>& features = {});
FrictionResult eta_qf(const AtomSpecies& species, const DielectricModel& material,
                      double temperature, double distance_m, const FrictionOptions& options = {});

/// Attenuation time m_A / eta_BB in seconds; +infinity when eta_BB vanishes.
double tau_bb(const AtomSpecies& species, double temperature, const FrictionOptions& options = {});

/// gamma0 = (eta_QF / m_A) (Z / a0)^5 in 1/s, with its tree-level and one-loop parts.
struct DampingConstant {
  double gamma0 = 0.0;
  double tree = 0.0;
  double oneloop = 0.0;
  double temperature = 0.0;
  Validity validity = Validity::strict;
};

DampingConstant gamma0(const AtomSpecies& species, const DielectricModel& material,
                       double temperature, const FrictionOptions& options = {});

/// Low-temperature closed forms evaluated independently in the SI and the
/// atomic-unit arrangement; both in kg/s.
struct ClosedForm {
  double si_form = 0.0;
  double atomic_form = 0.0;
};

ClosedForm eta_bb_asymptotic(double alpha0_au, double temperature);
ClosedForm eta_bb_asymptotic(const AtomSpecies& species, double temperature);
ClosedForm eta_qf_asymptotic(double alpha0_au, double omega0_au, double temperature,
                             double distance_m);
ClosedForm eta_qf_asymptotic(const AtomSpecies& species, const DielectricModel& material,
                             double temperature, double distance_m);

/// Temperature (K) at which the blackbody tree-level part first exceeds the
/// one-loop part, searched on [t_lo, t_hi]. Requires a broadened policy.
double locate_tree_crossover(const AtomSpecies& species, double t_lo, double t_hi,
                             const FrictionOptions& options);

}  // namespace thermofriction
