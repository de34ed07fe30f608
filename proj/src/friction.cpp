#include "thermofriction/friction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "thermofriction/errors.hpp"
#include "thermofriction/units.hpp"

namespace thermofriction {

namespace {

using std::numbers::pi;
constexpr const PhysicalConstants& k = kCodata2018;
constexpr double c_au = kSpeedOfLightAu;

struct ThermalWindow {
  QuadratureSpec spec;
  Validity validity = Validity::strict;
  std::vector<double> breakpoints;
};

// Strict evaluation integrates up to min(x_max, 0.95 beta omega_pole) and
// refuses once that cut falls below the certified minimum.
ThermalWindow thermal_window(const ImAlphaMeasure& m, double beta, double temperature,
                             const QuadratureSpec& spec) {
  spec.validate();
  ThermalWindow w{spec, m.broadened ? Validity::broadened : Validity::strict, {}};
  if (!m.broadened) {
    if (std::isfinite(m.pole_floor)) {
      const double cut = kResonanceGuard * beta * m.pole_floor;
      if (cut < kMinimumCutoff) {
        std::ostringstream msg;
        msg << "thermal window at T = " << temperature << " K reaches the resonance at "
            << m.pole_floor << " a.u.; a broadening policy is required";
        throw ValidityError(msg.str(), temperature);
      }
      w.spec.x_max = std::min(spec.x_max, cut);
    }
    return w;
  }
  // Lorentzian peaks of width gamma need seeded panels to be seen at all.
  const double omega_max = spec.x_max / beta;
  for (double p : m.poles) {
    if (p >= omega_max) continue;
    w.breakpoints.push_back(p);
    for (double offset = 1e-7; offset < 0.1 * p; offset *= 4.0) {
      w.breakpoints.push_back(p - offset);
      w.breakpoints.push_back(p + offset);
    }
  }
  return w;
}

double bb_prefactor(double beta) { return beta / (3.0 * pi * std::pow(c_au, 5)); }

double qf_prefactor(double beta, double distance_au) {
  return 3.0 * beta / (8.0 * pi * std::pow(distance_au, 5));
}

void check_temperature(double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw DomainError("temperature must be positive and finite");
  }
}

}  // namespace

std::string_view to_string(Validity v) { return v == Validity::strict ? "strict" : "broadened"; }

std::string_view to_string(EvaluationMode m) {
  switch (m) {
    case EvaluationMode::total:
      return "total";
    case EvaluationMode::tree_only:
      return "tree_only";
    case EvaluationMode::oneloop_only:
      return "oneloop_only";
  }
  return "unknown";
}

double FrictionResult::eta_si() const { return au_to_si(eta_au, Kind::friction_coefficient); }
double FrictionResult::tree_si() const { return au_to_si(tree_au, Kind::friction_coefficient); }
double FrictionResult::oneloop_si() const { return au_to_si(oneloop_au, Kind::friction_coefficient); }

FrictionResult eta_bb(const ImAlphaMeasure& measure, double temperature, const QuadratureSpec& spec) {
  check_temperature(temperature);
  const double beta = thermal_beta(temperature);
  const auto window = thermal_window(measure, beta, temperature, spec);

  const auto integrand = [&](double w) {
    const double w2 = w * w;
    return w2 * w2 * w * measure.smooth(w);
  };
  const double smooth = thermal_integral_detailed(integrand, beta, window.spec, window.breakpoints).value;

  double lines = 0.0;
  for (const auto& l : measure.delta_lines) {
    lines += l.weight * std::pow(l.omega, 5) * inverse_sinh_squared(0.5 * beta * l.omega);
  }

  FrictionResult r;
  r.temperature = temperature;
  r.validity = window.validity;
  r.oneloop_au = bb_prefactor(beta) * smooth;
  r.tree_au = bb_prefactor(beta) * lines;
  r.eta_au = r.tree_au + r.oneloop_au;
  return r;
}

FrictionResult eta_bb(const AtomSpecies& species, double temperature, const FrictionOptions& options) {
  const auto m = im_alpha_measure(species, options.policy, options.mode, options.include_pseudo_lines);
  return eta_bb(m, temperature, options.quadrature);
}

FrictionResult eta_qf(const ImAlphaMeasure& measure, const SurfaceResponseFn& response,
                      double temperature, double distance_m, const QuadratureSpec& spec,
                      const std::vector<double>& features) {
  check_temperature(temperature);
  if (!(distance_m > 0.0) || !std::isfinite(distance_m)) throw DomainError("distance must be positive");
  const double beta = thermal_beta(temperature);
  auto window = thermal_window(measure, beta, temperature, spec);
  const double omega_max = window.spec.x_max / beta;
  for (double f : features) {
    if (f < omega_max) window.breakpoints.push_back(f);
  }

  const auto integrand = [&](double w) { return measure.smooth(w) * response(w); };
  const double smooth = thermal_integral_detailed(integrand, beta, window.spec, window.breakpoints).value;

  double lines = 0.0;
  for (const auto& l : measure.delta_lines) {
    lines += l.weight * response(l.omega) * inverse_sinh_squared(0.5 * beta * l.omega);
  }

  const double pref = qf_prefactor(beta, si_to_au(distance_m, Kind::length));
  FrictionResult r;
  r.temperature = temperature;
  r.validity = window.validity;
  r.distance_m = distance_m;
  r.oneloop_au = pref * smooth;
  r.tree_au = pref * lines;
  r.eta_au = r.tree_au + r.oneloop_au;
  return r;
}

FrictionResult eta_qf(const AtomSpecies& species, const DielectricModel& material, double temperature,
                      double distance_m, const FrictionOptions& options) {
  check_temperature(temperature);
  const auto params = material.parameters_at(temperature);
  const auto m = im_alpha_measure(species, options.policy, options.mode, options.include_pseudo_lines);
  const double omega_max = options.quadrature.x_max / thermal_beta(temperature);
  auto r = eta_qf(
      m, [&params](double w) { return surface_response(lorentz_epsilon(params, w)); }, temperature,
      distance_m, options.quadrature, response_features(params, omega_max));
  r.material = material.name();
  return r;
}

double tau_bb(const AtomSpecies& species, double temperature, const FrictionOptions& options) {
  const auto r = eta_bb(species, temperature, options);
  const double eta = r.eta_si();
  if (eta <= 0.0) return std::numeric_limits<double>::infinity();
  return species.mass_kg() / eta;
}

DampingConstant gamma0(const AtomSpecies& species, const DielectricModel& material, double temperature,
                       const FrictionOptions& options) {
  constexpr double kNear = 100.0;
  constexpr double kFar = 1000.0;
  const auto near = eta_qf(species, material, temperature, kNear * k.a0, options);
  const auto far = eta_qf(species, material, temperature, kFar * k.a0, options);

  const double mass = species.mass_au();
  const auto rate = [mass](double eta_au, double z) { return eta_au / mass * std::pow(z, 5); };
  const double g_near = rate(near.eta_au, kNear);
  const double g_far = rate(far.eta_au, kFar);
  if (std::abs(g_near - g_far) > 1e-10 * std::abs(g_near)) {
    throw std::logic_error("gamma0 depends on the reference distance");
  }

  DampingConstant d;
  d.gamma0 = au_to_si(g_near, Kind::rate);
  d.tree = au_to_si(rate(near.tree_au, kNear), Kind::rate);
  d.oneloop = au_to_si(rate(near.oneloop_au, kNear), Kind::rate);
  d.temperature = temperature;
  d.validity = near.validity;
  return d;
}

ClosedForm eta_bb_asymptotic(double alpha0_au, double temperature) {
  const double beta = thermal_beta_si(temperature);
  const double a_si = au_to_si(alpha0_au, Kind::polarizability);
  ClosedForm out;
  out.si_form = 32.0 * std::pow(pi, 5) * a_si * a_si /
                (135.0 * std::pow(k.hbar, 7) * k.eps0 * k.eps0 * std::pow(k.c, 8) * std::pow(beta, 8));
  out.atomic_form = 512.0 * std::pow(pi, 7) * alpha0_au * alpha0_au /
                    (135.0 * std::pow(k.alpha_fs, 6) * k.hbar * std::pow(k.m_e, 6) *
                     std::pow(k.c, 14) * std::pow(beta, 8));
  return out;
}

ClosedForm eta_bb_asymptotic(const AtomSpecies& species, double temperature) {
  return eta_bb_asymptotic(static_polarizability(species), temperature);
}

ClosedForm eta_qf_asymptotic(double alpha0_au, double omega0_au, double temperature, double distance_m) {
  if (!(omega0_au > 0.0) || !std::isfinite(omega0_au)) throw DomainError("Omega0 must be positive and finite");
  if (!(distance_m > 0.0)) throw DomainError("distance must be positive");
  const double beta = thermal_beta_si(temperature);
  const double a_si = au_to_si(alpha0_au, Kind::polarizability);
  const double omega0 = au_to_si(omega0_au, Kind::angular_frequency);
  const double z5 = std::pow(distance_m, 5);
  ClosedForm out;
  out.si_form = pi * a_si * a_si /
                (60.0 * std::pow(k.hbar, 3) * k.eps0 * k.eps0 * std::pow(k.c, 3) * omega0 * z5 *
                 std::pow(beta, 4));
  out.atomic_form = 4.0 * std::pow(pi, 3) * std::pow(k.hbar, 3) * alpha0_au * alpha0_au /
                    (15.0 * std::pow(k.alpha_fs, 6) * std::pow(k.m_e, 6) * std::pow(k.c, 9) * omega0 *
                     z5 * std::pow(beta, 4));
  return out;
}

ClosedForm eta_qf_asymptotic(const AtomSpecies& species, const DielectricModel& material,
                             double temperature, double distance_m) {
  return eta_qf_asymptotic(static_polarizability(species),
                           characteristic_frequency(material, temperature), temperature, distance_m);
}

double locate_tree_crossover(const AtomSpecies& species, double t_lo, double t_hi,
                             const FrictionOptions& options) {
  if (!options.policy.broadened()) {
    throw DomainError("the tree/one-loop crossover lies outside strict validity; use a broadened policy");
  }
  if (!(t_lo > 0.0 && t_hi > t_lo)) throw DomainError("crossover bracket must satisfy 0 < t_lo < t_hi");
  FrictionOptions opts = options;
  opts.mode = EvaluationMode::total;
  const auto excess = [&](double t) {
    const auto r = eta_bb(species, t, opts);
    return r.tree_au - r.oneloop_au;
  };

  constexpr int kScan = 48;
  const double ratio = std::pow(t_hi / t_lo, 1.0 / kScan);
  double lo = t_lo;
  if (excess(lo) > 0.0) throw DomainError("tree-level part already dominates at the lower bracket");
  double hi = 0.0;
  for (int i = 1; i <= kScan; ++i) {
    const double t = t_lo * std::pow(ratio, i);
    if (excess(t) > 0.0) {
      hi = t;
      break;
    }
    lo = t;
  }
  if (hi == 0.0) throw DomainError("no tree/one-loop crossover inside the bracket");
  while (hi / lo - 1.0 > 1e-7) {
    const double mid = std::sqrt(lo * hi);
    (excess(mid) > 0.0 ? hi : lo) = mid;
  }
  return std::sqrt(lo * hi);
}

}  // namespace thermofriction
