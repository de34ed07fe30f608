#pragma once

#include <numbers>
#include <string_view>

namespace thermofriction {

/// CODATA-2018 constants in SI. The Bohr radius, the Hartree energy and the
/// vacuum permittivity are derived from the primary values so that every
/// atomic-unit identity holds to rounding.
struct PhysicalConstants {
  double c;
  double hbar;
  double e_charge;
  double m_e;
  double eps0;
  double k_B;
  double alpha_fs;
  double a0;
  double hartree;
  double amu;
};

namespace detail {
constexpr PhysicalConstants make_codata2018() {
  constexpr double c = 299792458.0;
  constexpr double hbar = 1.054571817e-34;
  constexpr double e_charge = 1.602176634e-19;
  constexpr double m_e = 9.1093837015e-31;
  constexpr double k_B = 1.380649e-23;
  constexpr double alpha_fs = 7.2973525693e-3;
  constexpr double amu = 1.66053906660e-27;
  return PhysicalConstants{
      .c = c,
      .hbar = hbar,
      .e_charge = e_charge,
      .m_e = m_e,
      .eps0 = e_charge * e_charge / (4.0 * std::numbers::pi * alpha_fs * hbar * c),
      .k_B = k_B,
      .alpha_fs = alpha_fs,
      .a0 = hbar / (m_e * c * alpha_fs),
      .hartree = alpha_fs * alpha_fs * m_e * c * c,
      .amu = amu,
  };
}
}  // namespace detail

inline constexpr PhysicalConstants kCodata2018 = detail::make_codata2018();
inline constexpr std::string_view kConstantsVersion = "CODATA-2018";

/// Speed of light in atomic units.
inline constexpr double kSpeedOfLightAu = 1.0 / kCodata2018.alpha_fs;

enum class Kind {
  energy,
  angular_frequency,
  polarizability,
  friction_coefficient,
  length,
  mass,
  temperature,
  rate,
};

enum class System { si, atomic };

struct Quantity {
  double value = 0.0;
  Kind kind = Kind::energy;
  System system = System::si;
};

/// SI magnitude of one atomic unit of the given kind.
double atomic_unit(Kind kind);

Quantity to_atomic(const Quantity& q);
Quantity from_atomic(const Quantity& q);

inline double si_to_au(double value, Kind kind) { return value / atomic_unit(kind); }
inline double au_to_si(double value, Kind kind) { return value * atomic_unit(kind); }

Kind kind_from_string(std::string_view name);
std::string_view to_string(Kind kind);

/// 1/(k_B T) in inverse hartree.
double thermal_beta(double temperature_kelvin);
/// 1/(k_B T) in inverse joule.
double thermal_beta_si(double temperature_kelvin);

}  // namespace thermofriction
