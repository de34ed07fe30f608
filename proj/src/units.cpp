#include "thermofriction/units.hpp"

#include <array>
#include <string>

#include "thermofriction/errors.hpp"

namespace thermofriction {

namespace {

constexpr const PhysicalConstants& k = kCodata2018;

constexpr std::array<std::string_view, 8> kKindNames = {
    "energy", "angular_frequency", "polarizability", "friction_coefficient",
    "length", "mass",              "temperature",    "rate",
};

}  // namespace

double atomic_unit(Kind kind) {
  switch (kind) {
    case Kind::energy:
      return k.hartree;
    case Kind::angular_frequency:
    case Kind::rate:
      return k.hartree / k.hbar;
    case Kind::polarizability:
      return 4.0 * std::numbers::pi * k.eps0 * k.a0 * k.a0 * k.a0;
    case Kind::friction_coefficient:
      return k.m_e * k.hartree / k.hbar;
    case Kind::length:
      return k.a0;
    case Kind::mass:
      return k.m_e;
    case Kind::temperature:
      return k.hartree / k.k_B;
  }
  throw ConversionError("conversion not defined for quantity kind " +
                        std::to_string(static_cast<int>(kind)));
}

Quantity to_atomic(const Quantity& q) {
  if (q.system != System::si) throw ConversionError("to_atomic expects an SI quantity");
  return {si_to_au(q.value, q.kind), q.kind, System::atomic};
}

Quantity from_atomic(const Quantity& q) {
  if (q.system != System::atomic) throw ConversionError("from_atomic expects an atomic-unit quantity");
  return {au_to_si(q.value, q.kind), q.kind, System::si};
}

Kind kind_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<Kind>(i);
  }
  throw ConversionError("conversion not defined for quantity kind '" + std::string(name) + "'");
}

std::string_view to_string(Kind kind) {
  const auto i = static_cast<std::size_t>(kind);
  if (i >= kKindNames.size()) throw ConversionError("unknown quantity kind");
  return kKindNames[i];
}

double thermal_beta(double temperature_kelvin) {
  if (!(temperature_kelvin > 0.0)) throw DomainError("temperature must be positive");
  return k.hartree / (k.k_B * temperature_kelvin);
}

double thermal_beta_si(double temperature_kelvin) {
  if (!(temperature_kelvin > 0.0)) throw DomainError("temperature must be positive");
  return 1.0 / (k.k_B * temperature_kelvin);
}

}  // namespace thermofriction
