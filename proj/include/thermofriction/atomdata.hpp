#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace thermofriction {

enum class LineKind { discrete, pseudo };

/// One dipole transition out of the reference state. delta_e = E_m - E in
/// hartree (positive upward); f is the oscillator strength and carries the
/// sign of delta_e.
struct TransitionLine {
  double delta_e = 0.0;
  double f = 0.0;
  LineKind kind = LineKind::discrete;
};

/// Column storage of a transition table so that sum-over-states expressions
/// vectorize.
struct LineTable {
  Eigen::ArrayXd delta_e;
  Eigen::ArrayXd f;
  std::vector<LineKind> kind;

  Eigen::Index size() const { return delta_e.size(); }
};

class AtomSpecies {
 public:
  AtomSpecies(std::string name, std::string state_label, double mass_amu, int n_electrons,
              const std::vector<TransitionLine>& lines,
              std::optional<double> alpha0_reference = std::nullopt);

  const std::string& name() const { return name_; }
  const std::string& state_label() const { return state_label_; }
  int n_electrons() const { return n_electrons_; }
  double mass_amu() const { return mass_amu_; }
  double mass_kg() const;
  /// Mass in electron masses.
  double mass_au() const;
  const LineTable& lines() const { return lines_; }
  TransitionLine line(Eigen::Index i) const { return {lines_.delta_e(i), lines_.f(i), lines_.kind[i]}; }
  const std::optional<double>& alpha0_reference() const { return alpha0_reference_; }

  /// Same species with every oscillator strength multiplied by factor > 0.
  AtomSpecies scaled(double factor) const;
  /// Same species with the nuclear mass replaced.
  AtomSpecies with_mass(double mass_amu) const;

  /// Short identifier such as "He(1s2s 3S)".
  std::string label() const;

 private:
  std::string name_;
  std::string state_label_;
  double mass_amu_;
  int n_electrons_;
  LineTable lines_;
  std::optional<double> alpha0_reference_;
};

double trk_sum(const AtomSpecies& species);

/// Sum of f_m / dE_m^2, the zero-frequency limit of the sum over states.
double static_polarizability(const AtomSpecies& species);

/// Smallest |delta_e| over all lines, pseudo-lines included.
double lowest_resonance(const AtomSpecies& species);

/// Relative sum-rule tolerance above which loading is refused.
inline constexpr double kSumRuleRejectTolerance = 0.05;
/// Relative tolerance on the optional reference static polarizability.
inline constexpr double kAlpha0Tolerance = 0.01;

AtomSpecies load_atom(std::string_view text);
AtomSpecies load_atom_file(const std::filesystem::path& path);

}  // namespace thermofriction
