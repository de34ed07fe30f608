#pragma once

#include <Eigen/Core>
#include <complex>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace thermofriction {

/// eps(omega) = eps_inf + sum_j S_j w_j^2 / (w_j^2 - omega^2 - i g_j omega),
/// all frequencies in atomic units.
struct LorentzParameters {
  double eps_inf = 1.0;
  Eigen::ArrayXd strength;
  Eigen::ArrayXd omega;
  Eigen::ArrayXd gamma;

  void validate() const;
  double static_permittivity() const { return eps_inf + strength.sum(); }
};

/// Evaluates the Lorentz sum at a real or complex frequency. Signed real
/// frequencies are accepted here so that eps(-w) = conj(eps(w)) is checkable.
template <typename Scalar>
std::complex<double> lorentz_epsilon(const LorentzParameters& p, const Scalar& omega) {
  using C = std::complex<double>;
  const C w(omega);
  C eps(p.eps_inf, 0.0);
  for (Eigen::Index j = 0; j < p.strength.size(); ++j) {
    const double wj2 = p.omega(j) * p.omega(j);
    eps += p.strength(j) * wj2 / (wj2 - w * w - C(0.0, p.gamma(j)) * w);
  }
  return eps;
}

/// Im[(eps - 1)/(eps + 1)].
inline double surface_response(std::complex<double> eps) {
  return std::imag((eps - 1.0) / (eps + 1.0));
}

class DielectricModel {
 public:
  /// Temperature-independent model.
  DielectricModel(std::string name, LorentzParameters params);
  /// Rows of (temperature in K, parameters); linear interpolation in between.
  DielectricModel(std::string name, std::vector<std::pair<double, LorentzParameters>> table);

  const std::string& name() const { return name_; }
  bool temperature_dependent() const { return table_.size() > 1 || has_temperatures_; }
  std::pair<double, double> temperature_range() const;
  const std::vector<std::pair<double, LorentzParameters>>& table() const { return table_; }

  /// Parameters at T; throws ExtrapolationError outside the tabulated range.
  LorentzParameters parameters_at(double temperature) const;

 private:
  std::string name_;
  std::vector<std::pair<double, LorentzParameters>> table_;
  bool has_temperatures_ = true;
};

std::complex<double> epsilon(const DielectricModel& model, double omega, double temperature);
double surface_response(const DielectricModel& model, double omega, double temperature);

/// Omega_0 = 1 / (d surface_response / d omega at 0) = (eps(0)+1)^2 / (2 sum S_j g_j / w_j^2).
double characteristic_frequency(const LorentzParameters& params);
double characteristic_frequency(const DielectricModel& model, double temperature);

/// Frequencies (a.u.) where the surface response is sharply peaked below
/// omega_max: oscillator resonances and local maxima of the response.
std::vector<double> response_features(const LorentzParameters& params, double omega_max);

DielectricModel load_material(std::string_view text);
DielectricModel load_material_file(const std::filesystem::path& path);

}  // namespace thermofriction
