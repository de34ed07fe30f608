#include "thermofriction/dielectric.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "thermofriction/config_text.hpp"
#include "thermofriction/errors.hpp"
#include "thermofriction/units.hpp"

namespace thermofriction {

namespace {

constexpr double kCmPerHartree = 1.0 / (2.0 * std::numbers::pi * kCodata2018.hbar * kCodata2018.c /
                                        kCodata2018.hartree * 100.0);

void check_frequency(double omega) {
  if (!(omega >= 0.0) || !std::isfinite(omega)) throw DomainError("frequency must be finite and >= 0");
}

}  // namespace

void LorentzParameters::validate() const {
  if (!(eps_inf >= 1.0)) throw ValidationError("eps_inf must be >= 1");
  if (strength.size() != omega.size() || omega.size() != gamma.size()) {
    throw ValidationError("oscillator columns differ in length");
  }
  if (!(strength > 0.0).all() || !(omega > 0.0).all() || !(gamma > 0.0).all()) {
    throw ValidationError("oscillator strength, frequency and damping must be positive");
  }
}

DielectricModel::DielectricModel(std::string name, LorentzParameters params)
    : name_(std::move(name)), has_temperatures_(false) {
  params.validate();
  table_.emplace_back(0.0, std::move(params));
}

DielectricModel::DielectricModel(std::string name,
                                 std::vector<std::pair<double, LorentzParameters>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  if (table_.empty()) throw ValidationError("material has no parameter rows");
  std::sort(table_.begin(), table_.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 0; i < table_.size(); ++i) {
    const auto& [t, p] = table_[i];
    if (!(t > 0.0)) throw ValidationError("tabulated temperatures must be positive");
    if (i > 0 && t == table_[i - 1].first) throw ValidationError("duplicate temperature row");
    p.validate();
    if (p.strength.size() != table_.front().second.strength.size()) {
      throw ValidationError("every temperature row must list the same number of oscillators");
    }
  }
}

std::pair<double, double> DielectricModel::temperature_range() const {
  if (!has_temperatures_) return {0.0, std::numeric_limits<double>::infinity()};
  return {table_.front().first, table_.back().first};
}

LorentzParameters DielectricModel::parameters_at(double temperature) const {
  if (!(temperature > 0.0)) throw DomainError("temperature must be positive");
  if (!has_temperatures_) return table_.front().second;
  const auto [lo, hi] = temperature_range();
  if (temperature < lo || temperature > hi) {
    std::ostringstream msg;
    msg << "temperature " << temperature << " K is outside the tabulated range [" << lo << ", "
        << hi << "] K of material " << name_;
    throw ExtrapolationError(msg.str(), temperature);
  }
  auto upper = std::lower_bound(table_.begin(), table_.end(), temperature,
                                [](const auto& row, double t) { return row.first < t; });
  if (upper->first == temperature) return upper->second;
  const auto lower = std::prev(upper);
  const double w = (temperature - lower->first) / (upper->first - lower->first);
  const auto& a = lower->second;
  const auto& b = upper->second;
  LorentzParameters p;
  p.eps_inf = (1.0 - w) * a.eps_inf + w * b.eps_inf;
  p.strength = (1.0 - w) * a.strength + w * b.strength;
  p.omega = (1.0 - w) * a.omega + w * b.omega;
  p.gamma = (1.0 - w) * a.gamma + w * b.gamma;
  return p;
}

std::complex<double> epsilon(const DielectricModel& model, double omega, double temperature) {
  check_frequency(omega);
  return lorentz_epsilon(model.parameters_at(temperature), omega);
}

double surface_response(const DielectricModel& model, double omega, double temperature) {
  return surface_response(epsilon(model, omega, temperature));
}

double characteristic_frequency(const LorentzParameters& p) {
  const double eps0 = p.static_permittivity();
  const double slope = 2.0 * (p.strength * p.gamma / p.omega.square()).sum() / ((eps0 + 1.0) * (eps0 + 1.0));
  return 1.0 / slope;
}

double characteristic_frequency(const DielectricModel& model, double temperature) {
  return characteristic_frequency(model.parameters_at(temperature));
}

std::vector<double> response_features(const LorentzParameters& p, double omega_max) {
  std::vector<double> out;
  for (Eigen::Index j = 0; j < p.omega.size(); ++j) {
    if (p.omega(j) < omega_max) out.push_back(p.omega(j));
  }
  // Surface modes sit between the oscillator resonances; locate maxima on a
  // log grid fine enough to land inside peaks a few damping widths wide.
  constexpr int kSamples = 4000;
  const double lo = 1e-4 * p.omega.minCoeff();
  if (!(omega_max > lo)) return out;
  const double ratio = std::pow(omega_max / lo, 1.0 / (kSamples - 1));
  double r_prev = surface_response(lorentz_epsilon(p, lo));
  double w = lo * ratio;
  double r = surface_response(lorentz_epsilon(p, w));
  for (int i = 2; i < kSamples; ++i) {
    const double w_next = w * ratio;
    const double r_next = surface_response(lorentz_epsilon(p, w_next));
    if (r > r_prev && r >= r_next) out.push_back(w);
    r_prev = r;
    w = w_next;
    r = r_next;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

double convert_frequency(double value, const std::string& units) {
  return units == "atomic" ? value : value / kCmPerHartree;
}

LorentzParameters read_parameters(const ConfigDocument& doc, const std::string& prefix,
                                  const ConfigSection& table, const std::string& units) {
  LorentzParameters p;
  p.eps_inf = table.number("eps_inf");
  const auto rows = doc.array(prefix + ".oscillator");
  if (rows.empty()) throw ValidationError("section [" + prefix + "] has no oscillators");
  const auto n = static_cast<Eigen::Index>(rows.size());
  p.strength.resize(n);
  p.omega.resize(n);
  p.gamma.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto& row = *rows[static_cast<std::size_t>(j)];
    p.strength(j) = row.number("S");
    p.omega(j) = convert_frequency(row.number("omega"), units);
    p.gamma(j) = convert_frequency(row.number("gamma"), units);
  }
  p.validate();
  return p;
}

double parse_temperature_tag(const std::string& name, int line) {
  // "temperature.T=298"
  const std::string_view tag = std::string_view(name).substr(std::string_view("temperature.T=").size());
  double t = 0.0;
  const auto [ptr, ec] = std::from_chars(tag.data(), tag.data() + tag.size(), t);
  if (ec != std::errc() || ptr != tag.data() + tag.size()) {
    throw FormatError("cannot parse temperature in [" + name + "]", line);
  }
  return t;
}

}  // namespace

DielectricModel load_material(std::string_view text) {
  const auto doc = ConfigDocument::parse(text);
  const auto* meta = doc.find_table("meta");
  if (meta == nullptr) throw ValidationError("missing [meta] section");
  const auto name = meta->string("name");
  const auto units = meta->string("units");
  if (units != "atomic" && units != "cm-1") {
    throw ValidationError("unsupported unit convention '" + units + "' (expected \"atomic\" or \"cm-1\")");
  }

  std::vector<std::pair<double, LorentzParameters>> rows;
  const ConfigSection* fixed = nullptr;
  for (const auto& s : doc.sections()) {
    const bool is_temperature = s.name.starts_with("temperature.T=");
    if (s.name == "meta" && !s.is_array_element) continue;
    if (s.name == "parameters" && !s.is_array_element) {
      fixed = &s;
      continue;
    }
    if (s.is_array_element && (s.name == "parameters.oscillator" ||
                               (is_temperature && s.name.ends_with(".oscillator")))) {
      const auto owner = s.name.substr(0, s.name.size() - std::string_view(".oscillator").size());
      if (doc.find_table(owner) == nullptr) {
        throw FormatError("oscillator row without a [" + owner + "] table", s.line);
      }
      continue;
    }
    if (is_temperature && !s.is_array_element) {
      rows.emplace_back(parse_temperature_tag(s.name, s.line), read_parameters(doc, s.name, s, units));
      continue;
    }
    throw FormatError("unexpected section [" + s.name + "]", s.line);
  }
  if (fixed != nullptr) {
    if (!rows.empty()) throw ValidationError("material mixes [parameters] with temperature rows");
    return DielectricModel(name, read_parameters(doc, "parameters", *fixed, units));
  }
  if (rows.empty()) throw ValidationError("material has no parameter rows");
  return DielectricModel(name, std::move(rows));
}

DielectricModel load_material_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open material file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return load_material(buffer.str());
  } catch (const FormatError& e) {
    throw FormatError::annotated(path.string(), e);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

}  // namespace thermofriction
