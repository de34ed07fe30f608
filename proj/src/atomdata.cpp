#include "thermofriction/atomdata.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "thermofriction/config_text.hpp"
#include "thermofriction/errors.hpp"
#include "thermofriction/units.hpp"

namespace thermofriction {

namespace {

LineTable make_table(const std::vector<TransitionLine>& lines) {
  if (lines.empty()) throw ValidationError("transition table is empty");
  LineTable t;
  t.delta_e.resize(static_cast<Eigen::Index>(lines.size()));
  t.f.resize(t.delta_e.size());
  t.kind.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (!std::isfinite(l.delta_e) || !std::isfinite(l.f)) {
      throw ValidationError("line " + std::to_string(i + 1) + " has a non-finite value");
    }
    if (l.delta_e == 0.0) throw ValidationError("line " + std::to_string(i + 1) + " has delta_e = 0");
    if (!(l.f / l.delta_e > 0.0)) {
      throw ValidationError("line " + std::to_string(i + 1) +
                            ": oscillator strength must be nonzero and share the sign of delta_e");
    }
    const auto ii = static_cast<Eigen::Index>(i);
    t.delta_e(ii) = l.delta_e;
    t.f(ii) = l.f;
    t.kind.push_back(l.kind);
  }
  std::vector<double> sorted(t.delta_e.begin(), t.delta_e.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("two lines share the same delta_e");
  }
  return t;
}

std::vector<TransitionLine> to_lines(const LineTable& t) {
  std::vector<TransitionLine> out;
  out.reserve(static_cast<std::size_t>(t.size()));
  for (Eigen::Index i = 0; i < t.size(); ++i) out.push_back({t.delta_e(i), t.f(i), t.kind[i]});
  return out;
}

}  // namespace

AtomSpecies::AtomSpecies(std::string name, std::string state_label, double mass_amu,
                         int n_electrons, const std::vector<TransitionLine>& lines,
                         std::optional<double> alpha0_reference)
    : name_(std::move(name)),
      state_label_(std::move(state_label)),
      mass_amu_(mass_amu),
      n_electrons_(n_electrons),
      lines_(make_table(lines)),
      alpha0_reference_(alpha0_reference) {
  if (!(mass_amu_ > 0.0)) throw ValidationError("atomic mass must be positive");
  if (n_electrons_ < 1) throw ValidationError("electron count must be at least 1");
}

double AtomSpecies::mass_kg() const { return mass_amu_ * kCodata2018.amu; }

double AtomSpecies::mass_au() const { return si_to_au(mass_kg(), Kind::mass); }

AtomSpecies AtomSpecies::scaled(double factor) const {
  if (!(factor > 0.0)) throw DomainError("scale factor must be positive");
  auto lines = to_lines(lines_);
  for (auto& l : lines) l.f *= factor;
  return AtomSpecies(name_, state_label_, mass_amu_, n_electrons_, lines);
}

AtomSpecies AtomSpecies::with_mass(double mass_amu) const {
  return AtomSpecies(name_, state_label_, mass_amu, n_electrons_, to_lines(lines_),
                     alpha0_reference_);
}

std::string AtomSpecies::label() const { return name_ + "(" + state_label_ + ")"; }

double trk_sum(const AtomSpecies& species) { return species.lines().f.sum(); }

double static_polarizability(const AtomSpecies& species) {
  const auto& t = species.lines();
  return (t.f / t.delta_e.square()).sum();
}

double lowest_resonance(const AtomSpecies& species) { return species.lines().delta_e.abs().minCoeff(); }

AtomSpecies load_atom(std::string_view text) {
  const auto doc = ConfigDocument::parse(text);
  const auto* meta = doc.find_table("meta");
  if (meta == nullptr) throw ValidationError("missing [meta] section");

  const auto units = meta->string("units");
  if (units != "atomic") {
    throw ValidationError("unsupported unit convention '" + units + "' (expected \"atomic\")");
  }
  const double mass = meta->number("mass_amu");
  const double n_el = meta->number("n_electrons");
  if (n_el != std::floor(n_el) || n_el < 1) {
    throw ValidationError("n_electrons must be a positive integer");
  }

  for (const auto& s : doc.sections()) {
    if (s.name != "meta" && s.name != "line") {
      throw FormatError("unknown section [" + s.name + "]", s.line);
    }
    if (s.name == "line" && !s.is_array_element) {
      throw FormatError("lines must be declared as [[line]]", s.line);
    }
  }

  std::vector<TransitionLine> lines;
  for (const auto* s : doc.array("line")) {
    TransitionLine l;
    l.delta_e = s->number("delta_e");
    l.f = s->number("f");
    const auto kind = s->optional_string("kind").value_or("discrete");
    if (kind == "discrete") {
      l.kind = LineKind::discrete;
    } else if (kind == "pseudo") {
      l.kind = LineKind::pseudo;
    } else {
      throw FormatError("line kind must be \"discrete\" or \"pseudo\"", s->line);
    }
    lines.push_back(l);
  }

  AtomSpecies species(meta->string("name"), meta->string("state"), mass, static_cast<int>(n_el),
                      lines, meta->optional_number("alpha0_reference"));

  const double trk = trk_sum(species);
  const double n = species.n_electrons();
  if (std::abs(trk - n) > kSumRuleRejectTolerance * n) {
    std::ostringstream msg;
    msg << "TRK sum rule violated: sum f = " << trk << " for N = " << species.n_electrons();
    throw ValidationError(msg.str());
  }
  if (const auto& ref = species.alpha0_reference()) {
    const double a0 = static_polarizability(species);
    if (std::abs(a0 - *ref) > kAlpha0Tolerance * std::abs(*ref)) {
      std::ostringstream msg;
      msg << "static polarizability " << a0 << " a.u. disagrees with alpha0_reference " << *ref;
      throw ValidationError(msg.str());
    }
  }
  return species;
}

AtomSpecies load_atom_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open atom file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return load_atom(buffer.str());
  } catch (const FormatError& e) {
    throw FormatError::annotated(path.string(), e);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

}  // namespace thermofriction
