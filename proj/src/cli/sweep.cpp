#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "thermofriction/cli.hpp"
#include "thermofriction/errors.hpp"
#include "thermofriction/friction.hpp"
#include "thermofriction/units.hpp"

namespace thermofriction::cli {

namespace {

bool needs_material(const SweepConfig& c) {
  return c.command == Command::qf || c.command == Command::gamma0 ||
         (c.command == Command::compare_asymptotic && c.compare == Command::qf);
}

bool needs_distance(const SweepConfig& c) {
  return c.command == Command::qf ||
         (c.command == Command::compare_asymptotic && c.compare == Command::qf);
}

void invalid(const std::string& field, const std::string& why) {
  throw ValidationError("--" + field + ": " + why);
}

// Runs body(i) for i in [0, n) on up to jobs threads; the first exception wins.
template <typename Body>
void parallel_for(std::size_t n, int jobs, Body body) {
  const auto workers = std::min(static_cast<std::size_t>(std::max(jobs, 1)), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = n;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

FrictionOptions friction_options(const SweepConfig& c) {
  FrictionOptions o;
  o.mode = c.mode;
  o.quadrature.rel_tol = c.rel_tol;
  if (c.broaden) o.policy = BroadeningPolicy::lorentzian(*c.broaden);
  return o;
}

std::string describe(const SweepConfig& c) {
  std::ostringstream s;
  s.precision(9);
  if (c.command == Command::im_alpha) {
    s << "omega_min=" << c.omega_min << " omega_max=" << c.omega_max;
  } else {
    s << "t_min=" << c.t_min << " t_max=" << c.t_max;
  }
  s << " points=" << c.points << " spacing=" << (c.spacing == Spacing::log ? "log" : "linear");
  if (needs_distance(c)) s << " distance_m=" << c.distance_m;
  s << " mode=" << to_string(c.mode) << " rel_tol=" << c.rel_tol;
  if (c.broaden) s << " broaden=" << *c.broaden;
  if (c.command == Command::compare_asymptotic) s << " compare=" << to_string(c.compare);
  return s.str();
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::bb:
      return "bb";
    case Command::qf:
      return "qf";
    case Command::gamma0:
      return "gamma0";
    case Command::im_alpha:
      return "im-alpha";
    case Command::compare_asymptotic:
      return "compare-asymptotic";
  }
  return "unknown";
}

void SweepConfig::validate() const {
  if (atom.empty()) invalid("atom", "an atom dataset is required");
  if (needs_material(*this) && material.empty()) invalid("material", "a material dataset is required");
  if (points < 1) invalid("points", "must be at least 1");
  if (command == Command::im_alpha) {
    if (!(omega_min >= 0.0)) invalid("omega-min", "must be >= 0");
    if (!(omega_max > omega_min) && !(points == 1 && omega_max == omega_min)) {
      invalid("omega-max", "must exceed --omega-min");
    }
    if (spacing == Spacing::log && !(omega_min > 0.0)) invalid("omega-min", "log spacing needs a positive start");
  } else {
    if (!(t_min > 0.0)) invalid("t-min", "temperature must be positive");
    if (points == 1) {
      if (t_max != t_min) invalid("points", "a single point requires t_min == t_max");
    } else if (!(t_min < t_max)) {
      invalid("t-max", "must exceed --t-min");
    }
  }
  if (needs_distance(*this) && !(distance_m > 0.0)) invalid("distance", "must be positive");
  if (command == Command::compare_asymptotic && compare != Command::bb && compare != Command::qf) {
    invalid("kind", "must be bb or qf");
  }
  if (command == Command::compare_asymptotic && broaden) {
    invalid("broaden", "the closed forms compare against strict evaluations only");
  }
  if (broaden && !(*broaden > 0.0)) invalid("broaden", "linewidth must be positive");
  if (!(rel_tol > 0.0 && rel_tol < 1e-2)) invalid("rel-tol", "must lie in (0, 1e-2)");
  if (jobs < 1) invalid("jobs", "must be at least 1");
}

std::vector<double> sweep_grid(double lo, double hi, int points, Spacing spacing) {
  if (points == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    out[static_cast<std::size_t>(i)] =
        spacing == Spacing::log ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
  }
  out.back() = hi;
  return out;
}

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("THERMOFRICTION_DATA_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return THERMOFRICTION_DEFAULT_DATA_DIR;
}

std::filesystem::path resolve_dataset(const std::string& name_or_path, std::string_view subdir) {
  const std::filesystem::path direct(name_or_path);
  if (std::filesystem::is_regular_file(direct)) return direct;
  if (!direct.has_parent_path() && !direct.has_extension()) {
    auto candidate = data_directory() / subdir / (name_or_path + ".toml");
    if (std::filesystem::is_regular_file(candidate)) return candidate;
  }
  throw ValidationError("dataset '" + name_or_path + "' not found (looked in " +
                        (data_directory() / subdir).string() + ")");
}

Report evaluate(const SweepConfig& config) {
  config.validate();
  Report report;
  report.meta.emplace_back("tool", std::string("thermofriction ") + THERMOFRICTION_VERSION);
  report.meta.emplace_back("constants", std::string(kConstantsVersion));
  report.meta.emplace_back("command", std::string(to_string(config.command)));

  const auto atom_path = resolve_dataset(config.atom, "atoms");
  const auto species = load_atom_file(atom_path);
  report.meta.emplace_back("atom", atom_path.string() + " sha256=" + file_sha256(atom_path));

  std::optional<DielectricModel> material;
  if (needs_material(config)) {
    const auto path = resolve_dataset(config.material, "materials");
    material = load_material_file(path);
    report.meta.emplace_back("material", path.string() + " sha256=" + file_sha256(path));
  }
  report.meta.emplace_back("config", describe(config));
  report.meta.emplace_back("policy", config.broaden ? "lorentzian (broadened, outside strict validity)" : "none");

  const auto options = friction_options(config);
  auto& block = report.rows;

  if (config.command == Command::im_alpha) {
    const auto grid = sweep_grid(config.omega_min, config.omega_max, config.points, config.spacing);
    const auto measure = im_alpha_measure(species, options.policy, config.mode);
    block.columns = {"omega_au", "im_alpha_smooth_au"};
    block.rows.resize(grid.size());
    parallel_for(grid.size(), config.jobs, [&](std::size_t i) {
      block.rows[i] = {grid[i], measure.smooth(grid[i])};
    });
    Block lines{"resonant lines", {"omega_m_au", "weight_au"}, {}};
    for (const auto& l : measure.delta_lines) lines.rows.push_back({l.omega, l.weight});
    report.lines = std::move(lines);
    return report;
  }

  const auto grid = sweep_grid(config.t_min, config.t_max, config.points, config.spacing);
  block.rows.resize(grid.size());

  switch (config.command) {
    case Command::bb:
      block.columns = {"T_K",          "eta_bb_si_kg_per_s", "eta_bb_au", "tau_bb_s",
                       "tree_part_si", "oneloop_part_si",    "validity"};
      parallel_for(grid.size(), config.jobs, [&](std::size_t i) {
        const auto r = eta_bb(species, grid[i], options);
        const double tau = r.eta_si() > 0.0 ? species.mass_kg() / r.eta_si()
                                            : std::numeric_limits<double>::infinity();
        block.rows[i] = {grid[i],       r.eta_si(),     r.eta_au,
                         tau,           r.tree_si(),    r.oneloop_si(),
                         std::string(to_string(r.validity))};
      });
      break;
    case Command::qf:
      block.columns = {"T_K",          "eta_qf_si_kg_per_s", "eta_qf_au", "tree_part_si",
                       "oneloop_part_si", "validity",         "Z_m",       "material"};
      parallel_for(grid.size(), config.jobs, [&](std::size_t i) {
        const auto r = eta_qf(species, *material, grid[i], config.distance_m, options);
        block.rows[i] = {grid[i],         r.eta_si(),
                         r.eta_au,        r.tree_si(),
                         r.oneloop_si(),  std::string(to_string(r.validity)),
                         config.distance_m, material->name()};
      });
      break;
    case Command::gamma0:
      block.columns = {"T_K", "gamma0_per_s", "tree_part", "oneloop_part", "validity"};
      parallel_for(grid.size(), config.jobs, [&](std::size_t i) {
        const auto d = gamma0(species, *material, grid[i], options);
        block.rows[i] = {grid[i], d.gamma0, d.tree, d.oneloop, std::string(to_string(d.validity))};
      });
      break;
    case Command::compare_asymptotic:
      block.columns = {"T_K", "eta_numeric_si", "eta_asymptotic_si", "ratio"};
      parallel_for(grid.size(), config.jobs, [&](std::size_t i) {
        double numeric = 0.0;
        double closed = 0.0;
        if (config.compare == Command::bb) {
          numeric = eta_bb(species, grid[i], options).eta_si();
          closed = eta_bb_asymptotic(species, grid[i]).si_form;
        } else {
          numeric = eta_qf(species, *material, grid[i], config.distance_m, options).eta_si();
          closed = eta_qf_asymptotic(species, *material, grid[i], config.distance_m).si_form;
        }
        block.rows[i] = {grid[i], numeric, closed, numeric / closed};
      });
      break;
    case Command::im_alpha:
      break;
  }
  return report;
}

}  // namespace thermofriction::cli
