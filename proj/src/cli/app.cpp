#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>

#include "thermofriction/cli.hpp"
#include "thermofriction/errors.hpp"

namespace thermofriction::cli {

namespace {

void write_report(const Report& report, Format format, std::ostream& out) {
  if (format == Format::json) {
    write_json(report, out);
  } else {
    write_csv(report, out);
  }
}

}  // namespace

int execute(const SweepConfig& config, std::ostream& err) {
  std::filesystem::path partial;
  const auto discard = [&partial] {
    std::error_code ec;
    if (!partial.empty()) std::filesystem::remove(partial, ec);
  };
  try {
    const auto report = evaluate(config);
    if (config.output.empty()) {
      write_report(report, config.format, std::cout);
      return kExitOk;
    }
    partial = config.output;
    partial += ".partial";
    {
      std::ofstream out(partial, std::ios::binary | std::ios::trunc);
      if (!out) throw ValidationError("--output: cannot write " + config.output.string());
      write_report(report, config.format, out);
      if (!out.flush()) throw Error("write to " + partial.string() + " failed");
    }
    std::filesystem::rename(partial, config.output);
    return kExitOk;
  } catch (const ValidityError& e) {
    err << "validity guard: " << e.what() << " (offending T = " << e.temperature() << " K)\n";
    discard();
    return kExitValidity;
  } catch (const PoleProximityError& e) {
    err << "validity guard: " << e.what() << '\n';
    discard();
    return kExitValidity;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
  } catch (const FormatError& e) {
    err << "invalid input: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
  } catch (const ExtrapolationError& e) {
    err << "invalid input: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    discard();
    return kExitFailure;
  }
  discard();
  return kExitInvalid;
}

int run(int argc, char** argv) {
  CLI::App app{"Blackbody and non-contact atom friction from the gauge-invariant Im alpha"};
  app.require_subcommand(1);

  SweepConfig config;
  std::optional<double> single_t;
  std::string output;

  const std::map<std::string, EvaluationMode> modes{{"total", EvaluationMode::total},
                                                     {"tree", EvaluationMode::tree_only},
                                                     {"oneloop", EvaluationMode::oneloop_only}};
  const std::map<std::string, Spacing> spacings{{"linear", Spacing::linear}, {"log", Spacing::log}};
  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
  const std::map<std::string, Command> kinds{{"bb", Command::bb}, {"qf", Command::qf}};

  const auto add_common = [&](CLI::App* sub, bool temperature_sweep) {
    sub->add_option("--atom", config.atom, "Atom dataset name (e.g. h_1s) or path")->required();
    if (temperature_sweep) {
      sub->add_option("--t-min", config.t_min, "Lowest temperature (K)");
      sub->add_option("--t-max", config.t_max, "Highest temperature (K)");
      sub->add_option("--t", single_t, "Single temperature (K)");
    }
    sub->add_option("--points", config.points, "Number of sweep points");
    sub->add_option("--spacing", config.spacing, "linear or log")
        ->transform(CLI::CheckedTransformer(spacings, CLI::ignore_case));
    sub->add_option("--mode", config.mode, "total, tree or oneloop")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    sub->add_option("--broaden", config.broaden, "Lorentzian linewidth (a.u.); lifts the strict guard");
    sub->add_option("--rel-tol", config.rel_tol, "Quadrature relative tolerance");
    sub->add_option("--jobs", config.jobs, "Concurrent sweep points");
    sub->add_option("--output,-o", output, "Output file (default: stdout)");
    sub->add_option("--format", config.format, "csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  const auto add_surface = [&](CLI::App* sub, bool distance) {
    sub->add_option("--material", config.material, "Material dataset name (e.g. caf2) or path");
    if (distance) sub->add_option("--distance", config.distance_m, "Atom-surface distance (m)");
  };

  auto* bb = app.add_subcommand("bb", "Blackbody friction coefficient and attenuation time");
  add_common(bb, true);
  auto* qf = app.add_subcommand("qf", "Non-contact (van der Waals) friction coefficient");
  add_common(qf, true);
  add_surface(qf, true);
  auto* g0 = app.add_subcommand("gamma0", "Distance-normalised non-contact damping constant");
  add_common(g0, true);
  add_surface(g0, false);
  auto* im = app.add_subcommand("im-alpha", "One-loop density and tree-level lines of Im alpha");
  add_common(im, false);
  im->add_option("--omega-min", config.omega_min, "Lowest frequency (a.u.)");
  im->add_option("--omega-max", config.omega_max, "Highest frequency (a.u.)");
  auto* cmp = app.add_subcommand("compare-asymptotic", "Numerical result against the low-T closed form");
  add_common(cmp, true);
  add_surface(cmp, true);
  std::string kind = "bb";
  cmp->add_option("--kind", kind, "bb or qf")->check(CLI::IsMember(kinds, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  if (bb->parsed()) config.command = Command::bb;
  if (qf->parsed()) config.command = Command::qf;
  if (g0->parsed()) config.command = Command::gamma0;
  if (im->parsed()) config.command = Command::im_alpha;
  if (cmp->parsed()) {
    config.command = Command::compare_asymptotic;
    config.compare = kinds.at(CLI::detail::to_lower(kind));
  }

  if (single_t) {
    config.t_min = config.t_max = *single_t;
    config.points = 1;
  }
  config.output = output;
  return execute(config, std::cerr);
}

}  // namespace thermofriction::cli
