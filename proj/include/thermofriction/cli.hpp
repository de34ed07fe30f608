#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "thermofriction/polarizability.hpp"

namespace thermofriction::cli {

enum class Command { bb, qf, gamma0, im_alpha, compare_asymptotic };
enum class Spacing { linear, log };
enum class Format { csv, json };

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitValidity = 3;

struct SweepConfig {
  Command command = Command::bb;
  std::string atom;
  std::string material;
  double t_min = 10.0;
  double t_max = 3000.0;
  int points = 2;
  Spacing spacing = Spacing::linear;
  double distance_m = 0.0;
  EvaluationMode mode = EvaluationMode::total;
  std::optional<double> broaden;  // Lorentzian linewidth, a.u.
  double rel_tol = 1e-9;
  int jobs = 1;
  std::filesystem::path output;  // empty: standard output
  Format format = Format::csv;
  double omega_min = 1e-4;  // im-alpha grid, a.u.
  double omega_max = 0.3;
  Command compare = Command::bb;  // which coefficient compare-asymptotic checks

  /// Throws ValidationError naming the offending field.
  void validate() const;
};

using Cell = std::variant<double, std::string>;

/// One block of output: named columns and rows in sweep order.
struct Block {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Report {
  std::vector<std::pair<std::string, std::string>> meta;
  Block rows;
  std::optional<Block> lines;
};

std::string_view to_string(Command c);

/// Sweep grid; a single point when t_min == t_max.
std::vector<double> sweep_grid(double lo, double hi, int points, Spacing spacing);

/// Resolves "h_1s" to <data dir>/<subdir>/h_1s.toml unless it names an existing file.
std::filesystem::path resolve_dataset(const std::string& name_or_path, std::string_view subdir);
std::filesystem::path data_directory();

/// Hex SHA-256 of a file's bytes.
std::string file_sha256(const std::filesystem::path& path);

/// Scientific notation with 9 significant digits.
std::string format_number(double value);

/// Evaluates the sweep described by config. Throws on any failure.
Report evaluate(const SweepConfig& config);

void write_csv(const Report& report, std::ostream& out);
void write_json(const Report& report, std::ostream& out);

/// Evaluates and writes the report. Returns an exit status; partially written
/// files are removed on failure and diagnostics go to err.
int execute(const SweepConfig& config, std::ostream& err);

int run(int argc, char** argv);

}  // namespace thermofriction::cli
