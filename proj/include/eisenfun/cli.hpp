#pragma once

// Command layer behind the `eisenfun` executable. Each command builds a
// DataTable that is written as CSV or JSON.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <ostream>
#include <string>
#include <vector>

namespace eisenfun::cli {

enum class Format { csv, json };

enum ExitCode : int { kOk = 0, kCheckFailure = 1, kUsageError = 2, kIoError = 3 };

struct Range {
  double min = 0.0;
  double max = 1.0;
  int steps = 2;
};

struct RunConfig {
  std::string command;                // figure | table | eft | decompose | check
  std::optional<double> min, max;     // x grid
  std::optional<int> steps;
  std::optional<double> k_min, k_max; // k grid (eft)
  int order = 3;
  std::optional<int> figure_id;       // 1..5, all figures when unset
  std::string fn;                     // builtin function name
  std::string out;                    // file (or directory for figure); empty = stdout / "."
  Format format = Format::csv;
  std::optional<double> tol;
};

/// Thrown for invalid option combinations; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Column-major-agnostic table of optional doubles; std::nullopt is a pole or
/// an undefined value and is written as an empty CSV cell / JSON null.
struct DataTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;
};

/// Shortest-safe text for a double: 17 significant digits, '.' decimal point.
std::string format_number(double v);

void write_csv(std::ostream& os, const DataTable& table);
void write_json(std::ostream& os, const DataTable& table);
void write_table(std::ostream& os, const DataTable& table, Format format);

/// Inclusive grid x_i = min + (max - min) * i / (steps - 1).
std::vector<double> linspace(const Range& range);

/// Grid for a command: the config overrides the per-command default.
Range resolve_range(const RunConfig& cfg, const Range& fallback);

DataTable figure_table(int id, const RunConfig& cfg);
DataTable phf_value_table(const RunConfig& cfg);
DataTable eft_table(const RunConfig& cfg);
DataTable decompose_table(const RunConfig& cfg);

/// Writes fig<id>.<ext> into `directory`; returns the written paths.
std::vector<std::filesystem::path> run_figure(const RunConfig& cfg,
                                              const std::filesystem::path& directory);

/// Runs the identity suite, prints the report; returns kOk or kCheckFailure.
int run_check(const RunConfig& cfg, std::ostream& report);

/// Dispatches on cfg.command; maps errors to exit codes.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace eisenfun::cli
