// sweep.hpp
// Parameter sweeps over q or acceleration grids and their CSV/JSON output.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rindler/fock.hpp"

namespace rindler::sweep {

enum class GridKind { q_grid, acceleration_grid };
enum class OutputFormat { csv, json };
enum class Execution { sequential, parallel };

struct SweepConfig {
  StateFamily family = StateFamily::helicity_bell;
  GridKind grid_kind = GridKind::q_grid;
  std::vector<double> q_values;
  double energy = 0.0;
  std::vector<double> a_values;
  double tol = 1e-12;
  std::optional<int> n_max_override;
  std::optional<std::string> output_path;  // stdout when empty
  OutputFormat format = OutputFormat::csv;
};

struct SweepRow {
  StateFamily family;
  double q;
  double omega;
  std::optional<double> energy;        // blank for q grids
  std::optional<double> acceleration;  // blank for q grids
  int n_max;
  double trace_deficit;
  double log_negativity;
  double S_A;
  double S_B;
  double S_AB;
  double mutual_information;
  double min_pt_eigenvalue;
  double certified_error;
};

// Column names in output order.
const std::vector<std::string>& column_names();

// Throws ConfigError naming the offending value.
void validate(const SweepConfig& cfg);

// One row per grid point, in grid order. Grid points are independent, so the
// parallel mode only changes scheduling, never the rows.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg, Execution exec = Execution::parallel);

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_json(std::ostream& os, const std::vector<SweepRow>& rows);

// Writes to cfg.output_path (or `fallback` when unset). Throws IoError.
void write_rows(const SweepConfig& cfg, const std::vector<SweepRow>& rows, std::ostream& fallback);

// Flags (override values read from --config PATH, a file of key=value lines):
//   --family {helicity|number}  --q a,b,c | --energy E --accel a,b,c
//   --tol T  --n-max N  --out PATH  --format {csv|json}
// Throws ConfigError on unknown flags, bad values or conflicting grids.
SweepConfig parse_args(const std::vector<std::string>& args);

// Parses the key=value config file format ('#' starts a comment line).
// Keys are the long flag names without dashes: family, q, energy, accel,
// tol, n-max, out, format.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);

// 17 significant digits; round-trips every double.
std::string format_double(double v);

}  // namespace rindler::sweep
