#include "rindler/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rindler/bogoliubov.hpp"
#include "rindler/error.hpp"
#include "rindler/measures.hpp"
#include "rindler/states.hpp"

namespace rindler::sweep {

namespace {

struct GridPoint {
  double q = 0.0;
  std::optional<double> acceleration;
};

SweepRow evaluate(const SweepConfig& cfg, const GridPoint& pt) {
  const bogoliubov::SqueezeParams p =
      pt.acceleration
          ? bogoliubov::squeeze_from_omega(bogoliubov::omega_from_energy(cfg.energy, *pt.acceleration))
          : bogoliubov::squeeze_from_q(pt.q);
  const int n_max = cfg.n_max_override ? *cfg.n_max_override
                                       : states::family_cutoff(cfg.family, p, cfg.tol);
  const auto rho = states::joint_density(cfg.family, p, n_max);
  const auto r = measures::mutual_information(rho);

  SweepRow row{};
  row.family = cfg.family;
  row.q = p.q;
  row.omega = p.omega;
  if (pt.acceleration) {
    row.energy = cfg.energy;
    row.acceleration = pt.acceleration;
  }
  row.n_max = n_max;
  row.trace_deficit = r.trace_deficit;
  row.log_negativity = r.log_negativity;
  row.S_A = r.S_A;
  row.S_B = r.S_B;
  row.S_AB = r.S_AB;
  row.mutual_information = r.mutual_information;
  row.min_pt_eigenvalue = r.min_pt_eigenvalue;
  row.certified_error = r.tail_bound_measures;
  return row;
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw ConfigError("--" + key + ": '" + item + "' is not a number");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("--" + key + " needs at least one value");
  return out;
}

double parse_number(const std::string& key, const std::string& text) {
  const auto v = parse_list(key, text);
  if (v.size() != 1) throw ConfigError("--" + key + " takes a single value");
  return v.front();
}

std::string trim(std::string s) {
  s.erase(0, s.find_first_not_of(" \t\r"));
  s.erase(s.find_last_not_of(" \t\r") + 1);
  return s;
}

const std::vector<std::string> kKeys = {"family", "q",     "energy", "accel",
                                        "tol",    "n-max", "out",    "format"};

}  // namespace

const std::vector<std::string>& column_names() {
  static const std::vector<std::string> names = {
      "family", "q",   "omega", "E",    "a",                  "n_max",             "trace_deficit",
      "log_negativity", "S_A", "S_B", "S_AB", "mutual_information", "min_pt_eigenvalue",
      "certified_error"};
  return names;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void validate(const SweepConfig& cfg) {
  if (!(cfg.tol > 0.0) || !(cfg.tol < 1.0)) {
    throw ConfigError("tol must lie in (0, 1), got " + format_double(cfg.tol));
  }
  if (cfg.n_max_override && *cfg.n_max_override < 0) {
    throw ConfigError("n-max must be non-negative, got " + std::to_string(*cfg.n_max_override));
  }
  if (cfg.grid_kind == GridKind::q_grid) {
    if (cfg.q_values.empty()) throw ConfigError("empty q grid");
    for (double q : cfg.q_values) {
      if (!(q > 0.0) || !(q < 1.0)) throw ConfigError("q must lie in (0, 1), got " + format_double(q));
    }
  } else {
    if (!(cfg.energy > 0.0) || !std::isfinite(cfg.energy)) {
      throw ConfigError("acceleration grids need a positive --energy, got " + format_double(cfg.energy));
    }
    if (cfg.a_values.empty()) throw ConfigError("empty acceleration grid");
    for (double a : cfg.a_values) {
      if (!(a > 0.0) || !std::isfinite(a)) {
        throw ConfigError("acceleration must be positive and finite, got " + format_double(a));
      }
    }
  }
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg, Execution exec) {
  validate(cfg);
  std::vector<GridPoint> grid;
  if (cfg.grid_kind == GridKind::q_grid) {
    for (double q : cfg.q_values) grid.push_back({q, std::nullopt});
  } else {
    for (double a : cfg.a_values) grid.push_back({0.0, a});
  }

  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  if (exec == Execution::sequential || grid.size() < 2) {
    for (const auto& pt : grid) rows.push_back(evaluate(cfg, pt));
    return rows;
  }
  std::vector<std::future<SweepRow>> jobs;
  jobs.reserve(grid.size());
  for (const auto& pt : grid) {
    jobs.push_back(std::async(std::launch::async, [&cfg, pt] { return evaluate(cfg, pt); }));
  }
  for (auto& j : jobs) rows.push_back(j.get());
  return rows;
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  const auto& names = column_names();
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << names[i];
  os << '\n';
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  for (const auto& r : rows) {
    os << to_string(r.family) << ',' << format_double(r.q) << ',' << format_double(r.omega) << ','
       << opt(r.energy) << ',' << opt(r.acceleration) << ',' << r.n_max << ','
       << format_double(r.trace_deficit) << ',' << format_double(r.log_negativity) << ','
       << format_double(r.S_A) << ',' << format_double(r.S_B) << ',' << format_double(r.S_AB) << ','
       << format_double(r.mutual_information) << ',' << format_double(r.min_pt_eigenvalue) << ','
       << format_double(r.certified_error) << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<SweepRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  auto opt = [](const std::optional<double>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["family"] = std::string(to_string(r.family));
    o["q"] = r.q;
    o["omega"] = r.omega;
    o["E"] = opt(r.energy);
    o["a"] = opt(r.acceleration);
    o["n_max"] = r.n_max;
    o["trace_deficit"] = r.trace_deficit;
    o["log_negativity"] = r.log_negativity;
    o["S_A"] = r.S_A;
    o["S_B"] = r.S_B;
    o["S_AB"] = r.S_AB;
    o["mutual_information"] = r.mutual_information;
    o["min_pt_eigenvalue"] = r.min_pt_eigenvalue;
    o["certified_error"] = r.certified_error;
    arr.push_back(std::move(o));
  }
  os << arr.dump(2) << '\n';
}

void write_rows(const SweepConfig& cfg, const std::vector<SweepRow>& rows, std::ostream& fallback) {
  auto emit = [&](std::ostream& os) {
    if (cfg.format == OutputFormat::csv) {
      write_csv(os, rows);
    } else {
      write_json(os, rows);
    }
  };
  if (!cfg.output_path) {
    emit(fallback);
    if (!fallback) throw IoError("failed writing output stream");
    return;
  }
  std::ofstream out(*cfg.output_path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + *cfg.output_path + "' for writing");
  emit(out);
  out.flush();
  if (!out) throw IoError("failed writing '" + *cfg.output_path + "'");
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    std::replace(key.begin(), key.end(), '_', '-');
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    out.emplace_back(key, trim(line.substr(eq + 1)));
  }
  return out;
}

SweepConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"rindler_sweep"};
  app.set_help_flag();
  std::map<std::string, std::string> flag_values;
  for (const auto& key : kKeys) app.add_option("--" + key, flag_values[key]);
  std::string config_path;
  app.add_option("--config", config_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw ConfigError(std::string("usage error: ") + e.what());
  }

  std::map<std::string, std::string> merged;
  if (app.count("--config") > 0) {
    std::map<std::string, std::string> file;
    for (auto& [k, v] : read_config_file(config_path)) file[k] = v;
    if (file.count("q") && file.count("accel")) {
      throw ConfigError("config file sets both q and accel grids");
    }
    merged = std::move(file);
  }
  const bool flag_q = app.count("--q") > 0;
  const bool flag_accel = app.count("--accel") > 0;
  if (flag_q && flag_accel) throw ConfigError("--q and --accel are mutually exclusive");
  if (flag_q) merged.erase("accel");
  if (flag_accel) merged.erase("q");
  for (const auto& key : kKeys) {
    if (app.count("--" + key) > 0) merged[key] = flag_values[key];
  }

  SweepConfig cfg;
  if (auto it = merged.find("family"); it != merged.end()) {
    const auto f = parse_family(it->second);
    if (!f) throw ConfigError("unknown family '" + it->second + "' (expected helicity or number)");
    cfg.family = *f;
  }
  if (auto it = merged.find("q"); it != merged.end()) {
    cfg.grid_kind = GridKind::q_grid;
    cfg.q_values = parse_list("q", it->second);
  } else if (auto ia = merged.find("accel"); ia != merged.end()) {
    cfg.grid_kind = GridKind::acceleration_grid;
    cfg.a_values = parse_list("accel", ia->second);
    auto ie = merged.find("energy");
    if (ie == merged.end()) throw ConfigError("--accel requires --energy");
    cfg.energy = parse_number("energy", ie->second);
  } else {
    throw ConfigError("no grid given: use --q or --energy with --accel");
  }
  if (auto it = merged.find("tol"); it != merged.end()) cfg.tol = parse_number("tol", it->second);
  if (auto it = merged.find("n-max"); it != merged.end()) {
    const double n = parse_number("n-max", it->second);
    if (n != std::floor(n) || n < 0 || n > 1e9) {
      throw ConfigError("n-max must be a non-negative integer, got " + it->second);
    }
    cfg.n_max_override = static_cast<int>(n);
  }
  if (auto it = merged.find("out"); it != merged.end()) cfg.output_path = it->second;
  if (auto it = merged.find("format"); it != merged.end()) {
    if (it->second == "csv") {
      cfg.format = OutputFormat::csv;
    } else if (it->second == "json") {
      cfg.format = OutputFormat::json;
    } else {
      throw ConfigError("unknown format '" + it->second + "' (expected csv or json)");
    }
  }
  validate(cfg);
  return cfg;
}

}  // namespace rindler::sweep
