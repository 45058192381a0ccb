#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reglab/json_io.hpp"
#include "reglab/opcalc.hpp"

namespace reglab {

/// Named verification with parameters, tolerance, and a window list.
struct Scenario {
  std::string name;
  json params = json::object();
  TolerancePolicy tol;
  std::vector<int> windows;
};

struct ReportRow {
  std::string label;
  int N = 0;
  cplx lhs = 0.0;
  cplx rhs = 0.0;
  double abs_err = 0.0;
  bool pass = false;
};

struct ConvergenceRow {
  int from_N = 0;
  int to_N = 0;
  double err_from = 0.0;
  double err_to = 0.0;
  double order = 0.0;  // log2(err_from / err_to)
};

struct Report {
  std::string scenario;
  json inputs = json::object();
  std::vector<ReportRow> rows;
  json measured = json::object();  // fitted signs, measured ratios, ...
  std::vector<ConvergenceRow> convergence;
  bool pass = false;
  double wall_ms = 0.0;  // excluded from determinism comparisons

  json to_json() const;
  std::string to_markdown() const;
};

enum class ReportFormat { json_fmt, markdown };

/// Names in the registered set, sorted.
std::vector<std::string> registered_scenarios();

/// Scenario with the registered defaults; throws "UnknownScenario".
Scenario default_scenario(const std::string& name);

/// Merge config overrides into the defaults; unknown keys raise "BadParams".
Scenario configure_scenario(const std::string& name, const json& overrides);

Report run_scenario(const Scenario& s);

/// Run with a convergence table over the window list (needs >= 2 windows,
/// otherwise "NeedTwoWindows").
Report sweep(const Scenario& s);

std::string emit(const std::vector<Report>& reports, ReportFormat fmt);

/// Run every registered scenario, optionally with per-scenario config files
/// <dir>/<name>.json; parallelism capped by VERIFY_THREADS.
std::vector<Report> run_all(const std::optional<std::string>& config_dir);

}  // namespace reglab
