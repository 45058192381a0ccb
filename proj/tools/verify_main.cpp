#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "reglab/scenarios.hpp"

namespace {

using reglab::Report;
using reglab::ReportFormat;

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::json_fmt;
  if (s == "md" || s == "markdown") return ReportFormat::markdown;
  reglab::fail("BadParams", "report format must be json or md");
}

reglab::json load_config(const std::string& path) {
  std::ifstream in(path);
  reglab::require(in.good(), "BadParams", "cannot open config file " + path);
  reglab::json j;
  in >> j;
  return j;
}

int write_out(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path);
  reglab::require(out.good(), "BadParams", "cannot open output file " + out_path);
  out << text;
  return 0;
}

int report_exit(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verify: named numerical verifications of circle-operator identities"};
  app.require_subcommand(1);

  std::string scenario_name, config_path, out_path, format = "json", windows_csv, config_dir;
  double tolerance = -1.0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file with parameter overrides");
    cmd->add_option("--tolerance", tolerance, "absolute tolerance override");
    cmd->add_option("--report", format, "report format: json|md")->capture_default_str();
    cmd->add_option("--out", out_path, "output path (default stdout)");
    cmd->add_option("--windows", windows_csv, "comma-separated window sizes");
  };

  CLI::App* run = app.add_subcommand("run", "run one scenario");
  run->add_option("scenario", scenario_name, "registered scenario name")->required();
  add_common(run);

  CLI::App* sw = app.add_subcommand("sweep", "run one scenario across windows");
  sw->add_option("scenario", scenario_name, "registered scenario name")->required();
  add_common(sw);

  CLI::App* all = app.add_subcommand("all", "run every registered scenario");
  all->add_option("--config", config_dir, "directory with per-scenario JSON configs");
  all->add_option("--report", format, "report format: json|md")->capture_default_str();
  all->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* list = app.add_subcommand("list", "list registered scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list->parsed()) {
      for (const auto& name : reglab::registered_scenarios()) std::cout << name << "\n";
      return 0;
    }

    ReportFormat fmt = parse_format(format);

    if (all->parsed()) {
      std::optional<std::string> dir;
      if (!config_dir.empty()) dir = config_dir;
      std::vector<Report> reports = reglab::run_all(dir);
      write_out(reglab::emit(reports, fmt), out_path);
      return report_exit(reports);
    }

    reglab::json overrides = reglab::json::object();
    if (!config_path.empty()) overrides = load_config(config_path);
    if (tolerance > 0) overrides["tolerance"] = tolerance;
    if (!windows_csv.empty()) {
      std::vector<int> ws;
      std::stringstream ss(windows_csv);
      std::string item;
      while (std::getline(ss, item, ',')) ws.push_back(std::stoi(item));
      overrides["windows"] = ws;
    }
    reglab::Scenario s = reglab::configure_scenario(scenario_name, overrides);

    Report rep = run->parsed() ? reglab::run_scenario(s) : reglab::sweep(s);
    write_out(reglab::emit({rep}, fmt), out_path);
    return rep.pass ? 0 : 1;
  } catch (const reglab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    // Configuration and usage problems exit 2; numerical failures exit 1 above.
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
