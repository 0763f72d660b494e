#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bulab/cli/commands.hpp"
#include "bulab/errors.hpp"
#include "bulab/version.hpp"

namespace {

using bulab::cli::RunReport;
using nlohmann::json;

struct CommonArgs {
  std::string config_path;
  std::string out_path;
  std::int64_t seed_override = -1;
  bool quiet = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "JSON experiment config")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", args.out_path,
                  "report path; a .csv with plot data lands next to it");
  cmd->add_option("--seed", args.seed_override,
                  "replace the config's seed list with this single seed");
  cmd->add_flag("--quiet", args.quiet, "suppress the summary line");
}

json load_config(const CommonArgs& args, bool seeds_are_list) {
  std::ifstream in(args.config_path);
  json config = json::parse(in);
  if (args.seed_override >= 0) {
    if (seeds_are_list)
      config["seeds"] = json::array({args.seed_override});
    else
      config["seed"] = args.seed_override;
  }
  return config;
}

std::string csv_path_for(const std::string& out_path) {
  const std::size_t dot = out_path.find_last_of('.');
  const std::size_t slash = out_path.find_last_of('/');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash))
    return out_path.substr(0, dot) + ".csv";
  return out_path + ".csv";
}

int deliver(const RunReport& report, const CommonArgs& args,
            const std::string& name) {
  if (!args.out_path.empty()) {
    std::ofstream out(args.out_path);
    if (!out) throw bulab::ConfigError("cannot open --out for writing");
    out << report.document.dump(2) << '\n';
    std::ofstream csv(csv_path_for(args.out_path));
    csv << report.csv;
  } else if (args.quiet) {
    // Nothing asked for; still exercise the run for the exit code.
  } else {
    std::cout << report.document.dump(2) << '\n';
  }
  if (!args.quiet)
    std::cerr << name << ": "
              << (report.exit_code == 0 ? "all checks passed" : "FAILURES")
              << " (exit " << report.exit_code << ", "
              << report.document["meta"]["wall_clock_ms"].get<double>()
              << " ms)\n";
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded-symmetry laboratory: zero certificates on the sphere, "
               "spectrum hull tests, free-group norm estimates"};
  app.set_version_flag("--version", bulab::kVersion);
  app.require_subcommand(1);

  CommonArgs borsuk_args, grade_args, freegroup_args;
  CLI::App* borsuk = app.add_subcommand(
      "borsuk", "locate zeros of symmetrized functions on the sphere");
  add_common(borsuk, borsuk_args);
  CLI::App* grade = app.add_subcommand(
      "grade", "grading decomposition and hull-of-spectrum checks");
  add_common(grade, grade_args);
  CLI::App* freegroup = app.add_subcommand(
      "freegroup", "free-group partitions, algebra grading, norm brackets");
  add_common(freegroup, freegroup_args);

  CLI11_PARSE(app, argc, argv);

  try {
    if (borsuk->parsed())
      return deliver(bulab::cli::cmd_borsuk(load_config(borsuk_args, true)),
                     borsuk_args, "borsuk");
    if (grade->parsed())
      return deliver(bulab::cli::cmd_grade(load_config(grade_args, true)),
                     grade_args, "grade");
    return deliver(
        bulab::cli::cmd_freegroup(load_config(freegroup_args, false)),
        freegroup_args, "freegroup");
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const bulab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const bulab::InvalidRootError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const bulab::ParseError& e) {
    std::cerr << "expression error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
