#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncinv/app.hpp"
#include "ncinv/errors.hpp"

int main(int argc, char** argv) {
  CLI::App cli{"Exact computations in noncommutative invariant theory"};
  std::string config_path;
  std::string output = "json";
  ncinv::app::Overrides overrides;
  cli.add_option("--config", config_path, "Task configuration (JSON)")->required();
  cli.add_option("--task", overrides.task, "Override the task named in the config");
  cli.add_option("--output", output, "Report format")->check(CLI::IsMember({"json", "table"}));
  cli.add_option("--threads", overrides.threads, "Worker threads")->check(CLI::PositiveNumber);
  cli.add_option("--seed", overrides.seed, "Seed for randomized checks");
  cli.add_option("--degree-cap", overrides.degree_cap, "Largest degree to compute");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = cli.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    std::vector<std::string> warnings;
    auto report = ncinv::app::run_task(ncinv::app::load_config(config_path), overrides, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    if (output == "json") {
      std::cout << report.dump(2) << '\n';
    } else {
      std::cout << ncinv::app::render_table(report);
    }
    return 0;
  } catch (const std::exception& e) {
    int code = ncinv::app::exit_code(e);
    const char* kind = code == 1 ? "error" : code == 2 ? "resource limit" : "internal error";
    std::cerr << kind << ": " << e.what() << '\n';
    return code;
  }
}
