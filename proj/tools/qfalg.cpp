// Command-line front end: qfalg COMMAND [--input FILE|-] [options]

#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include "CLI11.hpp"
#include "qf/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact algebra of differential operators on the circle"};
  app.require_subcommand(0, 0);

  qf::cli::Options options;
  std::string command;
  std::string input_path = "-";
  app.add_option("command", command, "Command to run")
      ->required()
      ->check(CLI::IsMember(qf::cli::command_names()));
  app.add_option("--input", input_path, "JSON input file, - for stdin");
  app.add_option("--seed", options.seed, "Seed for randomized batteries");
  app.add_option("--order", options.order, "Series truncation order")->check(CLI::Range(4u, 200u));
  app.add_option("--window", options.window, "Half-width of matrix windows")->check(CLI::Range(1u, 64u));
  app.add_option("--dmax", options.dmax, "Maximal annihilator degree")->check(CLI::Range(1u, 64u));
  app.add_option("--k-bound", options.k_bound, "Weight bound for the bracket route")->check(CLI::Range(1u, 64u));
  CLI11_PARSE(app, argc, argv);

  std::string input;
  if (command != "verify" || input_path != "-" || !isatty(0)) {
    std::stringstream buffer;
    if (input_path == "-") {
      buffer << std::cin.rdbuf();
    } else {
      std::ifstream file(input_path);
      if (!file) {
        std::cerr << "cannot open " << input_path << "\n";
        return 2;
      }
      buffer << file.rdbuf();
    }
    input = buffer.str();
  }

  const qf::cli::Result r = qf::cli::run(command, input, options);
  if (!r.output.empty()) std::cout << r.output << "\n";
  if (!r.diagnostic.empty()) std::cerr << r.diagnostic << "\n";
  return r.exit_code;
}
