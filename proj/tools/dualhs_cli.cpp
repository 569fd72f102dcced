// Batch front end: runs a session script and prints its reports.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dualhs/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Dual Hilbert-Samuel computations from session scripts"};
  std::string script_path = "-";
  std::string field;
  dualhs::SessionFlags flags;
  app.add_option("script", script_path, "Session script, - for stdin");
  app.add_option("--seed", flags.seed, "Seed for randomized choices");
  app.add_option("--field", field, "Q or Fp:<p>; overrides the script");
  app.add_option("--window", flags.window, "Fit window (default degree bound + 2)");
  app.add_option("--nmax", flags.nmax, "Largest index tried by fits (default 4d + 2r + 16)");
  std::string format;
  app.add_option("--format", format, "Report format for every report statement")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  CLI11_PARSE(app, argc, argv);

  std::stringstream script;
  if (script_path == "-") {
    script << std::cin.rdbuf();
  } else {
    std::ifstream in(script_path);
    if (!in) {
      std::cerr << "cannot read " << script_path << "\n";
      return 2;
    }
    script << in.rdbuf();
  }
  try {
    if (!format.empty()) flags.format = format;
    if (!field.empty()) flags.field = dualhs::Field::parse(field);
    const auto result = dualhs::run_session(script.str(), flags);
    std::cout << result.output;
    std::cerr << result.diagnostics;
    return result.exit_status;
  } catch (const dualhs::ScriptError& e) {
    std::cerr << script_path << ":" << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
