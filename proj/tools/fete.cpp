// Command-line front end: matrix exponentials by finite elements in time.
//
//   fete expm   MATRIX [-E N] [-m N] [--output FILE]
//   fete table1 {unit2|m1|m2} [--tolerance T] [--max-basis N]
//   fete sweep  MATRIX --entry i,j [--vary elements|basis] [--fixed N] [--range 5..40]
//
// MATRIX is a matrix file or one of the built-in names m1, m2, m3, m4, unit2.

#include <iostream>

#include "CLI11.hpp"
#include "fete/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Matrix exponential via finite elements in time with an integrated Chebyshev basis"};
  app.require_subcommand(1);

  fete::cli::ExpmCommand expm;
  auto* expm_cmd = app.add_subcommand("expm", "Evaluate exp(A) and print it");
  expm_cmd->add_option("matrix", expm.matrix, "Matrix file or built-in name")->required();
  expm_cmd->add_option("-E,--elements", expm.elements, "Number of time elements")
      ->check(CLI::PositiveNumber);
  expm_cmd->add_option("-m,--basis", expm.basis, "Number of basis functions per element")
      ->check(CLI::PositiveNumber);
  expm_cmd->add_option("-o,--output", expm.output, "Write the result here instead of stdout");

  fete::cli::Table1Command t1;
  auto* t1_cmd = app.add_subcommand("table1", "Minimum basis size per element count (CSV)");
  t1_cmd->add_option("matrix", t1.which, "unit2, m1 or m2")->required();
  t1_cmd->add_option("--tolerance", t1.tolerance, "Per-entry absolute error target");
  t1_cmd->add_option("--max-basis", t1.max_basis, "Largest basis size tried")
      ->check(CLI::PositiveNumber);

  fete::cli::SweepCommand sw;
  auto* sw_cmd = app.add_subcommand("sweep", "Vary one discretisation parameter (CSV)");
  sw_cmd->add_option("matrix", sw.matrix, "Matrix file or built-in name")->required();
  sw_cmd->add_option("--entry", sw.entry, "Reported entry as 'i,j' (1-based)")->required();
  sw_cmd->add_option("--vary", sw.vary, "Parameter to vary: elements or basis");
  sw_cmd->add_option("--fixed", sw.fixed, "Value of the parameter held fixed")
      ->check(CLI::PositiveNumber);
  sw_cmd->add_option("--range", sw.range, "Values to sweep: 'lo..hi' or a comma list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return fete::cli::kUsage;
  }

  if (*expm_cmd) return fete::cli::cmd_expm(expm, std::cout, std::cerr);
  if (*t1_cmd) return fete::cli::cmd_table1(t1, std::cout, std::cerr);
  return fete::cli::cmd_sweep(sw, std::cout, std::cerr);
}
