#pragma once

#include <algorithm>
#include <exception>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>

#include "fete/lu.hpp"
#include "fete/matrix_io.hpp"
#include "fete/propagator.hpp"
#include "fete/study.hpp"

namespace fete::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kParse = 2, kNumerical = 3 };

/// A path to a matrix file, or the name of a built-in matrix when no such
/// file exists.
inline ComplexMatrix load_matrix(const std::string& source) {
  if (!std::filesystem::exists(source)) {
    if (auto named = builtin_matrix(source)) return *named;
  }
  return read_matrix_file(source);
}

struct ExpmCommand {
  std::string matrix;
  std::size_t elements = kDefaultElements;
  std::size_t basis = kDefaultBasis;
  std::string output;  // empty: standard output
};

inline void write_expm_report(std::ostream& out, const ExpmReport& report) {
  const double worst =
      report.residuals.empty() ? 0.0
                               : *std::max_element(report.residuals.begin(), report.residuals.end());
  out << "# exp(A): elements=" << report.num_elements << " basis=" << report.num_basis
      << " max_element_residual=" << format_real(worst) << '\n';
  write_matrix(out, report.result);
}

inline int cmd_expm(const ExpmCommand& cmd, std::ostream& out, std::ostream& err) {
  if (cmd.elements < 1 || cmd.basis < 1) {
    err << "error: --elements and --basis must be >= 1\n";
    return kUsage;
  }
  ComplexMatrix a;
  try {
    a = load_matrix(cmd.matrix);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    err << "parse error: " << cmd.matrix << ": " << e.what() << '\n';
    return kParse;
  }

  ExpmReport report;
  try {
    report = expm_fete(a, cmd.elements, cmd.basis);
  } catch (const SingularMatrix& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const NonFiniteError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  }

  if (cmd.output.empty()) {
    write_expm_report(out, report);
  } else {
    std::ofstream file(cmd.output);
    if (!file) {
      err << "error: cannot write " << cmd.output << '\n';
      return kUsage;
    }
    write_expm_report(file, report);
  }
  return kSuccess;
}

struct Table1Command {
  std::string which;
  double tolerance = 1e-14;
  std::size_t max_basis = 40;
};

inline int cmd_table1(const Table1Command& cmd, std::ostream& out, std::ostream& err) {
  const auto which = parse_table1_matrix(cmd.which);
  if (!which) {
    err << "error: unknown matrix '" << cmd.which << "' (expected unit2, m1 or m2)\n";
    return kUsage;
  }
  if (!(cmd.tolerance > 0.0) || cmd.max_basis < 1) {
    err << "error: --tolerance must be positive and --max-basis >= 1\n";
    return kUsage;
  }
  try {
    write_table1_csv(out, table1(*which, cmd.tolerance, cmd.max_basis));
  } catch (const SingularMatrix& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  }
  return kSuccess;
}

struct SweepCommand {
  std::string matrix;
  std::string entry;  // "i,j", 1-based
  std::string vary = "elements";
  std::size_t fixed = 8;
  std::string range = "5..40";
};

inline int cmd_sweep(const SweepCommand& cmd, std::ostream& out, std::ostream& err) {
  SweepSpec spec;
  try {
    const auto comma = cmd.entry.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("entry must be 'i,j'");
    const auto idx = parse_range(cmd.entry);
    if (idx.size() != 2) throw std::invalid_argument("entry must be 'i,j'");
    spec.row = idx[0] - 1;
    spec.col = idx[1] - 1;
    if (cmd.vary == "elements" || cmd.vary == "E") {
      spec.vary = SweepParameter::elements;
    } else if (cmd.vary == "basis" || cmd.vary == "m") {
      spec.vary = SweepParameter::basis;
    } else {
      throw std::invalid_argument("--vary must be 'elements' or 'basis'");
    }
    if (cmd.fixed < 1) throw std::invalid_argument("--fixed must be >= 1");
    spec.fixed = cmd.fixed;
    spec.values = parse_range(cmd.range);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  ComplexMatrix a;
  try {
    a = load_matrix(cmd.matrix);
  } catch (const std::exception& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  }
  if (spec.row >= a.rows() || spec.col >= a.cols()) {
    err << "error: entry " << cmd.entry << " outside a " << a.rows() << "x" << a.cols()
        << " matrix\n";
    return kUsage;
  }
  try {
    write_sweep_csv(out, sweep(a, spec));
  } catch (const SingularMatrix& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const NonFiniteError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  }
  return kSuccess;
}

}  // namespace fete::cli
