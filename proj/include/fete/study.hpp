#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fete/matrix.hpp"
#include "fete/matrix_io.hpp"
#include "fete/oracles.hpp"
#include "fete/propagator.hpp"

namespace fete {

/// Named test matrices: m1, m2, m3, m4, unit2.
inline std::optional<ComplexMatrix> builtin_matrix(std::string_view name) {
  if (name == "m1") return to_complex(test_matrices::m1());
  if (name == "m2") return to_complex(test_matrices::m2());
  if (name == "m3") return to_complex(test_matrices::m3());
  if (name == "m4") return test_matrices::m4();
  if (name == "unit2") return to_complex(test_matrices::unit2());
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Minimum basis size per element count against a closed-form exponential.

enum class Table1Matrix { unit2, m1, m2 };

inline std::optional<Table1Matrix> parse_table1_matrix(std::string_view name) {
  if (name == "unit2") return Table1Matrix::unit2;
  if (name == "m1") return Table1Matrix::m1;
  if (name == "m2") return Table1Matrix::m2;
  return std::nullopt;
}

struct Table1Case {
  ComplexMatrix matrix;
  OracleResult reference;
  std::vector<std::size_t> element_counts;
};

/// Element counts as they appear in the published rows for each matrix.
inline Table1Case table1_case(Table1Matrix which) {
  switch (which) {
    case Table1Matrix::unit2:
      return {to_complex(test_matrices::unit2()), oracle_unit2(), {1, 2, 4, 8, 16, 58}};
    case Table1Matrix::m1:
      return {to_complex(test_matrices::m1()), oracle_m1(), {5, 8, 16, 50, 256}};
    case Table1Matrix::m2:
      return {to_complex(test_matrices::m2()), oracle_m2(), {1, 2, 4, 8, 15, 40}};
  }
  throw std::invalid_argument("table1_case: unknown matrix");
}

/// Smallest m in [1, max_basis] with max_abs_diff(expm, reference) <= tolerance.
inline std::optional<std::size_t> minimum_basis(const ComplexMatrix& a,
                                                const ComplexMatrix& reference,
                                                std::size_t num_elements, double tolerance,
                                                std::size_t max_basis) {
  for (std::size_t m = 1; m <= max_basis; ++m) {
    if (max_abs_diff(expm_fete(a, num_elements, m).result, reference) <= tolerance) return m;
  }
  return std::nullopt;
}

struct Table1Row {
  std::size_t num_elements;
  std::optional<std::size_t> min_basis;
};

inline std::vector<Table1Row> table1(Table1Matrix which, double tolerance = 1e-14,
                                     std::size_t max_basis = 40) {
  const Table1Case c = table1_case(which);
  std::vector<Table1Row> rows;
  for (std::size_t e : c.element_counts) {
    rows.push_back({e, minimum_basis(c.matrix, c.reference.value, e, tolerance, max_basis)});
  }
  return rows;
}

inline void write_table1_csv(std::ostream& out, const std::vector<Table1Row>& rows) {
  out << "time_steps,min_basis_functions\n";
  for (const auto& r : rows) {
    out << r.num_elements << ',';
    if (r.min_basis) {
      out << *r.min_basis;
    } else {
      out << '-';
    }
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// One-parameter sweeps with the other parameter held fixed.

enum class SweepParameter { elements, basis };

struct SweepSpec {
  std::size_t row = 0;  // 0-based entry to report
  std::size_t col = 0;
  SweepParameter vary = SweepParameter::elements;
  std::size_t fixed = kDefaultBasis;
  std::vector<std::size_t> values;
};

struct StudyRow {
  std::size_t num_elements;
  std::size_t num_basis;
  double max_abs_error;  // against the Taylor scaling-and-squaring oracle
  std::optional<Complex> selected_entry;
};

inline std::vector<StudyRow> sweep(const ComplexMatrix& a, const SweepSpec& spec) {
  if (spec.row >= a.rows() || spec.col >= a.cols()) {
    throw std::out_of_range("sweep: entry index outside the matrix");
  }
  if (spec.fixed < 1) throw std::invalid_argument("sweep: fixed parameter must be >= 1");
  const ComplexMatrix reference = expm_taylor_squaring(a);
  std::vector<StudyRow> rows;
  rows.reserve(spec.values.size());
  for (std::size_t v : spec.values) {
    const std::size_t e = spec.vary == SweepParameter::elements ? v : spec.fixed;
    const std::size_t m = spec.vary == SweepParameter::basis ? v : spec.fixed;
    const ComplexMatrix result = expm_fete(a, e, m).result;
    rows.push_back({e, m, max_abs_diff(result, reference), result(spec.row, spec.col)});
  }
  return rows;
}

inline void write_sweep_csv(std::ostream& out, const std::vector<StudyRow>& rows) {
  out << "time_steps,basis_functions,entry_re,entry_im,max_abs_error\n";
  for (const auto& r : rows) {
    out << r.num_elements << ',' << r.num_basis << ',';
    if (r.selected_entry) {
      out << format_real(r.selected_entry->real()) << ',' << format_real(r.selected_entry->imag());
    } else {
      out << ',';
    }
    out << ',' << format_real(r.max_abs_error) << '\n';
  }
}

/// "lo..hi" (inclusive) or a comma list "5,8,40".
inline std::vector<std::size_t> parse_range(std::string_view text) {
  auto to_count = [&](std::string_view s) {
    std::size_t v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size() || v == 0) {
      throw std::invalid_argument("bad range value '" + std::string(s) + "' in '" +
                                  std::string(text) + "'");
    }
    return v;
  };
  std::vector<std::size_t> out;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const std::size_t lo = to_count(text.substr(0, dots));
    const std::size_t hi = to_count(text.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty range '" + std::string(text) + "'");
    for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    out.push_back(to_count(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

}  // namespace fete
