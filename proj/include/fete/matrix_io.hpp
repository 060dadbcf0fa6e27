#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fete/matrix.hpp"

namespace fete {

/// Malformed matrix text. line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

/// Splits a line into entry tokens; a parenthesised group is one token.
inline std::vector<Token> tokenize_line(std::string_view line, const std::string& source,
                                        std::size_t line_no) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (is_blank(line[pos])) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    if (line[pos] == '(') {
      const std::size_t close = line.find(')', pos);
      if (close == std::string_view::npos) {
        throw ParseError(source, line_no, start + 1, "unterminated '('");
      }
      pos = close + 1;
    } else {
      while (pos < line.size() && !is_blank(line[pos]) && line[pos] != '(') ++pos;
    }
    out.push_back({line.substr(start, pos - start), start + 1});
  }
  return out;
}

inline double parse_real(std::string_view text, const std::string& source, std::size_t line_no,
                         std::size_t column) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (body.empty() || ec != std::errc() || end != body.data() + body.size()) {
    throw ParseError(source, line_no, column, "not a number: '" + std::string(text) + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError(source, line_no, column, "non-finite value: '" + std::string(text) + "'");
  }
  return value;
}

inline Complex parse_entry(const Token& tok, const std::string& source, std::size_t line_no) {
  if (tok.text.front() != '(') return {parse_real(tok.text, source, line_no, tok.column), 0.0};

  // "(re im)" or "(re,im)"
  const std::string_view inner = tok.text.substr(1, tok.text.size() - 2);
  std::vector<std::pair<std::string_view, std::size_t>> parts;
  std::size_t pos = 0;
  while (pos < inner.size()) {
    if (is_blank(inner[pos]) || inner[pos] == ',') {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < inner.size() && !is_blank(inner[pos]) && inner[pos] != ',') ++pos;
    parts.emplace_back(inner.substr(start, pos - start), tok.column + 1 + start);
  }
  if (parts.size() != 2 || std::count(inner.begin(), inner.end(), ',') > 1) {
    throw ParseError(source, line_no, tok.column,
                     "complex entry must be '(re im)' or '(re,im)': '" + std::string(tok.text) + "'");
  }
  return {parse_real(parts[0].first, source, line_no, parts[0].second),
          parse_real(parts[1].first, source, line_no, parts[1].second)};
}

}  // namespace detail

/// Reads a square matrix: a line holding the dimension n, then n lines of n
/// entries each. An entry is a real number or a "(re im)" / "(re,im)" pair.
/// Blank lines and lines whose first non-blank character is '#' are skipped.
inline ComplexMatrix read_matrix(std::istream& in, const std::string& source = "<input>") {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  std::size_t rows_read = 0;
  std::vector<Complex> entries;

  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r\v\f");
    if (first == std::string::npos || line[first] == '#') continue;

    const auto tokens = detail::tokenize_line(line, source, line_no);
    if (n == 0) {
      if (tokens.size() != 1) {
        throw ParseError(source, line_no, tokens[0].column,
                         "expected a single dimension on the header line");
      }
      std::size_t dim = 0;
      const auto text = tokens[0].text;
      const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), dim);
      if (ec != std::errc() || end != text.data() + text.size() || dim == 0) {
        throw ParseError(source, line_no, tokens[0].column,
                         "dimension must be a positive integer, got '" + std::string(text) + "'");
      }
      n = dim;
      entries.reserve(n * n);
      continue;
    }
    if (rows_read == n) {
      throw ParseError(source, line_no, tokens[0].column,
                       "unexpected data after " + std::to_string(n) + " rows");
    }
    if (tokens.size() != n) {
      const std::size_t col = tokens.size() > n ? tokens[n].column : line.size() + 1;
      throw ParseError(source, line_no, col,
                       "expected " + std::to_string(n) + " entries, found " +
                           std::to_string(tokens.size()));
    }
    for (const auto& tok : tokens) entries.push_back(detail::parse_entry(tok, source, line_no));
    ++rows_read;
  }
  if (n == 0) throw ParseError(source, line_no + 1, 1, "missing dimension header");
  if (rows_read != n) {
    throw ParseError(source, line_no + 1, 1,
                     "expected " + std::to_string(n) + " rows, found " + std::to_string(rows_read));
  }
  return ComplexMatrix(n, n, std::move(entries));
}

inline ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  return read_matrix(in, path);
}

/// Shortest-safe text for a double: 17 significant digits.
inline std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Writes the dimension line and n rows of "(re,im)" entries. read_matrix
/// recovers the identical values.
inline void write_matrix(std::ostream& out, const ComplexMatrix& a) {
  out << a.rows() << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j > 0) out << ' ';
      out << '(' << format_real(a(i, j).real()) << ',' << format_real(a(i, j).imag()) << ')';
    }
    out << '\n';
  }
}

}  // namespace fete
