#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace fete {

/// Raised when operand shapes are incompatible with an operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a NaN or infinity would enter a public operation.
class NonFiniteError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

template <typename T>
struct is_complex : std::false_type {};
template <typename R>
struct is_complex<std::complex<R>> : std::true_type {};

template <typename T>
bool is_finite(const T& v) {
  if constexpr (is_complex<T>::value) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  } else {
    return std::isfinite(v);
  }
}

}  // namespace detail

/// Dense row-major matrix. Entries are real or complex scalars.
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;

  /// Zero-initialised rows x cols matrix.
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
      throw DimensionError("matrix dimensions must be positive");
    }
  }

  /// Wraps row-major entries; rejects non-finite values.
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
      throw DimensionError("matrix dimensions must be positive");
    }
    if (data_.size() != rows * cols) {
      throw DimensionError("entry count " + std::to_string(data_.size()) + " does not match " +
                           std::to_string(rows) + "x" + std::to_string(cols));
    }
    require_finite("Matrix");
  }

  /// Nested-list construction, e.g. `Matrix<double>{{1, 2}, {3, 4}}`.
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    if (rows_ == 0 || cols_ == 0) {
      throw DimensionError("matrix dimensions must be positive");
    }
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) {
        throw DimensionError("ragged initializer list");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
    require_finite("Matrix");
  }

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1);
    return out;
  }

  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const noexcept { return data_; }

  bool all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& v) { return detail::is_finite(v); });
  }

  void require_finite(const char* where) const {
    if (!all_finite()) {
      throw NonFiniteError(std::string(where) + ": matrix contains NaN or infinity");
    }
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Matrix& operator*=(const T& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator*(const T& s, Matrix m) { return m *= s; }
  friend Matrix operator*(Matrix m, const T& s) { return m *= s; }

  friend Matrix operator-(Matrix m) {
    for (auto& v : m.data_) v = -v;
    return m;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    check_same_shape(a, b, "operator+");
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    check_same_shape(a, b, "operator-");
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  static void check_same_shape(const Matrix& a, const Matrix& b, const char* where) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw DimensionError(std::string(where) + ": shape mismatch " + std::to_string(a.rows_) +
                           "x" + std::to_string(a.cols_) + " vs " + std::to_string(b.rows_) +
                           "x" + std::to_string(b.cols_));
    }
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Complex = std::complex<double>;
using ComplexMatrix = Matrix<Complex>;
using RealMatrix = Matrix<double>;
using ComplexVector = std::vector<Complex>;

/// Entrywise conversion, e.g. real to complex or between precisions.
template <typename To, typename From>
Matrix<To> matrix_cast(const Matrix<From>& a) {
  Matrix<To> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = static_cast<To>(a(i, j));
  return out;
}

inline ComplexMatrix to_complex(const RealMatrix& a) { return matrix_cast<Complex>(a); }

template <typename T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("mat_mul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + ")");
  }
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

template <typename T>
std::vector<T> mat_vec(const Matrix<T>& a, const std::vector<T>& x) {
  if (a.cols() != x.size()) {
    throw DimensionError("mat_vec: length mismatch");
  }
  std::vector<T> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    T acc{};
    for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * x[k];
    out[i] = acc;
  }
  return out;
}

/// Largest entrywise modulus of a - b.
template <typename T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T>::check_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  const auto& x = a.data();
  const auto& y = b.data();
  for (std::size_t k = 0; k < x.size(); ++k) worst = std::max(worst, static_cast<double>(std::abs(x[k] - y[k])));
  return worst;
}

template <typename T>
double max_abs(const Matrix<T>& a) {
  double worst = 0.0;
  for (const auto& v : a.data()) worst = std::max(worst, static_cast<double>(std::abs(v)));
  return worst;
}

/// Max-row-sum (infinity) norm.
template <typename T>
double norm_inf(const Matrix<T>& a) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) row += std::abs(a(i, j));
    worst = std::max(worst, row);
  }
  return worst;
}

template <typename T>
double norm_inf(const std::vector<T>& v) {
  double worst = 0.0;
  for (const auto& x : v) worst = std::max(worst, static_cast<double>(std::abs(x)));
  return worst;
}

}  // namespace fete
