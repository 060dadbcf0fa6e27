#pragma once

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fete/matrix.hpp"

namespace fete {

/// A pivot fell below the singularity threshold during factorization.
class SingularMatrix : public std::runtime_error {
 public:
  SingularMatrix(std::size_t column, double pivot_magnitude)
      : std::runtime_error("singular matrix: pivot " + std::to_string(pivot_magnitude) +
                           " in column " + std::to_string(column)),
        column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

inline constexpr double kDefaultSingularityThreshold = 1e-300;

/// Row-pivoted LU factorization P·A = L·U, stored packed: U on and above the
/// diagonal, the multipliers of unit-lower L strictly below it.
template <typename T>
class LuFactorization {
 public:
  LuFactorization(Matrix<T> packed, std::vector<std::size_t> perm, int perm_sign)
      : packed_(std::move(packed)), perm_(std::move(perm)), perm_sign_(perm_sign) {}

  std::size_t size() const noexcept { return packed_.rows(); }
  const Matrix<T>& packed() const noexcept { return packed_; }

  /// perm[i] is the row of A that landed in row i of P·A.
  const std::vector<std::size_t>& permutation() const noexcept { return perm_; }

  Matrix<T> lower() const {
    const std::size_t n = size();
    Matrix<T> l = Matrix<T>::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) l(i, j) = packed_(i, j);
    return l;
  }

  Matrix<T> upper() const {
    const std::size_t n = size();
    Matrix<T> u(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) u(i, j) = packed_(i, j);
    return u;
  }

  /// Applies P to the rows of a.
  Matrix<T> permute_rows(const Matrix<T>& a) const {
    if (a.rows() != size()) throw DimensionError("permute_rows: row count mismatch");
    Matrix<T> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(perm_[i], j);
    return out;
  }

  T determinant() const {
    T det = T(perm_sign_);
    for (std::size_t i = 0; i < size(); ++i) det *= packed_(i, i);
    return det;
  }

  /// Solves A·x = rhs. Does not modify the factorization.
  std::vector<T> solve(const std::vector<T>& rhs) const {
    const std::size_t n = size();
    if (rhs.size() != n) {
      throw DimensionError("lu_solve: rhs length " + std::to_string(rhs.size()) +
                           " does not match " + std::to_string(n));
    }
    std::vector<T> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[perm_[i]];
    // forward substitution, unit diagonal
    for (std::size_t i = 0; i < n; ++i) {
      T acc = x[i];
      for (std::size_t k = 0; k < i; ++k) acc -= packed_(i, k) * x[k];
      x[i] = acc;
    }
    for (std::size_t ii = n; ii-- > 0;) {
      T acc = x[ii];
      for (std::size_t k = ii + 1; k < n; ++k) acc -= packed_(ii, k) * x[k];
      x[ii] = acc / packed_(ii, ii);
    }
    return x;
  }

 private:
  Matrix<T> packed_;
  std::vector<std::size_t> perm_;
  int perm_sign_ = 1;
};

template <typename T>
LuFactorization<T> lu_factor(const Matrix<T>& a,
                             double singularity_threshold = kDefaultSingularityThreshold) {
  if (!a.is_square()) {
    throw DimensionError("lu_factor: matrix is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", expected square");
  }
  a.require_finite("lu_factor");
  const std::size_t n = a.rows();
  Matrix<T> lu = a;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  int sign = 1;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot_row = col;
    double pivot_mag = std::abs(lu(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double mag = std::abs(lu(r, col));
      if (mag > pivot_mag) {
        pivot_mag = mag;
        pivot_row = r;
      }
    }
    if (!(pivot_mag >= singularity_threshold)) {
      throw SingularMatrix(col, pivot_mag);
    }
    if (pivot_row != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(col, j), lu(pivot_row, j));
      std::swap(perm[col], perm[pivot_row]);
      sign = -sign;
    }
    const T pivot = lu(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const T factor = lu(r, col) / pivot;
      lu(r, col) = factor;
      if (factor == T(0)) continue;
      for (std::size_t j = col + 1; j < n; ++j) lu(r, j) -= factor * lu(col, j);
    }
  }
  return LuFactorization<T>(std::move(lu), std::move(perm), sign);
}

template <typename T>
std::vector<T> lu_solve(const LuFactorization<T>& f, const std::vector<T>& rhs) {
  return f.solve(rhs);
}

}  // namespace fete
