#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "fete/matrix.hpp"

namespace fete {

enum class OracleMethod { taylor_squaring, exact_m1, exact_m2, exact_identity };

inline const char* to_string(OracleMethod m) {
  switch (m) {
    case OracleMethod::taylor_squaring: return "taylor_squaring";
    case OracleMethod::exact_m1: return "exact_m1";
    case OracleMethod::exact_m2: return "exact_m2";
    case OracleMethod::exact_identity: return "exact_identity";
  }
  return "unknown";
}

struct OracleResult {
  ComplexMatrix value;
  OracleMethod method;
};

/// Reference e^A: scale A by 2^-s until its max-row-sum norm is at most 0.5,
/// sum the Taylor series until a term drops below 1e-18 of the partial sum,
/// then square s times. Runs in Work precision and rounds the result to double.
/// Independent of the finite-element propagator.
template <typename Work = long double>
ComplexMatrix expm_taylor_squaring(const ComplexMatrix& a) {
  using Scalar = std::complex<Work>;
  if (!a.is_square()) throw DimensionError("expm_taylor_squaring: matrix must be square");
  a.require_finite("expm_taylor_squaring");
  const std::size_t n = a.rows();

  int squarings = 0;
  double norm = norm_inf(a);
  while (norm > 0.5) {
    norm *= 0.5;
    ++squarings;
  }
  const Matrix<Scalar> scaled = matrix_cast<Scalar>(a) * Scalar(std::ldexp(Work(1), -squarings));

  Matrix<Scalar> sum = Matrix<Scalar>::identity(n);
  Matrix<Scalar> term = Matrix<Scalar>::identity(n);
  for (int k = 1; k < 200; ++k) {
    term = mat_mul(term, scaled) * Scalar(Work(1) / Work(k));
    sum = sum + term;
    if (norm_inf(term) < 1e-18 * norm_inf(sum)) break;
  }
  for (int s = 0; s < squarings; ++s) {
    sum = mat_mul(sum, sum);
    if (!sum.all_finite()) {
      throw NonFiniteError("expm_taylor_squaring: overflow during squaring");
    }
  }
  ComplexMatrix out = matrix_cast<Complex>(sum);
  out.require_finite("expm_taylor_squaring");
  return out;
}

template <typename Work = long double>
ComplexMatrix expm_taylor_squaring(const RealMatrix& a) {
  return expm_taylor_squaring<Work>(to_complex(a));
}

/// Reference test matrices.
namespace test_matrices {

/// [1 3; 2 4] diag(-1, -25) [1 3; 2 4]^-1
inline RealMatrix m1() { return RealMatrix{{-73.0, 36.0}, {-96.0, 47.0}}; }

inline RealMatrix m2() { return RealMatrix{{0.0, -1.0}, {1.0, 0.0}}; }

inline RealMatrix m3() {
  return RealMatrix{{-0.1, -0.2, -0.3, -0.4, -0.5},
                    {-0.6, -0.7, -0.8, -0.9, -1.0},
                    {0.1, 0.2, 0.3, 0.4, 0.5},
                    {0.6, 0.7, 0.8, 0.9, 1.0},
                    {1.0, 2.0, 3.0, 4.0, 0.0}};
}

inline ComplexMatrix m4() {
  using C = Complex;
  return ComplexMatrix{{C(1, 1), C(1, -1), C(0, 1)},
                       {C(1, 0), C(0, 2), C(0, 0)},
                       {C(1, 2), C(-1, 1), C(-1, -1)}};
}

inline RealMatrix unit2() { return RealMatrix::identity(2); }

}  // namespace test_matrices

/// Closed form of e^M1 from its eigen-decomposition.
inline ComplexMatrix exact_m1() {
  const double a = std::exp(-1.0);
  const double b = std::exp(-25.0);
  return ComplexMatrix{{Complex(-2.0 * a + 3.0 * b), Complex(1.5 * (a - b))},
                       {Complex(-4.0 * a + 4.0 * b), Complex(3.0 * a - 2.0 * b)}};
}

/// Rotation by one radian.
inline ComplexMatrix exact_m2() {
  const double c = std::cos(1.0);
  const double s = std::sin(1.0);
  return ComplexMatrix{{Complex(c), Complex(-s)}, {Complex(s), Complex(c)}};
}

/// e^I = e I for the 2x2 unit matrix.
inline ComplexMatrix exact_unit2() {
  return ComplexMatrix::identity(2) * Complex(std::exp(1.0));
}

inline OracleResult oracle_m1() { return {exact_m1(), OracleMethod::exact_m1}; }
inline OracleResult oracle_m2() { return {exact_m2(), OracleMethod::exact_m2}; }
inline OracleResult oracle_unit2() { return {exact_unit2(), OracleMethod::exact_identity}; }
inline OracleResult oracle_taylor(const ComplexMatrix& a) {
  return {expm_taylor_squaring(a), OracleMethod::taylor_squaring};
}

}  // namespace fete
