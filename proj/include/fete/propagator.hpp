#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fete/chebyshev.hpp"
#include "fete/lu.hpp"
#include "fete/matrix.hpp"
#include "fete/mesh.hpp"

namespace fete {

inline constexpr std::size_t kDefaultElements = 8;
inline constexpr std::size_t kDefaultBasis = 8;

/// Composite index of coefficient (mu, k) in the n*m element system; basis-major.
inline std::size_t composite_index(std::size_t mu, std::size_t k, std::size_t n) noexcept {
  return mu * n + k;
}

/// Element system matrix
///   Omega((mu', i), (mu, k)) = q C(mu', mu) delta_ik - A_ik D(mu', mu).
template <typename Real>
Matrix<std::complex<Real>> assemble_omega(const Matrix<std::complex<Real>>& a,
                                          std::type_identity_t<Real> q,
                                          const BasicBasisTables<Real>& tables) {
  using Scalar = std::complex<Real>;
  if (!a.is_square()) throw DimensionError("assemble_omega: coefficient matrix must be square");
  const std::size_t n = a.rows();
  const std::size_t m = tables.m;
  Matrix<Scalar> omega(n * m, n * m);
  for (std::size_t row_mu = 0; row_mu < m; ++row_mu) {
    for (std::size_t col_mu = 0; col_mu < m; ++col_mu) {
      const Real c = tables.C(row_mu, col_mu);
      const Real d = tables.D(row_mu, col_mu);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          Scalar v = -(a(i, k) * d);
          if (i == k) v += q * c;
          omega(composite_index(row_mu, i, n), composite_index(col_mu, k, n)) = v;
        }
      }
    }
  }
  return omega;
}

/// Right-hand side for column j: Gamma(mu', i) = g(mu') sum_k A_ik Psi_kj.
template <typename Real>
std::vector<std::complex<Real>> assemble_gamma(const Matrix<std::complex<Real>>& a,
                                               const Matrix<std::complex<Real>>& psi_prev,
                                               const std::vector<Real>& g, std::size_t j) {
  using Scalar = std::complex<Real>;
  if (!a.is_square()) throw DimensionError("assemble_gamma: coefficient matrix must be square");
  const std::size_t n = a.rows();
  if (psi_prev.rows() != n || psi_prev.cols() != n) {
    throw DimensionError("assemble_gamma: previous solution must be " + std::to_string(n) + "x" +
                         std::to_string(n));
  }
  if (j >= n) throw DimensionError("assemble_gamma: column index out of range");
  if (g.empty()) throw DimensionError("assemble_gamma: empty projection vector");

  std::vector<Scalar> a_psi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Scalar acc{};
    for (std::size_t k = 0; k < n; ++k) acc += a(i, k) * psi_prev(k, j);
    a_psi[i] = acc;
  }
  std::vector<Scalar> gamma(n * g.size());
  for (std::size_t mu = 0; mu < g.size(); ++mu)
    for (std::size_t i = 0; i < n; ++i) gamma[composite_index(mu, i, n)] = g[mu] * a_psi[i];
  return gamma;
}

/// The factored element system. Valid only for the (A, q, m) it was built from;
/// shared read-only by every element of a uniform mesh.
template <typename Real>
class BasicPropagatorFactorization {
 public:
  using Scalar = std::complex<Real>;

  BasicPropagatorFactorization(const Matrix<Scalar>& a, Real q, BasicBasisTables<Real> tables)
      : n_(a.rows()),
        q_(q),
        tables_(std::move(tables)),
        omega_(assemble_omega(a, q, tables_)),
        omega_lu_(lu_factor(omega_)) {}

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return tables_.m; }
  Real q() const noexcept { return q_; }
  const BasicBasisTables<Real>& tables() const noexcept { return tables_; }
  const Matrix<Scalar>& omega() const noexcept { return omega_; }
  const LuFactorization<Scalar>& omega_lu() const noexcept { return omega_lu_; }

 private:
  std::size_t n_;
  Real q_;
  BasicBasisTables<Real> tables_;
  Matrix<Scalar> omega_;
  LuFactorization<Scalar> omega_lu_;
};

using PropagatorFactorization = BasicPropagatorFactorization<double>;

template <typename Real>
struct ElementStep {
  Matrix<std::complex<Real>> psi;  // solution at the element's right node
  double residual = 0.0;           // worst-column infinity norm of Omega B - Gamma
};

/// Advances Psi across one element: solve Omega B^j = Gamma^j for every column
/// j, then Psi_ij(+1) = sum_mu B_mu^ij s_mu(+1) + Psi_prev_ij.
template <typename Real>
ElementStep<Real> propagate_element_with_residual(const BasicPropagatorFactorization<Real>& fact,
                                                  const Matrix<std::complex<Real>>& a,
                                                  const Matrix<std::complex<Real>>& psi_prev) {
  using Scalar = std::complex<Real>;
  const std::size_t n = fact.n();
  if (!a.is_square() || a.rows() != n) {
    throw DimensionError("propagate_element: coefficient matrix does not match factorization");
  }
  const auto& tables = fact.tables();
  ElementStep<Real> step{psi_prev, 0.0};
  for (std::size_t j = 0; j < n; ++j) {
    const std::vector<Scalar> gamma = assemble_gamma(a, psi_prev, tables.g, j);
    const std::vector<Scalar> coeffs = fact.omega_lu().solve(gamma);

    const std::vector<Scalar> applied = mat_vec(fact.omega(), coeffs);
    for (std::size_t r = 0; r < applied.size(); ++r)
      step.residual = std::max(step.residual, static_cast<double>(std::abs(applied[r] - gamma[r])));

    // s_mu(+1) vanishes for odd mu, so only even coefficients contribute.
    for (std::size_t i = 0; i < n; ++i) {
      Scalar acc{};
      for (std::size_t mu = 0; mu < tables.m; mu += 2)
        acc += coeffs[composite_index(mu, i, n)] * tables.s_plus_one[mu];
      step.psi(i, j) = acc + psi_prev(i, j);
    }
  }
  return step;
}

template <typename Real>
Matrix<std::complex<Real>> propagate_element(const BasicPropagatorFactorization<Real>& fact,
                                             const Matrix<std::complex<Real>>& a,
                                             const Matrix<std::complex<Real>>& psi_prev) {
  return propagate_element_with_residual(fact, a, psi_prev).psi;
}

struct ExpmReport {
  ComplexMatrix result;
  std::size_t num_elements = 0;
  std::size_t num_basis = 0;
  std::vector<double> residuals;  // one per element
};

/// e^A as Psi(1) of dPsi/dt = A Psi, Psi(0) = I, with finite elements in time on
/// a uniform mesh and one factorization of the element system shared by all
/// elements.
///
/// Work is the arithmetic used for assembly, factorization and propagation.
/// The default long double keeps the O(|A| eps) cancellation in A Psi from
/// swamping the truncation error on stiff inputs; the result is rounded to
/// double. Work = double gives a plain double-precision run.
template <typename Work = long double>
ExpmReport expm_fete(const ComplexMatrix& a, std::size_t num_elements = kDefaultElements,
                     std::size_t num_basis = kDefaultBasis) {
  using Scalar = std::complex<Work>;
  if (!a.is_square()) throw DimensionError("expm_fete: matrix must be square");
  if (num_elements < 1) throw std::invalid_argument("expm_fete: need at least one time element");
  if (num_basis < 1) throw std::invalid_argument("expm_fete: need at least one basis function");
  a.require_finite("expm_fete");

  const TimeMesh mesh = uniform_mesh(num_elements);
  const Matrix<Scalar> work_a = matrix_cast<Scalar>(a);
  const BasicPropagatorFactorization<Work> fact(work_a, static_cast<Work>(mesh.scale(0)),
                                                build_tables<Work>(num_basis));

  ExpmReport report;
  report.num_elements = num_elements;
  report.num_basis = num_basis;
  report.residuals.reserve(num_elements);
  Matrix<Scalar> psi = Matrix<Scalar>::identity(a.rows());
  for (std::size_t e = 0; e < num_elements; ++e) {
    ElementStep<Work> step = propagate_element_with_residual(fact, work_a, psi);
    psi = std::move(step.psi);
    report.residuals.push_back(step.residual);
  }
  report.result = matrix_cast<Complex>(psi);
  report.result.require_finite("expm_fete");
  return report;
}

template <typename Work = long double>
ExpmReport expm_fete(const RealMatrix& a, std::size_t num_elements = kDefaultElements,
                     std::size_t num_basis = kDefaultBasis) {
  return expm_fete<Work>(to_complex(a), num_elements, num_basis);
}

}  // namespace fete
