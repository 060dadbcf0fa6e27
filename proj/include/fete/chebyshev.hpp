#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "fete/matrix.hpp"

namespace fete {

namespace detail {

template <typename Real>
void check_local_time(Real tau, const char* where) {
  if (!(std::abs(tau) <= Real(1))) {
    throw std::domain_error(std::string(where) + ": local time " +
                            std::to_string(static_cast<double>(tau)) + " outside [-1, 1]");
  }
}

template <typename Real>
Real unchecked_T(unsigned mu, Real tau) {
  if (mu == 0) return Real(1);
  Real prev = Real(1);
  Real cur = tau;
  for (unsigned k = 1; k < mu; ++k) {
    const Real next = Real(2) * tau * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

template <typename Real>
Real alternating_sign(unsigned k) {
  return (k % 2 == 0) ? Real(1) : Real(-1);
}

}  // namespace detail

/// Chebyshev polynomial of the first kind, by forward recurrence.
template <typename Real = double>
Real eval_T(unsigned mu, std::type_identity_t<Real> tau) {
  detail::check_local_time(tau, "eval_T");
  return detail::unchecked_T(mu, tau);
}

/// Integrated basis function s_mu(tau) = integral of T_mu from -1 to tau.
template <typename Real = double>
Real eval_s(unsigned mu, std::type_identity_t<Real> tau) {
  detail::check_local_time(tau, "eval_s");
  if (mu == 0) return tau + Real(1);
  if (mu == 1) return Real(0.5) * (tau * tau - Real(1));
  const Real up = Real(mu) + Real(1);
  const Real down = Real(mu) - Real(1);
  const Real at_tau = Real(0.5) * (detail::unchecked_T(mu + 1, tau) / up -
                                   detail::unchecked_T(mu - 1, tau) / down);
  const Real at_minus_one = Real(0.5) * (detail::alternating_sign<Real>(mu + 1) / up -
                                         detail::alternating_sign<Real>(mu - 1) / down);
  return at_tau - at_minus_one;
}

/// Chebyshev-series coefficients of s_mu: s_mu = sum_k c[k] T_k, k = 0..mu+1.
template <typename Real = double>
std::vector<Real> integrated_basis_coefficients(unsigned mu) {
  std::vector<Real> c(mu + 2, Real(0));
  if (mu == 0) {
    c[0] = Real(1);
    c[1] = Real(1);
  } else if (mu == 1) {
    // (tau^2 - 1)/2 = T2/4 - T0/4
    c[0] = Real(-0.25);
    c[2] = Real(0.25);
  } else {
    const Real mm = static_cast<Real>(mu);
    c[mu + 1] = Real(0.5) / (mm + Real(1));
    c[mu - 1] = Real(-0.5) / (mm - Real(1));
    c[0] = -detail::alternating_sign<Real>(mu) / (mm * mm - Real(1));
  }
  return c;
}

/// Projection tables of the weighted Galerkin system on one element, for
/// basis indices 0..m-1 and weight (1 - tau^2)^(-1/2).
template <typename Real>
struct BasicBasisTables {
  std::size_t m = 0;
  Matrix<Real> C;                // C(a, b) = <s_a, T_b>_w
  Matrix<Real> D;                // D(a, b) = <s_a, s_b>_w
  std::vector<Real> g;           // g(a)    = <s_a, T_0>_w
  std::vector<Real> s_plus_one;  // s_a(+1)
};

using BasisTables = BasicBasisTables<double>;

/// Builds the tables analytically: expand every s_mu in Chebyshev polynomials
/// and use <T_a, T_b>_w = pi (a = b = 0), pi/2 (a = b > 0), 0 otherwise.
template <typename Real = double>
BasicBasisTables<Real> build_tables(std::size_t m) {
  if (m < 1) throw std::invalid_argument("build_tables: basis count must be >= 1");

  // s_0..s_{m-1} reach T_m at most.
  const std::size_t len = m + 1;
  std::vector<std::vector<Real>> coeff(m, std::vector<Real>(len, Real(0)));
  for (std::size_t mu = 0; mu < m; ++mu) {
    const auto c = integrated_basis_coefficients<Real>(static_cast<unsigned>(mu));
    for (std::size_t k = 0; k < c.size(); ++k) coeff[mu][k] = c[k];
  }
  const Real pi = std::numbers::pi_v<Real>;
  auto norm = [pi](std::size_t k) { return k == 0 ? pi : pi / Real(2); };

  BasicBasisTables<Real> t;
  t.m = m;
  t.C = Matrix<Real>(m, m);
  t.D = Matrix<Real>(m, m);
  t.g.assign(m, Real(0));
  t.s_plus_one.assign(m, Real(0));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      t.C(a, b) = coeff[a][b] * norm(b);
      Real acc = Real(0);
      for (std::size_t k = 0; k < len; ++k) acc += (coeff[a][k] * coeff[b][k]) * norm(k);
      t.D(a, b) = acc;
    }
    t.g[a] = t.C(a, 0);
    t.s_plus_one[a] = eval_s<Real>(static_cast<unsigned>(a), Real(1));
  }
  return t;
}

}  // namespace fete
