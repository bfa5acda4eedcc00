#pragma once

#include <vector>

#include "oscspec/special_functions.hpp"

namespace oscspec {

/// Symmetric table of Gaussian-potential matrix elements
/// V[m][n] = (psi_m, e^{-x^2} psi_n) in the oscillator basis.
/// Entries with m+n odd are exact zeros (parity selection rule) and
/// |V[m][n]| <= 1 throughout since 0 < e^{-x^2} <= 1.
struct MatrixElementTable {
  int dim = 0;
  std::vector<double> values;  // dim x dim, stored fully symmetric

  double operator()(int m, int n) const {
    return values[static_cast<size_t>(m) * dim + n];
  }
};

/// Single element (psi_m, e^{-x^2} psi_n) by Gauss-Hermite quadrature after
/// the substitution u = sqrt(2) x, which makes the integrand a polynomial of
/// degree m+n against e^{-u^2} (hence exact). Requires rule order >= m+n+8.
/// Returns exact 0 for odd m+n without touching the quadrature.
double gaussian_element(int m, int n, const QuadratureRule& rule);

/// |(psi_0, e^{-x^2} psi_{2n})| from the closed form
/// (psi_0, psi_0^2 psi_{2n})^2 = psi_{2n}^2(0) / (2^{2n+1} sqrt(pi)).
/// The sign of the element itself alternates as (-1)^n with H_{2n}(0).
double gaussian_element_closed_0_2n(int n);

/// |(psi_1, e^{-x^2} psi_{2n+1})| from the closed form
/// (psi_1, psi_0^2 psi_{2n+1})^2 = (n+1) psi_{2(n+1)}^2(0) / (2^{2(n+1)} sqrt(pi)).
/// Sign alternates as (-1)^n; n = 0 gives the diagonal element (psi_1, e^{-x^2} psi_1).
double gaussian_element_closed_1_odd(int n);

/// Diagonal element (psi_n, e^{-x^2} psi_n) = sqrt(pi/2) psi_{2n}^2(0)
/// = C(2n,n) / (4^n sqrt(2)), via a stable ratio recurrence.
double gaussian_element_diagonal(int n);

/// Full symmetric table; parity zeros inserted exactly.
/// Requires rule order >= 2*dim + 8.
MatrixElementTable build_table(int dim, const QuadratureRule& rule);

}  // namespace oscspec
