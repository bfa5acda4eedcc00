#pragma once

#include <vector>

namespace oscspec {

/// Physicists' Hermite polynomial H_n(x) by upward three-term recurrence,
/// H_{k+1} = 2x H_k - 2k H_{k-1}. Stable for the desk-scale range used here
/// (n <~ 150, |x| <~ 8); values overflow double well beyond that.
double hermite_eval(int n, double x);

/// Normalised harmonic-oscillator eigenfunction
///   psi_n(x) = (2^n n! sqrt(pi))^{-1/2} e^{-x^2/2} H_n(x),
/// evaluated with the orthonormal recurrence (no factorials formed).
double psi_eval(int n, double x);

/// psi_{2n}(0)^2 = (2n)! / (2^{2n} (n!)^2 sqrt(pi)), evaluated in the log
/// domain and exponentiated once, so large n neither overflows nor underflows
/// prematurely.
double psi_even_sq_at_zero(int n);

/// log Gamma(x) for x > 0 (Lanczos, g = 607/128, 15 terms).
double log_gamma(double x);

/// Gamma(x). Poles at non-positive integers raise std::domain_error;
/// negative non-integer arguments go through the reflection formula.
/// Relative accuracy is ~1e-13 on (0, 50].
double gamma_fn(double x);

/// Gauss-Hermite rule for integrals of the form  int f(x) e^{-x^2} dx.
///
/// `weights[i]` is the usual weight; `normalized_weights[i] = weights[i] *
/// exp(nodes[i]^2)` is computed directly from the Christoffel sum
/// 1/sum_k psi_k(x_i)^2 and never underflows. For order >~ 370 the extreme
/// raw weights fall below the smallest subnormal double and are stored as 0;
/// every integrand used in this project carries e^{-x^2}-class decay, so
/// those nodes contribute nothing representable anyway.
struct QuadratureRule {
  std::vector<double> nodes;               // strictly increasing, symmetric about 0
  std::vector<double> weights;             // positive (see note above), sum = sqrt(pi)
  std::vector<double> normalized_weights;  // weights * exp(nodes^2)
  int order = 0;
};

inline constexpr int kMaxQuadratureOrder = 448;

/// Nodes and weights by Newton iteration from asymptotic initial guesses.
/// Exact for polynomials of degree <= 2*order - 1. order in [1, 448].
QuadratureRule gauss_hermite_rule(int order);

}  // namespace oscspec
