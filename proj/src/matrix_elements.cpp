#include "oscspec/matrix_elements.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace oscspec {

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

// psi_k(u/sqrt(2)) * e^{-u^2/4} for k = 0..kmax at every node u of the rule.
// With the normalized weights this keeps every intermediate bounded.
std::vector<double> scaled_psi_at_nodes(int kmax, const QuadratureRule& rule) {
  const int q = rule.order;
  std::vector<double> t(static_cast<size_t>(kmax + 1) * q);
  for (int i = 0; i < q; ++i) {
    const double x = rule.nodes[i] / std::numbers::sqrt2;
    const double damp = std::exp(-0.25 * rule.nodes[i] * rule.nodes[i]);
    double pm = std::exp(-0.5 * x * x) / std::sqrt(kSqrtPi);
    t[i] = pm * damp;
    if (kmax == 0) continue;
    double p = std::numbers::sqrt2 * x * pm;
    t[q + i] = p * damp;
    for (int k = 1; k < kmax; ++k) {
      const double pp =
          x * std::sqrt(2.0 / (k + 1)) * p - std::sqrt(k / (k + 1.0)) * pm;
      pm = p;
      p = pp;
      t[static_cast<size_t>(k + 1) * q + i] = p * damp;
    }
  }
  return t;
}

}  // namespace

double gaussian_element(int m, int n, const QuadratureRule& rule) {
  if (m < 0 || n < 0)
    throw std::invalid_argument("gaussian_element: indices must be >= 0");
  if ((m + n) % 2 == 1) return 0.0;
  if (rule.order < m + n + 8)
    throw std::invalid_argument(
        "gaussian_element: quadrature order " + std::to_string(rule.order) +
        " insufficient for (m, n) = (" + std::to_string(m) + ", " +
        std::to_string(n) + "); need >= m+n+8");
  const int kmax = std::max(m, n);
  const std::vector<double> t = scaled_psi_at_nodes(kmax, rule);
  const int q = rule.order;
  double s = 0.0;
  for (int i = 0; i < q; ++i)
    s += rule.normalized_weights[i] * t[static_cast<size_t>(m) * q + i] *
         t[static_cast<size_t>(n) * q + i];
  return s / std::numbers::sqrt2;
}

double gaussian_element_closed_0_2n(int n) {
  if (n < 0) throw std::invalid_argument("closed_0_2n: n must be >= 0");
  const double sq =
      psi_even_sq_at_zero(n) / (std::exp2(2.0 * n + 1.0) * kSqrtPi);
  return kSqrtPi * std::sqrt(sq);
}

double gaussian_element_closed_1_odd(int n) {
  if (n < 0) throw std::invalid_argument("closed_1_odd: n must be >= 0");
  const double sq = (n + 1.0) * psi_even_sq_at_zero(n + 1) /
                    (std::exp2(2.0 * (n + 1.0)) * kSqrtPi);
  return kSqrtPi * std::sqrt(sq);
}

double gaussian_element_diagonal(int n) {
  if (n < 0) throw std::invalid_argument("diagonal: n must be >= 0");
  double r = 1.0;  // C(2k,k)/4^k
  for (int k = 1; k <= n; ++k) r *= (2.0 * k - 1.0) / (2.0 * k);
  return r / std::numbers::sqrt2;
}

MatrixElementTable build_table(int dim, const QuadratureRule& rule) {
  if (dim < 1) throw std::invalid_argument("build_table: dim must be >= 1");
  if (rule.order < 2 * dim + 8)
    throw std::invalid_argument("build_table: quadrature order " +
                                std::to_string(rule.order) +
                                " insufficient for dim " + std::to_string(dim) +
                                "; need >= 2*dim+8");
  MatrixElementTable table;
  table.dim = dim;
  table.values.assign(static_cast<size_t>(dim) * dim, 0.0);
  const std::vector<double> t = scaled_psi_at_nodes(dim - 1, rule);
  const int q = rule.order;
  for (int m = 0; m < dim; ++m) {
    for (int n = m; n < dim; n += 2) {  // same parity only; rest stay 0
      double s = 0.0;
      const double* tm = &t[static_cast<size_t>(m) * q];
      const double* tn = &t[static_cast<size_t>(n) * q];
      for (int i = 0; i < q; ++i) s += rule.normalized_weights[i] * tm[i] * tn[i];
      s /= std::numbers::sqrt2;
      table.values[static_cast<size_t>(m) * dim + n] = s;
      table.values[static_cast<size_t>(n) * dim + m] = s;
    }
  }
  return table;
}

}  // namespace oscspec
