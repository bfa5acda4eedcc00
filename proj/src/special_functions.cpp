#include "oscspec/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace oscspec {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);

// Lanczos, g = 607/128, 15 coefficients (Godfrey's set).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

double lanczos_log_gamma(double x) {
  double s = kLanczos[0];
  for (int k = 1; k < 15; ++k) s += kLanczos[k] / (x - 1.0 + k);
  const double t = x - 0.5 + kLanczosG;
  return 0.5 * std::log(2.0 * kPi) + (x - 0.5) * std::log(t) - t + std::log(s);
}

}  // namespace

double hermite_eval(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite_eval: n must be >= 0");
  if (n == 0) return 1.0;
  double hm = 1.0;        // H_0
  double h = 2.0 * x;     // H_1
  for (int k = 1; k < n; ++k) {
    const double hp = 2.0 * x * h - 2.0 * k * hm;
    hm = h;
    h = hp;
  }
  return h;
}

double psi_eval(int n, double x) {
  if (n < 0) throw std::invalid_argument("psi_eval: n must be >= 0");
  const double p0 = std::exp(-0.5 * x * x) / std::sqrt(kSqrtPi);
  if (n == 0) return p0;
  double pm = p0;
  double p = std::numbers::sqrt2 * x * p0;  // psi_1
  for (int k = 1; k < n; ++k) {
    const double pp =
        x * std::sqrt(2.0 / (k + 1)) * p - std::sqrt(k / (k + 1.0)) * pm;
    pm = p;
    p = pp;
  }
  return p;
}

double psi_even_sq_at_zero(int n) {
  if (n < 0) throw std::invalid_argument("psi_even_sq_at_zero: n must be >= 0");
  if (n == 0) return 1.0 / kSqrtPi;
  const double lg = log_gamma(2.0 * n + 1.0) - 2.0 * n * std::numbers::ln2 -
                    2.0 * log_gamma(n + 1.0) - 0.5 * std::log(kPi);
  return std::exp(lg);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
  return lanczos_log_gamma(x);
}

double gamma_fn(double x) {
  if (x <= 0.0 && x == std::floor(x))
    throw std::domain_error("gamma_fn: pole at non-positive integer x = " +
                            std::to_string(x));
  if (x >= 0.5) return std::exp(lanczos_log_gamma(x));
  // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
  return kPi / (std::sin(kPi * x) * std::exp(lanczos_log_gamma(1.0 - x)));
}

QuadratureRule gauss_hermite_rule(int order) {
  if (order < 1 || order > kMaxQuadratureOrder)
    throw std::invalid_argument("gauss_hermite_rule: order must be in [1, " +
                                std::to_string(kMaxQuadratureOrder) + "]");
  QuadratureRule rule;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  rule.normalized_weights.resize(order);

  if (order == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = kSqrtPi;
    rule.normalized_weights[0] = kSqrtPi;
    return rule;
  }

  // psi_n and psi_{n-1} at x; both bounded, so Newton never sees overflow.
  const int n = order;
  auto psi_pair = [n](double x, double& pn, double& pnm1) {
    double pm = std::exp(-0.5 * x * x) / std::sqrt(kSqrtPi);
    double p = std::numbers::sqrt2 * x * pm;
    for (int k = 1; k < n; ++k) {
      const double pp =
          x * std::sqrt(2.0 / (k + 1)) * p - std::sqrt(k / (k + 1.0)) * pm;
      pm = p;
      p = pp;
    }
    pn = p;
    pnm1 = pm;
  };

  const int m = (n + 1) / 2;  // roots on the non-negative half axis
  std::vector<double> z(m);
  for (int i = 0; i < m; ++i) {
    double zi;
    if (i == 0) {
      zi = std::sqrt(2.0 * n + 1.0) -
           1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      zi = z[0] - 1.14 * std::pow(n, 0.426) / z[0];
    } else if (i == 2) {
      zi = 1.86 * z[1] - 0.86 * z[0];
    } else if (i == 3) {
      zi = 1.91 * z[2] - 0.91 * z[1];
    } else {
      zi = 2.0 * z[i - 1] - z[i - 2];
    }
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      double pn, pnm1;
      psi_pair(zi, pn, pnm1);
      // psi_n'(x) = sqrt(2n) psi_{n-1}(x) - x psi_n(x)
      const double dpn = std::sqrt(2.0 * n) * pnm1 - zi * pn;
      const double step = pn / dpn;
      zi -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(zi))) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw std::runtime_error("gauss_hermite_rule: Newton failed at order " +
                               std::to_string(order));
    z[i] = zi;
  }
  if (n % 2 == 1) z[m - 1] = 0.0;  // centre root is exact by symmetry

  for (int i = 0; i + 1 < m; ++i)
    if (!(z[i] > z[i + 1]))
      throw std::runtime_error("gauss_hermite_rule: nodes out of order");

  // Christoffel weights: w = exp(-x^2) / sum_{k<n} psi_k(x)^2.
  auto fill = [&](int idx, double x) {
    double pm = std::exp(-0.5 * x * x) / std::sqrt(kSqrtPi);
    double p = std::numbers::sqrt2 * x * pm;
    double s = pm * pm;
    for (int k = 1; k < n; ++k) {
      s += p * p;
      const double pp =
          x * std::sqrt(2.0 / (k + 1)) * p - std::sqrt(k / (k + 1.0)) * pm;
      pm = p;
      p = pp;
    }
    rule.nodes[idx] = x;
    rule.normalized_weights[idx] = 1.0 / s;
    rule.weights[idx] = std::exp(-x * x) / s;
  };
  for (int i = 0; i < m; ++i) {
    fill(n - 1 - i, z[i]);
    fill(i, -z[i]);
  }
  return rule;
}

}  // namespace oscspec
