#include "oscspec/perturbation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oscspec/series_identities.hpp"

namespace oscspec {

namespace {

double level0_linear_mag() { return 1.0 / std::numbers::sqrt2; }
double level1_linear_mag() { return 3.0 * std::numbers::sqrt2 / 8.0; }
double level0_quadratic_mag() { return ln_8_minus_4_sqrt3() / 2.0; }
double level1_quadratic_mag() {
  return (2.0 * std::numbers::sqrt3 - 3.0 * (1.0 - ln_8_minus_4_sqrt3())) / 24.0;
}

void check_lambda(double lambda) {
  if (lambda < 0)
    throw std::invalid_argument("second order formulas: lambda must be >= 0");
}

}  // namespace

SecondOrderCoefficients second_order_coefficients(int level, Sign sign) {
  if (level != 0 && level != 1)
    throw std::invalid_argument("second_order_coefficients: level must be 0 or 1");
  SecondOrderCoefficients c;
  c.level = level;
  c.sign = sign;
  const double lin = level == 0 ? level0_linear_mag() : level1_linear_mag();
  c.linear = sign == Sign::attractive ? -lin : lin;
  c.quadratic = -(level == 0 ? level0_quadratic_mag() : level1_quadratic_mag());
  return c;
}

double e0_second_order(double lambda, Sign sign) {
  check_lambda(lambda);
  const SecondOrderCoefficients c = second_order_coefficients(0, sign);
  return 0.5 + c.linear * lambda + c.quadratic * lambda * lambda;
}

double e1_second_order(double lambda, Sign sign) {
  check_lambda(lambda);
  const SecondOrderCoefficients c = second_order_coefficients(1, sign);
  return 1.5 + c.linear * lambda + c.quadratic * lambda * lambda;
}

double epsilon0_from_series(double lambda) {
  check_lambda(lambda);
  const double s0 = ln_8_minus_4_sqrt3() / std::sqrt(std::numbers::pi);
  return lambda / std::numbers::sqrt2 +
         lambda * lambda * 0.5 * std::sqrt(std::numbers::pi) * s0;
}

}  // namespace oscspec
