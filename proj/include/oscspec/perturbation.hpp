#pragma once

#include "oscspec/birman_schwinger.hpp"

namespace oscspec {

/// Signed second-order expansion coefficients: E(lambda) ~ (level + 1/2)
/// + linear*lambda + quadratic*lambda^2. The quadratic term is negative for
/// both signs; the linear term carries the coupling sign.
struct SecondOrderCoefficients {
  double linear = 0.0;
  double quadratic = 0.0;
  int level = 0;
  Sign sign = Sign::attractive;
};

SecondOrderCoefficients second_order_coefficients(int level, Sign sign);

/// E0(lambda) = 1/2 -+ lambda/sqrt(2) - lambda^2 ln(8-4 sqrt 3)/2.
double e0_second_order(double lambda, Sign sign);

/// E1(lambda) = 3/2 -+ (3 sqrt(2)/8) lambda - q lambda^2 with
/// q = (2 sqrt 3 - 3(1 - ln(8-4 sqrt 3)))/24.
double e1_second_order(double lambda, Sign sign);

/// eps0(lambda) = lambda/sqrt(2) + lambda^2 (sqrt(pi)/2) S0; identically
/// 1/2 - e0_second_order(lambda, attractive).
double epsilon0_from_series(double lambda);

}  // namespace oscspec
