#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oscspec/oracle.hpp"
#include "oscspec/perturbation.hpp"
#include "oscspec/series_identities.hpp"

using namespace oscspec;

TEST_CASE("second-order formulas at lambda = 0") {
  CHECK(e0_second_order(0.0, Sign::attractive) == 0.5);
  CHECK(e0_second_order(0.0, Sign::repulsive) == 0.5);
  CHECK(e1_second_order(0.0, Sign::attractive) == 1.5);
  CHECK(e1_second_order(0.0, Sign::repulsive) == 1.5);
  CHECK_THROWS_AS(e0_second_order(-0.1, Sign::attractive), std::invalid_argument);
}

TEST_CASE("printed coefficient pairs at three decimals") {
  const SecondOrderCoefficients c0 = second_order_coefficients(0, Sign::attractive);
  const SecondOrderCoefficients c1 = second_order_coefficients(1, Sign::attractive);
  CHECK(std::round(std::abs(c0.linear) * 1000.0) == 707.0);
  CHECK(std::round(std::abs(c0.quadratic) * 1000.0) == 35.0);
  CHECK(std::round(std::abs(c1.linear) * 1000.0) == 530.0);
  CHECK(std::round(std::abs(c1.quadratic) * 1000.0) == 28.0);
  CHECK(std::abs(c0.linear) == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-15));
  CHECK(std::abs(c1.linear) ==
        doctest::Approx(3.0 * std::numbers::sqrt2 / 8.0).epsilon(1e-15));
}

TEST_CASE("formula values away from zero") {
  // level 0 at lambda = 1: 0.5 - 0.707... - 0.0347...
  CHECK(e0_second_order(1.0, Sign::attractive) ==
        doctest::Approx(-0.242).epsilon(2e-3));
  CHECK(e1_second_order(1.0, Sign::attractive) ==
        doctest::Approx(0.942).epsilon(1e-3));
  const double q1 = std::abs(second_order_coefficients(1, Sign::repulsive).quadratic);
  CHECK(e1_second_order(0.5, Sign::repulsive) ==
        doctest::Approx(1.5 + 0.5 * 3.0 * std::numbers::sqrt2 / 8.0 - 0.25 * q1)
            .epsilon(1e-15));
  CHECK(e0_second_order(0.1, Sign::repulsive) ==
        doctest::Approx(0.5 + 0.1 / std::numbers::sqrt2 -
                        0.01 * ln_8_minus_4_sqrt3() / 2.0)
            .epsilon(1e-15));
}

TEST_CASE("sign structure") {
  for (int level : {0, 1}) {
    const SecondOrderCoefficients att = second_order_coefficients(level, Sign::attractive);
    const SecondOrderCoefficients rep = second_order_coefficients(level, Sign::repulsive);
    CHECK(att.linear == -rep.linear);
    CHECK(att.linear < 0.0);
    CHECK(att.quadratic == rep.quadratic);
    CHECK(att.quadratic < 0.0);
  }
}

TEST_CASE("epsilon0_from_series coincides with the level-0 formula") {
  for (double lam : {0.0, 0.1, 0.37, 0.8, 1.0}) {
    const double a = epsilon0_from_series(lam);
    const double b = 0.5 - e0_second_order(lam, Sign::attractive);
    CHECK(std::abs(a - b) <= 1e-15 * std::max(1.0, std::abs(a)));
  }
  CHECK(epsilon0_from_series(0.0) == 0.0);
  CHECK(epsilon0_from_series(1.0) ==
        doctest::Approx(1.0 / std::numbers::sqrt2 + ln_8_minus_4_sqrt3() / 2.0)
            .epsilon(1e-15));
}

TEST_CASE("epsilon0_from_series against the fixed point") {
  const MatrixElementTable t = build_table(80, gauss_hermite_rule(176));
  const EnergyResult r = rank_one_epsilon0({0.37, Sign::attractive}, t, 1e-12);
  CHECK(std::abs(epsilon0_from_series(0.37) - (0.5 - r.energy)) < 5e-3);
}

TEST_CASE("level-0 formula tracks the oracle to cubic order") {
  const MatrixElementTable t = build_table(80, gauss_hermite_rule(176));
  for (Sign sign : {Sign::attractive, Sign::repulsive}) {
    for (double lam : {0.02, 0.05, 0.1}) {
      const double oracle =
          lowest_eigenvalues(build_hamiltonian({lam, sign}, t), 1)[0].energy;
      CHECK(std::abs(e0_second_order(lam, sign) - oracle) <= 0.5 * lam * lam * lam);
    }
  }
}

TEST_CASE("observed first-order slope of the first excited level") {
  // The diagonal element (psi_1, e^{-x^2} psi_1) = sqrt(2)/4 sets the true
  // linear response; the printed 3 sqrt(2)/8 coefficient overshoots it.
  const MatrixElementTable t = build_table(80, gauss_hermite_rule(176));
  const double lam = 0.02;
  const double e1 =
      lowest_eigenvalues(build_hamiltonian({lam, Sign::attractive}, t), 2)[1].energy;
  const double slope = (1.5 - e1) / lam;
  CHECK(slope == doctest::Approx(std::numbers::sqrt2 / 4.0).epsilon(5e-3));
  const double c1 = std::abs(second_order_coefficients(1, Sign::attractive).linear);
  CHECK(std::abs(slope - c1) > 0.17);
}
