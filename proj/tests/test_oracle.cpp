#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oscspec/oracle.hpp"
#include "oscspec/series_identities.hpp"

using namespace oscspec;

namespace {
const MatrixElementTable& table80() {
  static const MatrixElementTable t = build_table(80, gauss_hermite_rule(176));
  return t;
}
}  // namespace

TEST_CASE("build_hamiltonian entries") {
  const MatrixElementTable t3 = build_table(3, gauss_hermite_rule(32));
  const HamiltonianMatrix free3 = build_hamiltonian({0.0, Sign::attractive}, t3);
  CHECK(free3(0, 0) == 0.5);
  CHECK(free3(1, 1) == 1.5);
  CHECK(free3(2, 2) == 2.5);
  CHECK(free3(0, 2) == 0.0);

  const MatrixElementTable t1 = build_table(1, gauss_hermite_rule(16));
  const HamiltonianMatrix h1 = build_hamiltonian({1.0, Sign::attractive}, t1);
  CHECK(h1(0, 0) == doctest::Approx(0.5 - 1.0 / std::numbers::sqrt2).epsilon(1e-14));

  const MatrixElementTable t2 = build_table(2, gauss_hermite_rule(24));
  const HamiltonianMatrix h2 = build_hamiltonian({0.5, Sign::repulsive}, t2);
  CHECK(h2(0, 0) == doctest::Approx(0.5 + 0.5 / std::numbers::sqrt2).epsilon(1e-14));
  CHECK(h2(1, 1) ==
        doctest::Approx(1.5 + 0.5 * std::numbers::sqrt2 / 4.0).epsilon(1e-13));
  CHECK(h2(0, 1) == 0.0);  // parity, exact
  CHECK(h2(1, 0) == 0.0);
}

TEST_CASE("free oscillator spectrum") {
  const MatrixElementTable t = build_table(10, gauss_hermite_rule(40));
  const auto ev = lowest_eigenvalues(build_hamiltonian({0.0, Sign::attractive}, t), 3);
  CHECK(ev[0].energy == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(ev[1].energy == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(ev[2].energy == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(ev[0].method == Method::oracle);
  CHECK_THROWS_AS(lowest_eigenvalues(build_hamiltonian({0.0, Sign::attractive}, t), 11),
                  std::invalid_argument);
}

TEST_CASE("ground state near the second-order expansion at small coupling") {
  const auto ev = lowest_eigenvalues(build_hamiltonian({0.2, Sign::attractive}, table80()), 1);
  const double p2 = 0.5 - 0.2 / std::numbers::sqrt2 -
                    0.04 * ln_8_minus_4_sqrt3() / 2.0;
  CHECK(std::abs(ev[0].energy - p2) < 2e-4);
}

TEST_CASE("truncation stability of the two lowest levels") {
  const QuadratureRule rule = gauss_hermite_rule(256);
  const MatrixElementTable t80 = build_table(80, rule);
  const MatrixElementTable t120 = build_table(120, rule);
  const CouplingSpec cs{0.7, Sign::attractive};
  const auto a = lowest_eigenvalues(build_hamiltonian(cs, t80), 2);
  const auto b = lowest_eigenvalues(build_hamiltonian(cs, t120), 2);
  CHECK(std::abs(a[0].energy - b[0].energy) < 1e-9);
  CHECK(std::abs(a[1].energy - b[1].energy) < 1e-9);
}

TEST_CASE("Rayleigh-Ritz monotonicity in the basis size") {
  const QuadratureRule rule = gauss_hermite_rule(176);
  for (Sign sign : {Sign::attractive, Sign::repulsive}) {
    double prev[3] = {1e9, 1e9, 1e9};
    for (int n : {20, 40, 60, 80}) {
      const MatrixElementTable t = build_table(n, rule);
      const auto ev = lowest_eigenvalues(build_hamiltonian({0.5, sign}, t), 3);
      for (int k = 0; k < 3; ++k) {
        CHECK(ev[k].energy <= prev[k] + 1e-12);
        prev[k] = ev[k].energy;
      }
    }
  }
}

TEST_CASE("parity labelling of the two lowest states") {
  for (Sign sign : {Sign::attractive, Sign::repulsive}) {
    for (double lam : {0.1, 0.5, 0.9}) {
      const auto pairs =
          lowest_eigenpairs(build_hamiltonian({lam, sign}, table80()), 2);
      CHECK(pairs[0].parity == 0);
      CHECK(pairs[1].parity == 1);
    }
  }
}

TEST_CASE("eigenpair residuals") {
  for (Sign sign : {Sign::attractive, Sign::repulsive}) {
    const HamiltonianMatrix h = build_hamiltonian({0.8, sign}, table80());
    double hnorm = 0.0;
    for (double v : h.entries) hnorm += v * v;
    hnorm = std::sqrt(hnorm);
    for (const EigenPair& p : lowest_eigenpairs(h, 3)) {
      double rnorm = 0.0;
      for (int i = 0; i < h.dim; ++i) {
        double hv = 0.0;
        for (int j = 0; j < h.dim; ++j) hv += h(i, j) * p.vector[j];
        const double r = hv - p.value * p.vector[i];
        rnorm += r * r;
      }
      CHECK(std::sqrt(rnorm) <= 1e-9 * hnorm);
    }
  }
}
