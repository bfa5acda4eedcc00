#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oscspec/dense.hpp"

using namespace oscspec;

TEST_CASE("lu_det known matrices") {
  Matrix a(2);
  a.at(0, 0) = 1.0; a.at(0, 1) = 2.0;
  a.at(1, 0) = 3.0; a.at(1, 1) = 4.0;
  CHECK(lu_det(a) == doctest::Approx(-2.0).epsilon(1e-14));

  Matrix b(3);
  b.at(0, 0) = 2.0; b.at(0, 1) = -1.0; b.at(0, 2) = 0.0;
  b.at(1, 0) = -1.0; b.at(1, 1) = 2.0; b.at(1, 2) = -1.0;
  b.at(2, 0) = 0.0; b.at(2, 1) = -1.0; b.at(2, 2) = 2.0;
  CHECK(lu_det(b) == doctest::Approx(4.0).epsilon(1e-14));

  Matrix s(2);  // singular
  s.at(0, 0) = 1.0; s.at(0, 1) = 2.0;
  s.at(1, 0) = 2.0; s.at(1, 1) = 4.0;
  CHECK(lu_det(s) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("lu_solve round trip") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Matrix a(12);
  for (int i = 0; i < 12; ++i) {
    for (int j = 0; j < 12; ++j) a.at(i, j) = dist(rng);
    a.at(i, i) += 4.0;
  }
  std::vector<double> x_ref(12);
  for (double& v : x_ref) v = dist(rng);
  std::vector<double> b(12, 0.0);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) b[i] += a.at(i, j) * x_ref[j];
  const std::vector<double> x = lu_solve(a, b);
  for (int i = 0; i < 12; ++i)
    CHECK(x[i] == doctest::Approx(x_ref[i]).epsilon(1e-12));

  Matrix s(2);
  s.at(0, 0) = 1.0; s.at(0, 1) = 1.0;
  s.at(1, 0) = 1.0; s.at(1, 1) = 1.0;
  CHECK_THROWS_AS(lu_solve(s, {1.0, 2.0}), std::runtime_error);
}

TEST_CASE("jacobi_eigensolve random symmetric") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const int n = 10;
  Matrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double v = dist(rng);
      a.at(i, j) = v;
      a.at(j, i) = v;
    }
  const EigenResult res = jacobi_eigensolve(a);
  double trace = 0.0, sum = 0.0;
  for (int i = 0; i < n; ++i) {
    trace += a.at(i, i);
    sum += res.values[i];
    if (i > 0) CHECK(res.values[i] >= res.values[i - 1]);
  }
  CHECK(sum == doctest::Approx(trace).epsilon(1e-12));
  // residuals and orthonormality
  for (int j = 0; j < n; ++j) {
    double rnorm = 0.0;
    for (int i = 0; i < n; ++i) {
      double hv = 0.0;
      for (int k = 0; k < n; ++k) hv += a.at(i, k) * res.vectors.at(k, j);
      const double r = hv - res.values[j] * res.vectors.at(i, j);
      rnorm += r * r;
    }
    CHECK(std::sqrt(rnorm) <= 1e-12);
    for (int j2 = 0; j2 <= j; ++j2) {
      double dot = 0.0;
      for (int i = 0; i < n; ++i)
        dot += res.vectors.at(i, j) * res.vectors.at(i, j2);
      CHECK(std::abs(dot - (j == j2 ? 1.0 : 0.0)) <= 1e-12);
    }
  }
}
