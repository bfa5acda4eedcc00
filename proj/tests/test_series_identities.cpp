#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oscspec/series_identities.hpp"
#include "oscspec/special_functions.hpp"

using namespace oscspec;

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

// Independent oracle for the first S0 terms with exact central binomials:
// term_n = C(2n,n) / (4^n sqrt(pi) 2^{2n+1} n).
double s0_oracle(int terms) {
  const double binom[] = {0, 2, 6, 20, 70, 252};
  double s = 0.0;
  for (int n = 1; n <= terms; ++n)
    s += binom[n] / (std::pow(4.0, n) * kSqrtPi * std::pow(2.0, 2 * n + 1) * n);
  return s;
}

}  // namespace

TEST_CASE("series_S0") {
  const SeriesIdentity one = series_S0(1);
  CHECK(one.partial_sum == doctest::Approx(1.0 / (16.0 * kSqrtPi)).epsilon(1e-13));
  CHECK(one.partial_sum ==
        doctest::Approx(psi_even_sq_at_zero(1) / 8.0).epsilon(1e-13));

  CHECK(series_S0(5).partial_sum == doctest::Approx(s0_oracle(5)).epsilon(1e-13));

  const SeriesIdentity s = series_S0(60);
  CHECK(s.closed_form == doctest::Approx(ln_8_minus_4_sqrt3() / kSqrtPi).epsilon(1e-15));
  CHECK(std::abs(s.partial_sum - s.closed_form) < 1e-12);

  CHECK_THROWS_AS(series_S0(0), std::invalid_argument);
}

TEST_CASE("series_S1") {
  const SeriesIdentity one = series_S1(1);
  CHECK(one.partial_sum ==
        doctest::Approx(2.0 * psi_even_sq_at_zero(2) / 16.0).epsilon(1e-13));

  const SeriesIdentity s = series_S1(60);
  CHECK(s.closed_form == doctest::Approx(0.0316).epsilon(2e-3));
  CHECK(std::abs(s.partial_sum - s.closed_form) < 1e-12);
  // the quadratic coefficient it feeds rounds to the printed -0.028
  const double q = 0.5 * kSqrtPi * s.closed_form;
  CHECK(std::round(q * 1000.0) == 28.0);
}

TEST_CASE("trace_M_half") {
  const SeriesIdentity one = trace_M_half(1);
  CHECK(one.partial_sum == doctest::Approx(std::numbers::sqrt2 / 4.0).epsilon(1e-13));

  const SeriesIdentity s = trace_M_half(100000);
  CHECK(s.closed_form == doctest::Approx(std::numbers::sqrt2 * std::numbers::ln2).epsilon(1e-15));
  CHECK(std::abs(s.corrected() - s.closed_form) < 1e-8);
  CHECK(s.partial_sum < s.closed_form);  // raw sum converges from below
}

TEST_CASE("monotone convergence from below") {
  double prev = 0.0;
  for (long terms : {1L, 2L, 5L, 10L, 30L, 60L}) {
    const SeriesIdentity s0 = series_S0(terms);
    const SeriesIdentity s1 = series_S1(terms);
    CHECK(s0.partial_sum >= prev);
    prev = s0.partial_sum;
    CHECK(s0.partial_sum <= s0.closed_form + 1e-15);
    CHECK(s1.partial_sum <= s1.closed_form + 1e-15);
  }
  double prev_t = 0.0;
  for (long terms : {10L, 100L, 1000L, 10000L}) {
    const SeriesIdentity t = trace_M_half(terms);
    CHECK(t.partial_sum > prev_t);
    prev_t = t.partial_sum;
  }
}

TEST_CASE("tail bounds cover the remainder") {
  for (long terms : {1L, 2L, 5L, 10L, 30L}) {
    const SeriesIdentity s0 = series_S0(terms);
    CHECK(std::abs(s0.partial_sum - s0.closed_form) <= s0.tail_bound + 1e-12);
    const SeriesIdentity s1 = series_S1(terms);
    CHECK(std::abs(s1.partial_sum - s1.closed_form) <= s1.tail_bound + 1e-12);
  }
  for (long terms : {10L, 1000L, 100000L}) {
    const SeriesIdentity t = trace_M_half(terms);
    CHECK(std::abs(t.partial_sum - t.closed_form) <= t.tail_bound + 1e-12);
  }
}

TEST_CASE("trace_M_half remainder scales like n^{-1/2}") {
  const double s1 = trace_M_half(10000).partial_sum;
  const double s2 = trace_M_half(40000).partial_sum;
  const double s3 = trace_M_half(160000).partial_sum;
  // (S(4N)-S(N)) / (S(16N)-S(4N)) -> 2 for a remainder ~ c N^{-1/2}
  CHECK((s2 - s1) / (s3 - s2) == doctest::Approx(2.0).epsilon(0.05));
}
