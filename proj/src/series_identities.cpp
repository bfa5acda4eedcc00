#include "oscspec/series_identities.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oscspec/special_functions.hpp"

namespace oscspec {

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

void check_terms(long terms) {
  if (terms < 1)
    throw std::invalid_argument("series: terms must be >= 1");
}

// Terms of S0/S1 in the log domain; 2^{2n+1} would overflow double near
// n = 500 if formed directly.
double s0_term(long n) {
  const double lg = std::log(psi_even_sq_at_zero(static_cast<int>(n)));
  return std::exp(lg - (2.0 * n + 1.0) * std::numbers::ln2 - std::log(double(n)));
}

double s1_term(long n) {
  const double lg = std::log((n + 1.0) * psi_even_sq_at_zero(static_cast<int>(n + 1)));
  return std::exp(lg - 2.0 * (n + 1.0) * std::numbers::ln2 - std::log(double(n)));
}

}  // namespace

double ln_8_minus_4_sqrt3() { return std::log(8.0 - 4.0 * std::numbers::sqrt3); }

SeriesIdentity series_S0(long terms) {
  check_terms(terms);
  SeriesIdentity id;
  id.terms_used = terms;
  id.closed_form = ln_8_minus_4_sqrt3() / kSqrtPi;
  for (long n = 1; n <= terms; ++n) id.partial_sum += s0_term(n);
  // Term ratio increases to 1/4 from below, so the remainder is at most a
  // geometric series on the first omitted term with ratio 1/4.
  id.tail_bound = s0_term(terms + 1) * 4.0 / 3.0;
  return id;
}

SeriesIdentity series_S1(long terms) {
  check_terms(terms);
  SeriesIdentity id;
  id.terms_used = terms;
  id.closed_form = (2.0 * std::numbers::sqrt3 -
                    3.0 * (1.0 - ln_8_minus_4_sqrt3())) /
                   (12.0 * kSqrtPi);
  for (long n = 1; n <= terms; ++n) id.partial_sum += s1_term(n);
  id.tail_bound = s1_term(terms + 1) * 4.0 / 3.0;
  return id;
}

SeriesIdentity trace_M_half(long terms) {
  check_terms(terms);
  SeriesIdentity id;
  id.terms_used = terms;
  id.closed_form = std::numbers::sqrt2 * std::numbers::ln2;

  const double pref = std::sqrt(2.0 * std::numbers::pi);
  const long fit_from = std::max(1L, static_cast<long>(0.9 * terms));
  double fit_sum = 0.0;
  long fit_count = 0;
  for (long n = 1; n <= terms; ++n) {
    const double term = pref * psi_even_sq_at_zero(static_cast<int>(n)) / (2.0 * n);
    id.partial_sum += term;
    if (n >= fit_from) {
      fit_sum += term * std::pow(double(n), 1.5);
      ++fit_count;
    }
  }
  const double c_fit = fit_sum / fit_count;
  // Midpoint-rule tail: sum_{n>N} c n^{-3/2} ~ c int_{N+1/2}^inf t^{-3/2} dt.
  id.tail_estimate = c_fit * 2.0 / std::sqrt(terms + 0.5);
  // Rigorous bound with the supremum c = 1/sqrt(2 pi) of term * n^{3/2}.
  id.tail_bound = (1.0 / std::sqrt(2.0 * std::numbers::pi)) * 2.0 /
                  std::sqrt(double(terms));
  return id;
}

}  // namespace oscspec
