#pragma once

namespace oscspec {

/// A computed series partial sum paired with its analytic closed form.
///
/// partial_sum is the raw sum of the first terms_used (positive) terms, so it
/// is monotone non-decreasing in terms_used and satisfies
/// |partial_sum - closed_form| <= tail_bound. tail_estimate is an additive
/// correction for the remainder (zero where the raw sum already converges);
/// corrected() is the quantity to compare against closed_form at tight
/// tolerances.
struct SeriesIdentity {
  double partial_sum = 0.0;
  double closed_form = 0.0;
  long terms_used = 0;
  double tail_bound = 0.0;
  double tail_estimate = 0.0;

  double corrected() const { return partial_sum + tail_estimate; }
};

/// ln(8 - 4 sqrt(3))
double ln_8_minus_4_sqrt3();

/// sum_{n>=1} psi_{2n}^2(0) / (2^{2n+1} n)  =  ln(8-4 sqrt 3) / sqrt(pi).
/// Terms decay like 4^{-n}; 60 terms reach double precision.
SeriesIdentity series_S0(long terms);

/// sum_{n>=1} (n+1) psi_{2(n+1)}^2(0) / (2^{2(n+1)} n)
///   = (2 sqrt(3) - 3(1 - ln(8-4 sqrt 3))) / (12 sqrt(pi)).
SeriesIdentity series_S1(long terms);

/// sqrt(2 pi) sum_{n>=1} psi_{2n}^2(0) / (2n)  =  sqrt(2) ln 2.
/// Terms decay only like n^{-3/2}; the remainder is estimated as
/// c * int_{N+1/2}^inf t^{-3/2} dt with c fitted over the last decade of
/// computed terms, which turns an 1e24-term task into ~1e5 terms.
SeriesIdentity trace_M_half(long terms);

}  // namespace oscspec
