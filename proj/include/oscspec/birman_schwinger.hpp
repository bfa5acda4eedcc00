#pragma once

#include <set>
#include <utility>
#include <vector>

#include "oscspec/matrix_elements.hpp"

namespace oscspec {

enum class Sign { attractive, repulsive };

/// Coupling constant lambda >= 0 plus the sign of the Gaussian term:
/// attractive means H0 - lambda e^{-x^2}, repulsive H0 + lambda e^{-x^2}.
struct CouplingSpec {
  double lambda = 0.0;
  Sign sign = Sign::attractive;
};

/// N x N truncation of the Birman-Schwinger kernel at spectral parameter E,
/// entries V[m][n] / sqrt((m+1/2-E)(n+1/2-E)) with excluded rows/columns
/// zeroed. Construction requires E < n+1/2 for every non-excluded n.
struct BSKernelMatrix {
  int dim = 0;
  double E = 0.0;
  std::vector<double> entries;  // dim x dim, exactly symmetric
  std::set<int> excluded_modes;

  double operator()(int m, int n) const {
    return entries[static_cast<size_t>(m) * dim + n];
  }
};

enum class Method { fredholm_det, rank_one_fixed_point, second_order, oracle };

struct EnergyResult {
  double energy = 0.0;
  Method method = Method::fredholm_det;
  int truncation = 0;
  double bracket_width = 0.0;  // residual interval / convergence measure
};

/// Parity sector of the kernel; the table's parity zeros block-diagonalise
/// everything, so E0 lives in the even sector and E1 in the odd one.
enum class Sector { full, even, odd };

inline constexpr double kPoleGuard = 1e-9;

BSKernelMatrix build_kernel(double E, const MatrixElementTable& table,
                            const std::set<int>& excluded = {});

/// Total potential x^2/2 -+ lambda e^{-x^2}: a funnel for the attractive
/// sign, a double well for the repulsive one once lambda > 1/2 (minima at
/// +- sqrt(ln 2 lambda)).
double total_potential(double x, const CouplingSpec& spec);

/// Trace-class norm of lambda e^{-x^2/2}(H0-E)^{-1}e^{-x^2/2} for E < 1/2:
/// lambda sqrt(pi/2) Gamma(1/2-E) / Gamma(1-E).
double trace_norm_exact(double E, double lambda);

/// Trace of the truncated kernel, sum_n V[n][n]/(n+1/2-E).
double kernel_trace(const BSKernelMatrix& kernel);

/// Analytic estimate of the trace tail sum_{n>=from} V[n][n]/(n+1/2-E),
/// Euler-Maclaurin on the central-binomial asymptotics. Needs E < 1/2.
double kernel_trace_tail(int from, double E);

/// det(I -+ lambda K_N(E)) (minus attractive, plus repulsive), evaluated on
/// the diagonally similar matrix I -+ lambda diag(1/(n+1/2-E)) V so that E
/// anywhere between poles is admissible; pivoted LU. Restricting to a parity
/// sector evaluates the corresponding block's determinant.
double fredholm_det(double E, const CouplingSpec& spec,
                    const MatrixElementTable& table,
                    Sector sector = Sector::full);

/// Bisection to width <= 1e-10 followed by secant polish inside the bracket.
/// Preconditions: the determinant changes sign across the bracket and no
/// sector pole n+1/2 lies inside it.
EnergyResult solve_det_root(const CouplingSpec& spec,
                            const MatrixElementTable& table,
                            std::pair<double, double> bracket,
                            Sector sector = Sector::full);

/// Scans [a, b] at 1e-3 resolution for the first sign change of the sector
/// determinant, then calls solve_det_root on that sub-bracket.
EnergyResult scan_det_root(const CouplingSpec& spec,
                           const MatrixElementTable& table, double a, double b,
                           Sector sector);

/// Determinant root for energy level 0 or 1 with the default sector-aware
/// bracket (attractive roots below l+1/2, repulsive above).
EnergyResult det_energy(int level, const CouplingSpec& spec,
                        const MatrixElementTable& table);

/// Fixed point of eps = lambda (v, [1 -+ lambda M^(l)]^{-1} v) with mode l
/// removed from the kernel; returns E = l+1/2 -+ eps (attractive/repulsive).
EnergyResult rank_one_epsilon0(const CouplingSpec& spec,
                               const MatrixElementTable& table, double tol);
EnergyResult rank_one_epsilon1(const CouplingSpec& spec,
                               const MatrixElementTable& table, double tol);

/// lambda_0 = 1/(sqrt(2) ln 2): largest coupling with 1 - lambda M^(0)
/// guaranteed invertible (attractive ground state).
double invertibility_threshold_0();

/// lambda_1 = 4/(sqrt(2)(1 + 2 ln 2)), the level-1 analogue.
double invertibility_threshold_1();

/// sqrt(2): repulsive level-1 validity bound.
double repulsive_threshold_1();

}  // namespace oscspec
