#include "oscspec/birman_schwinger.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "oscspec/dense.hpp"
#include "oscspec/special_functions.hpp"

namespace oscspec {

namespace {

std::vector<int> sector_modes(int dim, Sector sector) {
  std::vector<int> idx;
  for (int n = 0; n < dim; ++n) {
    if (sector == Sector::even && n % 2 != 0) continue;
    if (sector == Sector::odd && n % 2 != 1) continue;
    idx.push_back(n);
  }
  return idx;
}

void check_pole(double E, int n) {
  if (std::abs(E - (n + 0.5)) <= kPoleGuard)
    throw std::domain_error("E = " + std::to_string(E) +
                            " within guard band of pole at n+1/2, n = " +
                            std::to_string(n));
}

double sign_factor(Sign s) { return s == Sign::attractive ? -1.0 : 1.0; }

}  // namespace

BSKernelMatrix build_kernel(double E, const MatrixElementTable& table,
                            const std::set<int>& excluded) {
  const int dim = table.dim;
  BSKernelMatrix k;
  k.dim = dim;
  k.E = E;
  k.excluded_modes = excluded;
  k.entries.assign(static_cast<size_t>(dim) * dim, 0.0);

  std::vector<double> scale(dim, 0.0);
  for (int n = 0; n < dim; ++n) {
    if (excluded.count(n)) continue;
    check_pole(E, n);
    if (E >= n + 0.5)
      throw std::domain_error(
          "build_kernel: E must lie below every non-excluded n+1/2");
    scale[n] = 1.0 / std::sqrt(n + 0.5 - E);
  }
  for (int m = 0; m < dim; ++m) {
    if (excluded.count(m)) continue;
    for (int n = m; n < dim; n += 2) {
      if (excluded.count(n)) continue;
      const double v = table(m, n) * scale[m] * scale[n];
      k.entries[static_cast<size_t>(m) * dim + n] = v;
      k.entries[static_cast<size_t>(n) * dim + m] = v;
    }
  }
  return k;
}

double total_potential(double x, const CouplingSpec& spec) {
  if (spec.lambda < 0)
    throw std::invalid_argument("total_potential: lambda must be >= 0");
  return 0.5 * x * x + sign_factor(spec.sign) * spec.lambda * std::exp(-x * x);
}

double trace_norm_exact(double E, double lambda) {
  if (E >= 0.5)
    throw std::domain_error("trace_norm_exact: requires E < 1/2");
  return lambda * std::sqrt(std::numbers::pi / 2.0) * gamma_fn(0.5 - E) /
         gamma_fn(1.0 - E);
}

double kernel_trace(const BSKernelMatrix& kernel) {
  double s = 0.0;
  for (int n = 0; n < kernel.dim; ++n) s += kernel(n, n);
  return s;
}

double kernel_trace_tail(int from, double E) {
  if (from < 1) throw std::invalid_argument("kernel_trace_tail: from >= 1");
  if (E >= 0.5) throw std::domain_error("kernel_trace_tail: requires E < 1/2");
  const double a = 0.5 - E;
  const double N = from;
  // V[n][n]/(n+1/2-E) = (1/sqrt(2 pi)) n^{-1/2} (1 - 1/(8n) + 1/(128 n^2) + ...)/(n+a)
  const double c = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  const double i0 = (2.0 / std::sqrt(a)) * std::atan(std::sqrt(a / N));
  const double i1 = (2.0 / std::sqrt(N) - i0) / a;
  const double i2 = ((2.0 / 3.0) * std::pow(N, -1.5) - i1) / a;
  auto g = [&](double t) {
    return c * (1.0 - 1.0 / (8.0 * t) + 1.0 / (128.0 * t * t)) /
           (std::sqrt(t) * (t + a));
  };
  const double h = 1e-4 * N;
  const double gp = (g(N + h) - g(N - h)) / (2.0 * h);
  return c * (i0 - i1 / 8.0 + i2 / 128.0) + 0.5 * g(N) - gp / 12.0;
}

double fredholm_det(double E, const CouplingSpec& spec,
                    const MatrixElementTable& table, Sector sector) {
  if (spec.lambda < 0)
    throw std::invalid_argument("fredholm_det: lambda must be >= 0");
  const std::vector<int> idx = sector_modes(table.dim, sector);
  for (int n : idx) check_pole(E, n);
  const int m = static_cast<int>(idx.size());
  // det(I -+ lambda K) via the diagonally similar I -+ lambda D^{-1} V, which
  // stays real when E lies beyond the first pole.
  Matrix a(m);
  const double s = sign_factor(spec.sign);
  for (int i = 0; i < m; ++i) {
    const double di = idx[i] + 0.5 - E;
    for (int j = 0; j < m; ++j)
      a.at(i, j) = (i == j ? 1.0 : 0.0) +
                   s * spec.lambda * table(idx[i], idx[j]) / di;
  }
  return lu_det(std::move(a));
}

EnergyResult solve_det_root(const CouplingSpec& spec,
                            const MatrixElementTable& table,
                            std::pair<double, double> bracket, Sector sector) {
  double a = bracket.first;
  double b = bracket.second;
  if (a > b) std::swap(a, b);
  for (int n : sector_modes(table.dim, sector)) {
    const double pole = n + 0.5;
    if (pole > a && pole < b)
      throw std::invalid_argument("solve_det_root: pole n+1/2 inside bracket, n = " +
                                  std::to_string(n));
  }
  auto f = [&](double E) { return fredholm_det(E, spec, table, sector); };
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return {a, Method::fredholm_det, table.dim, 0.0};
  if (fb == 0.0) return {b, Method::fredholm_det, table.dim, 0.0};
  if (fa * fb > 0.0)
    throw std::runtime_error("solve_det_root: no sign change across bracket");

  while (b - a > 1e-10) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return {m, Method::fredholm_det, table.dim, 0.0};
    if (fa * fm < 0.0) {
      b = m;
      fb = fm;
    } else {
      a = m;
      fa = fm;
    }
  }
  // Secant polish inside the final bracket.
  double x = a;
  for (int it = 0; it < 3; ++it) {
    if (fb == fa) break;
    x = (a * fb - b * fa) / (fb - fa);
    if (!(x >= a && x <= b)) {
      x = 0.5 * (a + b);
      break;
    }
    const double fx = f(x);
    if (fx == 0.0) break;
    if (fa * fx < 0.0) {
      b = x;
      fb = fx;
    } else {
      a = x;
      fa = fx;
    }
  }
  return {x, Method::fredholm_det, table.dim, b - a};
}

EnergyResult scan_det_root(const CouplingSpec& spec,
                           const MatrixElementTable& table, double a, double b,
                           Sector sector) {
  const double step = 1e-3;
  auto f = [&](double E) { return fredholm_det(E, spec, table, sector); };
  double x0 = a;
  double f0 = f(x0);
  while (x0 < b) {
    const double x1 = std::min(x0 + step, b);
    const double f1 = f(x1);
    if (f0 == 0.0) return {x0, Method::fredholm_det, table.dim, 0.0};
    if (f0 * f1 <= 0.0)
      return solve_det_root(spec, table, {x0, x1}, sector);
    x0 = x1;
    f0 = f1;
  }
  throw std::runtime_error("scan_det_root: no sign change in [" +
                           std::to_string(a) + ", " + std::to_string(b) + "]");
}

EnergyResult det_energy(int level, const CouplingSpec& spec,
                        const MatrixElementTable& table) {
  if (level != 0 && level != 1)
    throw std::invalid_argument("det_energy: level must be 0 or 1");
  if (spec.lambda == 0.0)
    return {level + 0.5, Method::fredholm_det, table.dim, 0.0};
  const Sector sector = (level == 0) ? Sector::even : Sector::odd;
  const double e0 = level + 0.5;
  if (spec.sign == Sign::attractive)
    return scan_det_root(spec, table, e0 - spec.lambda - 0.6, e0 - 1e-7, sector);
  // Repulsive roots sit above l+1/2, below the next same-parity pole.
  return scan_det_root(spec, table, e0 + 1e-7, e0 + 2.0 - 1e-7, sector);
}

namespace {

EnergyResult rank_one_level(int level, const CouplingSpec& spec,
                            const MatrixElementTable& table, double tol) {
  if (tol <= 0) throw std::invalid_argument("rank_one: tol must be > 0");
  if (spec.lambda < 0)
    throw std::invalid_argument("rank_one: lambda must be >= 0");
  if (table.dim < level + 3)
    throw std::invalid_argument("rank_one: table too small");
  const double lam = spec.lambda;
  const bool attractive = spec.sign == Sign::attractive;
  if (attractive) {
    const double thr =
        level == 0 ? invertibility_threshold_0() : invertibility_threshold_1();
    if (lam >= thr)
      throw std::domain_error(
          "rank_one: coupling at or beyond the invertibility threshold " +
          std::to_string(thr));
  } else if (level == 1 && lam >= repulsive_threshold_1()) {
    throw std::domain_error("rank_one: repulsive level-1 requires lambda < sqrt(2)");
  }

  const double v0 = table(level, level);
  if (lam == 0.0)
    return {level + 0.5, Method::rank_one_fixed_point, table.dim, 0.0};

  // Same-parity modes above the excluded level; opposite-parity couplings to
  // psi_level vanish, so nothing else enters (the mode-0 reversed-sign term of
  // the level-1 equation couples to nothing here).
  std::vector<int> modes;
  for (int n = level + 2; n < table.dim; n += 2) modes.push_back(n);
  const int m = static_cast<int>(modes.size());

  auto iterate = [&](double eps) {
    Matrix a(m);
    std::vector<double> rhs(m);
    std::vector<double> scale(m);
    for (int i = 0; i < m; ++i) {
      const double d = (modes[i] - level) + (attractive ? eps : -eps);
      if (d <= kPoleGuard)
        throw std::runtime_error("rank_one: iterate left the validity window");
      scale[i] = 1.0 / std::sqrt(d);
    }
    const double s = attractive ? -1.0 : 1.0;
    for (int i = 0; i < m; ++i) {
      rhs[i] = table(level, modes[i]) * scale[i];
      for (int j = 0; j < m; ++j)
        a.at(i, j) = (i == j ? 1.0 : 0.0) +
                     s * lam * table(modes[i], modes[j]) * scale[i] * scale[j];
    }
    const std::vector<double> u = lu_solve(std::move(a), rhs);
    double corr = 0.0;
    for (int i = 0; i < m; ++i) corr += rhs[i] * u[i];
    return lam * (v0 - s * lam * corr);
  };

  double eps = lam * v0;
  double last_step = 0.0;
  for (int it = 0; it < 300; ++it) {
    double step = iterate(eps) - eps;
    if (it > 0 && step * last_step < 0.0) step *= 0.5;
    eps += step;
    last_step = step;
    if (std::abs(step) < tol) {
      const double energy = level + 0.5 + (attractive ? -eps : eps);
      return {energy, Method::rank_one_fixed_point, table.dim, std::abs(step)};
    }
  }
  throw std::runtime_error("rank_one: fixed point did not converge");
}

}  // namespace

EnergyResult rank_one_epsilon0(const CouplingSpec& spec,
                               const MatrixElementTable& table, double tol) {
  return rank_one_level(0, spec, table, tol);
}

EnergyResult rank_one_epsilon1(const CouplingSpec& spec,
                               const MatrixElementTable& table, double tol) {
  return rank_one_level(1, spec, table, tol);
}

double invertibility_threshold_0() {
  return 1.0 / (std::numbers::sqrt2 * std::numbers::ln2);
}

double invertibility_threshold_1() {
  return 4.0 / (std::numbers::sqrt2 * (1.0 + 2.0 * std::numbers::ln2));
}

double repulsive_threshold_1() { return std::numbers::sqrt2; }

}  // namespace oscspec
