#include "oscspec/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace oscspec {

namespace {

// In-place LU with partial pivoting; returns the permutation sign, or 0 if a
// pivot is exactly zero.
int lu_factor(Matrix& m, std::vector<int>& piv) {
  const int n = m.n;
  piv.resize(n);
  std::iota(piv.begin(), piv.end(), 0);
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int p = k;
    double best = std::abs(m.at(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::abs(m.at(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best == 0.0) return 0;
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      std::swap(piv[k], piv[p]);
      sign = -sign;
    }
    const double pivot = m.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      const double f = m.at(i, k) / pivot;
      m.at(i, k) = f;
      for (int j = k + 1; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return sign;
}

}  // namespace

double lu_det(Matrix m) {
  if (m.n == 0) return 1.0;
  std::vector<int> piv;
  const int sign = lu_factor(m, piv);
  if (sign == 0) return 0.0;
  double det = sign;
  for (int k = 0; k < m.n; ++k) det *= m.at(k, k);
  return det;
}

std::vector<double> lu_solve(Matrix m, std::vector<double> b) {
  const int n = m.n;
  if (static_cast<int>(b.size()) != n)
    throw std::invalid_argument("lu_solve: size mismatch");
  std::vector<int> piv;
  if (lu_factor(m, piv) == 0)
    throw std::runtime_error("lu_solve: singular matrix");
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[piv[i]];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) x[i] -= m.at(i, j) * x[j];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) x[i] -= m.at(i, j) * x[j];
    x[i] /= m.at(i, i);
  }
  return x;
}

EigenResult jacobi_eigensolve(Matrix m, int max_sweeps, double tol) {
  const int n = m.n;
  EigenResult res;
  res.vectors = Matrix(n);
  for (int i = 0; i < n; ++i) res.vectors.at(i, i) = 1.0;
  if (n == 0) return res;

  double norm = 0.0;
  for (double v : m.a) norm += v * v;
  norm = std::sqrt(norm);
  const double stop = tol * std::max(norm, 1e-300);

  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += 2.0 * m.at(i, j) * m.at(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > stop) {
    if (++sweep > max_sweeps)
      throw std::runtime_error("jacobi_eigensolve: no convergence in " +
                               std::to_string(max_sweeps) + " sweeps");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = m.at(p, q);
        if (apq == 0.0) continue;
        const double app = m.at(p, p);
        const double aqq = m.at(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = m.at(k, p);
          const double akq = m.at(k, q);
          m.at(k, p) = c * akp - s * akq;
          m.at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = m.at(p, k);
          const double aqk = m.at(q, k);
          m.at(p, k) = c * apk - s * aqk;
          m.at(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = res.vectors.at(k, p);
          const double vkq = res.vectors.at(k, q);
          res.vectors.at(k, p) = c * vkp - s * vkq;
          res.vectors.at(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  res.sweeps = sweep;

  res.values.resize(n);
  for (int i = 0; i < n; ++i) res.values[i] = m.at(i, i);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return res.values[i] < res.values[j]; });
  EigenResult sorted;
  sorted.sweeps = res.sweeps;
  sorted.values.resize(n);
  sorted.vectors = Matrix(n);
  for (int j = 0; j < n; ++j) {
    sorted.values[j] = res.values[order[j]];
    for (int i = 0; i < n; ++i)
      sorted.vectors.at(i, j) = res.vectors.at(i, order[j]);
  }
  return sorted;
}

}  // namespace oscspec
