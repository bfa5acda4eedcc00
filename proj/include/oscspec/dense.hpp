#pragma once

#include <vector>

namespace oscspec {

/// Minimal dense row-major square matrix.
struct Matrix {
  int n = 0;
  std::vector<double> a;

  Matrix() = default;
  explicit Matrix(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, 0.0) {}

  double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

/// Determinant by LU with partial pivoting (copy taken by value).
double lu_det(Matrix m);

/// Solve A x = b by LU with partial pivoting. Throws std::runtime_error on a
/// numerically singular pivot.
std::vector<double> lu_solve(Matrix m, std::vector<double> b);

struct EigenResult {
  std::vector<double> values;  // ascending
  Matrix vectors;              // columns match values
  int sweeps = 0;
};

/// Cyclic Jacobi for symmetric matrices. Converges to off-diagonal Frobenius
/// norm <= tol * ||A||_F; throws std::runtime_error after max_sweeps.
EigenResult jacobi_eigensolve(Matrix m, int max_sweeps = 30, double tol = 1e-14);

}  // namespace oscspec
