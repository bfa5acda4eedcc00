#pragma once

#include <vector>

#include "oscspec/birman_schwinger.hpp"
#include "oscspec/dense.hpp"

namespace oscspec {

/// Truncated Hamiltonian in the oscillator basis:
/// entries[n][n] = n + 1/2 -+ lambda V[n][n], off-diagonal -+ lambda V[m][n].
/// Block-diagonal under index parity since V has the parity zeros.
struct HamiltonianMatrix {
  int dim = 0;
  CouplingSpec spec;
  std::vector<double> entries;

  double operator()(int m, int n) const {
    return entries[static_cast<size_t>(m) * dim + n];
  }
};

HamiltonianMatrix build_hamiltonian(const CouplingSpec& spec,
                                    const MatrixElementTable& table);

/// k smallest eigenvalues by cyclic Jacobi on the two parity blocks
/// (independent ground truth for the determinant and fixed-point routes).
std::vector<EnergyResult> lowest_eigenvalues(const HamiltonianMatrix& h, int k);

struct EigenPair {
  double value = 0.0;
  int parity = 0;               // 0 even block, 1 odd block
  std::vector<double> vector;   // full-dimension coefficients
};

/// Same diagonalisation, keeping eigenvectors (residual checks, CSV dumps).
std::vector<EigenPair> lowest_eigenpairs(const HamiltonianMatrix& h, int k);

}  // namespace oscspec
