#include "oscspec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oscspec {

HamiltonianMatrix build_hamiltonian(const CouplingSpec& spec,
                                    const MatrixElementTable& table) {
  if (spec.lambda < 0)
    throw std::invalid_argument("build_hamiltonian: lambda must be >= 0");
  const int dim = table.dim;
  HamiltonianMatrix h;
  h.dim = dim;
  h.spec = spec;
  h.entries.assign(static_cast<size_t>(dim) * dim, 0.0);
  const double s = spec.sign == Sign::attractive ? -1.0 : 1.0;
  for (int m = 0; m < dim; ++m) {
    h.entries[static_cast<size_t>(m) * dim + m] =
        m + 0.5 + s * spec.lambda * table(m, m);
    for (int n = m + 2; n < dim; n += 2) {
      const double v = s * spec.lambda * table(m, n);
      h.entries[static_cast<size_t>(m) * dim + n] = v;
      h.entries[static_cast<size_t>(n) * dim + m] = v;
    }
  }
  return h;
}

namespace {

std::vector<EigenPair> diagonalize_blocks(const HamiltonianMatrix& h) {
  std::vector<EigenPair> all;
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<int> idx;
    for (int n = parity; n < h.dim; n += 2) idx.push_back(n);
    const int m = static_cast<int>(idx.size());
    if (m == 0) continue;
    Matrix block(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) block.at(i, j) = h(idx[i], idx[j]);
    const EigenResult res = jacobi_eigensolve(std::move(block));
    for (int j = 0; j < m; ++j) {
      EigenPair p;
      p.value = res.values[j];
      p.parity = parity;
      p.vector.assign(h.dim, 0.0);
      for (int i = 0; i < m; ++i) p.vector[idx[i]] = res.vectors.at(i, j);
      all.push_back(std::move(p));
    }
  }
  std::sort(all.begin(), all.end(),
            [](const EigenPair& a, const EigenPair& b) { return a.value < b.value; });
  return all;
}

}  // namespace

std::vector<EnergyResult> lowest_eigenvalues(const HamiltonianMatrix& h, int k) {
  if (k < 1 || k > h.dim)
    throw std::invalid_argument("lowest_eigenvalues: need 1 <= k <= dim");
  const std::vector<EigenPair> pairs = diagonalize_blocks(h);
  std::vector<EnergyResult> out;
  out.reserve(k);
  for (int i = 0; i < k; ++i)
    out.push_back({pairs[i].value, Method::oracle, h.dim, 0.0});
  return out;
}

std::vector<EigenPair> lowest_eigenpairs(const HamiltonianMatrix& h, int k) {
  if (k < 1 || k > h.dim)
    throw std::invalid_argument("lowest_eigenpairs: need 1 <= k <= dim");
  std::vector<EigenPair> pairs = diagonalize_blocks(h);
  pairs.resize(k);
  return pairs;
}

}  // namespace oscspec
