#pragma once

#include <vector>

#include "homdich/numeric/highprec.hpp"

namespace homdich {

// source = basis^T * diag(eigenvalues) * basis; the rows of `basis` are the
// orthonormal eigenvectors, eigenvalues sorted descending.
struct EigenDecomposition {
  std::vector<HighPrecReal> eigenvalues;
  RealMatrix basis;
  RealMatrix source;
  Precision precision;

  // ||S S^T - I||_max
  HighPrecReal orthogonality_residual() const;
  // ||S^T J S - source||_max
  HighPrecReal reconstruction_residual() const;
  // Both invariants at tolerance 2^(-precision/2) (relative to ||source|| for
  // the reconstruction).
  bool satisfies_invariants() const;
};

// Cyclic Jacobi rotations at the given precision. Throws Contract on a
// non-symmetric input and Precision when the sweep budget runs out.
EigenDecomposition sym_eigen(const RealMatrix& a, int max_sweeps = 80);
EigenDecomposition sym_eigen(const RationalMatrix& a, Precision precision = kDefaultPrecision);

}  // namespace homdich
