#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "homdich/numeric/highprec.hpp"

namespace homdich {

struct VandermondeOptions {
  // Exponent of the first sample: samples[k] = sum_j c_j * node_j^(first_exponent + k).
  long first_exponent = 0;
  // Nodes closer than this merge into one unknown. Defaults to
  // 2^(-precision/2) * (1 + max|node|).
  std::optional<HighPrecReal> merge_tol;
  // Reject nodes at zero; needed whenever the caller evaluates the fitted
  // sum below the sample window.
  bool require_nonzero_nodes = false;
};

struct VandermondeSolution {
  std::vector<HighPrecReal> nodes;         // merged, in input order of first occurrence
  std::vector<std::size_t> multiplicity;   // how many input nodes merged into each
  std::vector<HighPrecReal> coefficients;  // one per merged node
  HighPrecReal residual;                   // max_k |fit_k - sample_k| over all samples
  HighPrecReal merge_tol;
  HighPrecReal scale;                      // max(1, max|sample|)

  // sum_j c_j * node_j^exponent (exponent may be below the sample window).
  HighPrecReal evaluate(long exponent) const;
};

HighPrecReal default_merge_tol(const std::vector<HighPrecReal>& nodes, Precision precision);

// Solves the (transposed) Vandermonde system after merging coincident nodes.
// Uses the first #merged samples for the square solve and checks the residual
// on every sample; a residual above merge_tol * scale raises IllConditioned.
VandermondeSolution solve_vandermonde(const std::vector<HighPrecReal>& nodes,
                                      const std::vector<HighPrecReal>& samples,
                                      const VandermondeOptions& options = {});

}  // namespace homdich
