#pragma once

#include "homdich/condense/condensation.hpp"
#include "homdich/graphs/ghgrid.hpp"
#include "homdich/graphs/transforms.hpp"
#include "homdich/partition/enumerate.hpp"

namespace homdich {

// B = (A' D^[[2]] A')^{(.)p}
RationalMatrix thickened_B(const Condensation& cond, std::size_t p);

// L^(n) = B (D^[[2p]] B)^{n-1} for n >= 1, L^(0) = (D^[[2p]])^{-1}.
RationalMatrix transfer_L(const Condensation& cond, std::size_t p, std::size_t n);

// GH-grid on G' carrying L^(n) on cycle edges, A' on merged edges and
// D^[[2p+1]] on every vertex. n = 0 gives G_{0,p}.
GHGrid collapsed_bounded_grid(const CycleStructure& gp, const Condensation& cond, std::size_t p, std::size_t n);

// Equals z_degree_weighted(A', family, G_{n,p}) at cost s^{2|E(g)|}.
PartitionValue z_collapsed_bounded(const Multigraph& g, const Condensation& cond, std::size_t p, std::size_t n,
                                   const EnumerationOptions& opts = {});

// M^(n) = A (D A)^{n-1}
RationalMatrix stretch_M(const RationalMatrix& a, const RationalMatrix& d, std::size_t n);

// Equals z_vertex_weighted(a, d, S_n on `subset` of g) via M^(n) on the
// selected edges and loops.
PartitionValue z_collapsed_stretch(const Multigraph& g, const RationalMatrix& a, const RationalMatrix& d,
                                   const EdgeSelection& subset, std::size_t n, const EnumerationOptions& opts = {});

}  // namespace homdich
