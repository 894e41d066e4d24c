#pragma once

#include "homdich/graphs/ghgrid.hpp"
#include "homdich/graphs/multigraph.hpp"
#include "homdich/graphs/transforms.hpp"
#include "homdich/partition/enumerate.hpp"
#include "homdich/partition/family.hpp"

namespace homdich {

// Edge multiplicity k contributes A_ij^k; a loop contributes A_ii.
PartitionValue z_plain(const RationalMatrix& a, const Multigraph& g, const EnumerationOptions& opts = {});
PartitionValue z_vertex_weighted(const RationalMatrix& a, const RationalMatrix& d, const Multigraph& g,
                                 const EnumerationOptions& opts = {});
// Degrees count a loop twice.
PartitionValue z_degree_weighted(const RationalMatrix& a, const DegreeWeightFamily& fam, const Multigraph& g,
                                 const EnumerationOptions& opts = {});
PartitionValue z_ghgrid(const GHGrid& grid, const EnumerationOptions& opts = {});

// F_ij with u* pinned to i, v* pinned to j; endpoint vertex weights excluded.
RationalMatrix edge_signature(const EdgeGadget& gadget, const RationalMatrix& a, const RationalMatrix& d,
                              const EnumerationOptions& opts = {});

}  // namespace homdich
