#pragma once

#include "homdich/dichotomy/dichotomy.hpp"
#include "homdich/graphs/multigraph.hpp"
#include "homdich/partition/enumerate.hpp"

namespace homdich {

// Loop:      block_ij = x_i x_j / scale, x_i = block_{0,i}, scale = block_00.
// Bipartite: block_ij = x_i y_j,         x_i = block_{i,0}, y_j = block_{0,j} / block_00.
struct Rank1Factorization {
  BlockKind kind = BlockKind::Loop;
  std::vector<Rational> x;
  std::vector<Rational> y;
  Rational scale = 1;

  Rational entry(std::size_t i, std::size_t j) const;
};

// Block must be rank 1 with no zero entries (square symmetric for Loop).
Rank1Factorization factor_rank1(const RationalMatrix& block, BlockKind kind);

// Exact Z_{A,D}(g) for a tractable pair, without enumeration.
PartitionValue eval_tractable(const RationalMatrix& a, const RationalMatrix& d, const Multigraph& g);

}  // namespace homdich
