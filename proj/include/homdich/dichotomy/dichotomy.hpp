#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homdich/numeric/matrix.hpp"

namespace homdich {

enum class BlockKind { Loop, Bipartite };

// Loop blocks use `first` as T; bipartite blocks use (first, second) as (P, Q).
struct Block {
  BlockKind kind = BlockKind::Loop;
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

struct BlockStructure {
  std::vector<Block> blocks;
  std::vector<std::size_t> residual;  // indices with all-zero rows
};

// A zero entry inside a claimed block, plus a 4-point certificate (i, j, k, l)
// with A_ij, A_il, A_kj > 0 and A_kl = 0.
struct RectangularityWitness {
  std::pair<std::size_t, std::size_t> zero_entry;
  std::array<std::size_t, 4> four_point;
};

struct SupportAnalysis {
  BlockStructure structure;
  std::optional<RectangularityWitness> witness;  // set iff not rectangular
  bool rectangular() const noexcept { return !witness.has_value(); }
};

enum class ComponentClass { IsolatedVertex, ReflexiveComplete, IrreflexiveCompleteBipartite, Other };

enum class VerdictReason { NotRectangular, RankTwoBlock, BlockRankOne, ZeroOneComponents };

struct Verdict {
  bool tractable = false;
  VerdictReason reason = VerdictReason::BlockRankOne;
  std::optional<RectangularityWitness> rectangularity;
  // Rows (i, k) and columns (j, l) of a 2x2 minor with nonzero determinant.
  std::optional<std::array<std::size_t, 4>> minor;
  std::vector<std::pair<std::vector<std::size_t>, ComponentClass>> components;
  BlockStructure structure;
  std::vector<std::size_t> struck;
};

// Indices in every result are 0-based and refer to the matrix passed in.
SupportAnalysis support_blocks(const RationalMatrix& a);
Verdict is_block_rank1(const RationalMatrix& a);
// Strikes indices with D_i = 0 and classifies the rest; indices map back to a.
Verdict classify_pair(const RationalMatrix& a, const RationalMatrix& d);
// 0-1 matrices only.
Verdict classify_zero_one(const RationalMatrix& a);

// Re-checks a witness against the entries of a.
bool witness_holds(const RationalMatrix& a, const Verdict& v);

std::string to_string(VerdictReason r);
std::string to_string(ComponentClass c);

}  // namespace homdich
