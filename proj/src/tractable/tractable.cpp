#include "homdich/tractable/tractable.hpp"

#include "homdich/error.hpp"

namespace homdich {

Rational Rank1Factorization::entry(std::size_t i, std::size_t j) const {
  if (kind == BlockKind::Loop) return x[i] * x[j] / scale;
  return x[i] * y[j];
}

Rank1Factorization factor_rank1(const RationalMatrix& block, BlockKind kind) {
  require(!block.empty(), ErrorKind::Shape, "empty block");
  for (const auto& e : block.entries()) require(sgn(e) != 0, ErrorKind::Contract, "block has a zero entry");
  Rank1Factorization f;
  f.kind = kind;
  if (kind == BlockKind::Loop) {
    require(block.is_square() && block.is_symmetric(), ErrorKind::Contract, "loop block must be square symmetric");
    f.scale = block(0, 0);
    f.x = block.row(0);
  } else {
    f.x = block.column(0);
    f.y = block.row(0);
    for (auto& y : f.y) y /= block(0, 0);
  }
  for (std::size_t i = 0; i < block.rows(); ++i) {
    for (std::size_t j = 0; j < block.cols(); ++j) {
      require(f.entry(i, j) == block(i, j), ErrorKind::Contract, "block does not have rank 1");
    }
  }
  return f;
}

namespace {

Rational degree_sum(const std::vector<std::size_t>& idx, const std::vector<Rational>& d, const std::vector<Rational>& x,
                    std::size_t deg) {
  Rational s;
  for (std::size_t t = 0; t < idx.size(); ++t) s += d[idx[t]] * pow(x[t], deg);
  return s;
}

}  // namespace

PartitionValue eval_tractable(const RationalMatrix& a, const RationalMatrix& d, const Multigraph& g) {
  const Verdict v = classify_pair(a, d);
  require(v.tractable, ErrorKind::Contract, "eval_tractable called on a pair that is not block-rank-1");
  const auto dd = d.diagonal_entries();
  const auto deg = g.degrees();

  Rational all_weight;
  for (const auto& x : dd) all_weight += x;

  struct Prepared {
    Block block;
    Rank1Factorization f;
  };
  std::vector<Prepared> blocks;
  for (const auto& b : v.structure.blocks) {
    const auto& cols = b.kind == BlockKind::Loop ? b.first : b.second;
    blocks.push_back({b, factor_rank1(submatrix(a, b.first, cols), b.kind)});
  }

  PartitionValue out;
  out.value = 1;
  for (const auto& comp : g.components()) {
    if (comp.size() == 1 && deg[comp[0]] == 0) {
      out.value *= all_weight;
      continue;
    }
    std::size_t edges = 0;
    bool has_loop = false;
    for (std::size_t u : comp) {
      edges += deg[u];
      has_loop = has_loop || g.loop_count(u) > 0;
    }
    edges /= 2;
    const Bipartition sides = bipartition(g, comp);
    Rational z;
    for (const auto& pb : blocks) {
      if (pb.block.kind == BlockKind::Loop) {
        Rational term = 1;
        for (std::size_t u : comp) term *= degree_sum(pb.block.first, dd, pb.f.x, deg[u]);
        z += term / pow(pb.f.scale, edges);
        continue;
      }
      if (has_loop || !sides.ok) continue;
      const auto& p = pb.block.first;
      const auto& q = pb.block.second;
      for (int orient = 0; orient < 2; ++orient) {
        const auto& left = orient == 0 ? sides.side_a : sides.side_b;
        const auto& right = orient == 0 ? sides.side_b : sides.side_a;
        Rational term = 1;
        for (std::size_t u : left) term *= degree_sum(p, dd, pb.f.x, deg[u]);
        for (std::size_t u : right) term *= degree_sum(q, dd, pb.f.y, deg[u]);
        z += term;
      }
    }
    out.value *= z;
  }
  return out;
}

}  // namespace homdich
