#include "homdich/partition/collapsed.hpp"

#include "homdich/error.hpp"
#include "homdich/partition/partition.hpp"

namespace homdich {

std::vector<Rational> Condensation::weight_diagonal(std::size_t k) const {
  std::vector<Rational> out(s());
  for (std::size_t i = 0; i < s(); ++i) {
    for (std::size_t j = 0; j < alpha[i].size(); ++j) out[i] += alpha[i][j] * pow(mu[i][j], k);
  }
  return out;
}

RationalMatrix Condensation::weight(std::size_t k) const {
  const auto d = weight_diagonal(k);
  return RationalMatrix::diagonal(d);
}

RationalMatrix thickened_B(const Condensation& cond, std::size_t p) {
  require(p >= 1, ErrorKind::Contract, "thickening power must be at least 1");
  const auto& a = cond.a_prime;
  return hadamard_pow(mat_mul(mat_mul(a, cond.weight(2)), a), p);
}

RationalMatrix transfer_L(const Condensation& cond, std::size_t p, std::size_t n) {
  const auto d2p = cond.weight(2 * p);
  if (n == 0) return diagonal_inverse(d2p);
  const auto b = thickened_B(cond, p);
  return mat_mul(b, mat_pow(mat_mul(d2p, b), n - 1));
}

GHGrid collapsed_bounded_grid(const CycleStructure& gp, const Condensation& cond, std::size_t p, std::size_t n) {
  GHGrid grid(gp.graph.vertex_count(), cond.s());
  const MatrixId l = grid.add_matrix(transfer_L(cond, p, n));
  const MatrixId ap = grid.add_matrix(cond.a_prime);
  const MatrixId w = grid.add_matrix(cond.weight(2 * p + 1));
  for (const auto& [u, v] : gp.cycle_edges) grid.add_edge(u, v, l);
  for (const auto& [u, v] : gp.merged_edges) grid.add_edge(u, v, ap);
  grid.set_all_vertex_weights(w);
  return grid;
}

PartitionValue z_collapsed_bounded(const Multigraph& g, const Condensation& cond, std::size_t p, std::size_t n,
                                   const EnumerationOptions& opts) {
  return z_ghgrid(collapsed_bounded_grid(build_Gprime(g), cond, p, n), opts);
}

RationalMatrix stretch_M(const RationalMatrix& a, const RationalMatrix& d, std::size_t n) {
  require(n >= 1, ErrorKind::Contract, "stretch length must be at least 1");
  return mat_mul(a, mat_pow(mat_mul(d, a), n - 1));
}

PartitionValue z_collapsed_stretch(const Multigraph& g, const RationalMatrix& a, const RationalMatrix& d,
                                   const EdgeSelection& subset, std::size_t n, const EnumerationOptions& opts) {
  require(d.is_square() && d.rows() == a.rows() && d.is_diagonal(), ErrorKind::Shape,
          "vertex weights must be a diagonal matrix of the size of A");
  GHGrid grid(g.vertex_count(), a.rows());
  const MatrixId plain = grid.add_matrix(a);
  const MatrixId stretched = grid.add_matrix(stretch_M(a, d, n));
  for (const auto& [pair, mult] : g.edges()) {
    const MatrixId id = subset.contains_edge(pair.first, pair.second) ? stretched : plain;
    for (std::size_t c = 0; c < mult; ++c) grid.add_edge(pair.first, pair.second, id);
  }
  for (const auto& [v, count] : g.loops()) {
    const MatrixId id = subset.contains_loop(v) ? stretched : plain;
    for (std::size_t c = 0; c < count; ++c) grid.add_edge(v, v, id);
  }
  grid.set_all_vertex_weights(grid.add_matrix(d));
  return z_ghgrid(grid, opts);
}

}  // namespace homdich
