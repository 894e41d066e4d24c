#include "homdich/partition/partition.hpp"

#include "homdich/error.hpp"

namespace homdich {

namespace {

void check_edge_matrix(const RationalMatrix& a) {
  require(a.is_square(), ErrorKind::Shape, "edge weight matrix must be square");
  require(a.is_symmetric(), ErrorKind::Contract, "edge weight matrix must be symmetric");
}

std::vector<Rational> power_table(const RationalMatrix& a, std::size_t k) {
  std::vector<Rational> t(a.entries().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = pow(a.entries()[i], k);
  return t;
}

WeightedInstance edges_only(const RationalMatrix& a, const Multigraph& g) {
  const std::size_t m = a.rows();
  WeightedInstance inst(g.vertex_count(), m);
  for (const auto& [pair, mult] : g.edges()) inst.multiply_factor(pair.first, pair.second, power_table(a, mult));
  for (const auto& [v, count] : g.loops()) {
    std::vector<Rational> w(m);
    for (std::size_t i = 0; i < m; ++i) w[i] = pow(a(i, i), count);
    inst.scale_vertex(v, w);
  }
  return inst;
}

}  // namespace

PartitionValue z_plain(const RationalMatrix& a, const Multigraph& g, const EnumerationOptions& opts) {
  check_edge_matrix(a);
  return enumerate(edges_only(a, g), opts);
}

PartitionValue z_vertex_weighted(const RationalMatrix& a, const RationalMatrix& d, const Multigraph& g,
                                 const EnumerationOptions& opts) {
  check_edge_matrix(a);
  require(d.is_square() && d.rows() == a.rows(), ErrorKind::Shape, "vertex weight matrix size differs from A");
  require(d.is_diagonal(), ErrorKind::Contract, "vertex weight matrix must be diagonal");
  auto inst = edges_only(a, g);
  const auto diag = d.diagonal_entries();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) inst.scale_vertex(v, diag);
  return enumerate(inst, opts);
}

PartitionValue z_degree_weighted(const RationalMatrix& a, const DegreeWeightFamily& fam, const Multigraph& g,
                                 const EnumerationOptions& opts) {
  check_edge_matrix(a);
  require(fam.domain_size() == a.rows(), ErrorKind::Shape, "weight family size differs from A");
  auto inst = edges_only(a, g);
  const auto deg = g.degrees();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) inst.scale_vertex(v, fam.diagonal(deg[v]));
  return enumerate(inst, opts);
}

PartitionValue z_ghgrid(const GHGrid& grid, const EnumerationOptions& opts) {
  grid.validate();
  const std::size_t m = grid.domain_size();
  const auto& pool = grid.matrix_pool();
  WeightedInstance inst(grid.vertex_count(), m);
  for (const auto& e : grid.edges()) {
    const auto& mat = pool[e.matrix];
    if (e.u == e.v) {
      inst.scale_vertex(e.u, mat.diagonal_entries());
    } else if (e.directed || e.u < e.v) {
      inst.multiply_factor(e.u, e.v, mat.entries());
    } else {
      // Undirected matrices are symmetric, so normalize the orientation and
      // let parallel edges share a factor.
      inst.multiply_factor(e.v, e.u, mat.entries());
    }
  }
  const auto& vw = grid.vertex_weights();
  for (std::size_t v = 0; v < grid.vertex_count(); ++v) {
    if (vw[v]) inst.scale_vertex(v, pool[*vw[v]].diagonal_entries());
  }
  return enumerate(inst, opts);
}

RationalMatrix edge_signature(const EdgeGadget& gadget, const RationalMatrix& a, const RationalMatrix& d,
                              const EnumerationOptions& opts) {
  check_edge_matrix(a);
  require(d.is_square() && d.rows() == a.rows() && d.is_diagonal(), ErrorKind::Shape,
          "vertex weights must be a diagonal matrix of the size of A");
  const auto& g = gadget.graph;
  require(gadget.u_star != gadget.v_star && gadget.u_star < g.vertex_count() && gadget.v_star < g.vertex_count(),
          ErrorKind::Contract, "gadget endpoints must be distinct vertices");
  const std::size_t m = a.rows();
  auto base = edges_only(a, g);
  const auto diag = d.diagonal_entries();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (v != gadget.u_star && v != gadget.v_star) base.scale_vertex(v, diag);
  }
  std::vector<Rational> f(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto inst = base;
      std::vector<Rational> pin_u(m), pin_v(m);
      pin_u[i] = 1;
      pin_v[j] = 1;
      inst.scale_vertex(gadget.u_star, pin_u);
      inst.scale_vertex(gadget.v_star, pin_v);
      f[i * m + j] = enumerate(inst, opts).value;
    }
  }
  return RationalMatrix(m, m, std::move(f));
}

}  // namespace homdich
