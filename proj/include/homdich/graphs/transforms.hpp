#pragma once

#include <cstddef>
#include <vector>

#include "homdich/graphs/multigraph.hpp"

namespace homdich {

// Graph with two distinguished vertices u*, v*.
struct EdgeGadget {
  Multigraph graph;
  std::size_t u_star = 0;
  std::size_t v_star = 1;
};

// Cycle gadget with one dangling half-edge stub at each junction vertex. The
// stubs are not edges of `graph`; they are materialized when merged into a host.
struct StubbedGadget {
  Multigraph graph;
  std::vector<std::size_t> stubs;

  std::size_t edge_count_with_stubs() const { return graph.edge_count() + stubs.size(); }
};

// G' for the bounded-degree construction: every vertex u of the source graph
// becomes a deg(u)-cycle (2-cycle = double edge, 1-cycle = loop) and every
// source edge becomes one merged edge between two cycle vertices.
struct CycleStructure {
  Multigraph parent;
  Multigraph graph;
  std::vector<std::vector<std::size_t>> cycles;  // cycles[u] = F_1..F_deg(u)
  std::vector<VertexPair> cycle_edges;           // one entry per cycle edge; loops as (v, v)
  std::vector<VertexPair> merged_edges;          // in 1-1 correspondence with E(parent)
};

struct StretchedGraph {
  Multigraph graph;
  EdgeSelection stretched;
  std::size_t t = 0;  // stretched edges and loops, counted with multiplicity
};

// T_p on the selection: selected multiplicities and loop counts scale by p.
Multigraph thicken(const Multigraph& g, const EdgeSelection& subset, std::size_t p);
Multigraph thicken(const Multigraph& g, std::size_t p);

// S_r on the selection: every selected parallel copy becomes a path of length r
// with r-1 fresh internal vertices; a selected loop becomes a closed path.
Multigraph stretch(const Multigraph& g, const EdgeSelection& subset, std::size_t r);
Multigraph stretch(const Multigraph& g, std::size_t r);

// S_2 T_p S_n e: n(p+1)+1 vertices, u* = 0 and v* = 1.
EdgeGadget build_P(std::size_t n, std::size_t p);

// d-cycle with every cycle edge replaced by P_{n,p} and a stub at each F_i.
StubbedGadget build_R(std::size_t d, std::size_t n, std::size_t p);

// Requires a loopless graph without isolated vertices.
CycleStructure build_Gprime(const Multigraph& g);

// G' with each cycle edge replaced by a copy of P_{n,p}.
Multigraph build_Gnp(const Multigraph& g, std::size_t n, std::size_t p);
Multigraph build_Gnp(const CycleStructure& gp, std::size_t n, std::size_t p);

// S_n on the parallel edges and loops of g (n >= 2).
StretchedGraph build_Gn_simple(const Multigraph& g, std::size_t n);

// Parallel edges and loops of g.
EdgeSelection parallel_and_loop_selection(const Multigraph& g);

// Appends the internal vertices of a P_{n,p} copy between a and b (a == b allowed).
void glue_path_gadget(Multigraph& host, std::size_t a, std::size_t b, std::size_t n, std::size_t p);

}  // namespace homdich
