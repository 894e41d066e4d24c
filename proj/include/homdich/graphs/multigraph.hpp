#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace homdich {

using VertexPair = std::pair<std::size_t, std::size_t>;  // always first < second

// Undirected multigraph: parallel edges are stored once with a multiplicity,
// loops per vertex with a count. A loop adds 2 to the degree of its vertex.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t vertex_count) : vertex_count_(vertex_count) {}

  std::size_t add_vertex() { return vertex_count_++; }
  std::size_t add_vertices(std::size_t count);
  // u == v adds loops.
  void add_edge(std::size_t u, std::size_t v, std::size_t multiplicity = 1);
  void add_loop(std::size_t v, std::size_t count = 1);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const std::map<VertexPair, std::size_t>& edges() const noexcept { return edges_; }
  const std::map<std::size_t, std::size_t>& loops() const noexcept { return loops_; }
  std::size_t multiplicity(std::size_t u, std::size_t v) const;
  std::size_t loop_count(std::size_t v) const;

  // Edges counted with multiplicity, loops included.
  std::size_t edge_count() const;
  std::size_t degree(std::size_t v) const;
  std::vector<std::size_t> degrees() const;
  std::size_t max_degree() const;

  bool has_loops() const noexcept { return !loops_.empty(); }
  bool has_parallel_edges() const;
  bool is_simple() const { return !has_loops() && !has_parallel_edges(); }

  std::vector<std::size_t> isolated_vertices() const;
  // Connected components, each sorted, in order of smallest vertex.
  std::vector<std::vector<std::size_t>> components() const;
  // Induced subgraph on `keep` (sorted, renumbered in that order).
  Multigraph induced(const std::vector<std::size_t>& keep) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::map<VertexPair, std::size_t> edges_;
  std::map<std::size_t, std::size_t> loops_;
};

// Edges selected by endpoint pair (all parallel copies of a pair together)
// and loops selected by vertex.
struct EdgeSelection {
  std::set<VertexPair> edges;
  std::set<std::size_t> loops;

  static EdgeSelection all(const Multigraph& g);
  static EdgeSelection none() { return {}; }
  bool contains_edge(std::size_t u, std::size_t v) const;
  bool contains_loop(std::size_t v) const { return loops.count(v) != 0; }
};

struct StrippedGraph {
  Multigraph graph;   // G* with isolated vertices removed
  std::size_t isolated = 0;  // h
};

StrippedGraph strip_isolated(const Multigraph& g);

// 2-colouring of one connected component; empty optional-like result (ok=false)
// when an odd cycle or a loop is present.
struct Bipartition {
  bool ok = false;
  std::vector<std::size_t> side_a;
  std::vector<std::size_t> side_b;
};
Bipartition bipartition(const Multigraph& g, const std::vector<std::size_t>& component);

}  // namespace homdich
