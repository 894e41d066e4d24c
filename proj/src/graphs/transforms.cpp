#include "homdich/graphs/transforms.hpp"

#include "homdich/error.hpp"

namespace homdich {

Multigraph thicken(const Multigraph& g, const EdgeSelection& subset, std::size_t p) {
  require(p >= 1, ErrorKind::Contract, "thicken requires p >= 1");
  Multigraph out(g.vertex_count());
  for (const auto& [pair, k] : g.edges()) {
    out.add_edge(pair.first, pair.second, subset.edges.count(pair) ? k * p : k);
  }
  for (const auto& [v, k] : g.loops()) out.add_loop(v, subset.contains_loop(v) ? k * p : k);
  return out;
}

Multigraph thicken(const Multigraph& g, std::size_t p) { return thicken(g, EdgeSelection::all(g), p); }

namespace {

void add_path(Multigraph& out, std::size_t a, std::size_t b, std::size_t r) {
  std::size_t prev = a;
  for (std::size_t i = 1; i < r; ++i) {
    const std::size_t x = out.add_vertex();
    out.add_edge(prev, x);
    prev = x;
  }
  out.add_edge(prev, b);
}

}  // namespace

Multigraph stretch(const Multigraph& g, const EdgeSelection& subset, std::size_t r) {
  require(r >= 1, ErrorKind::Contract, "stretch requires r >= 1");
  Multigraph out(g.vertex_count());
  for (const auto& [pair, k] : g.edges()) {
    if (!subset.edges.count(pair)) {
      out.add_edge(pair.first, pair.second, k);
      continue;
    }
    for (std::size_t c = 0; c < k; ++c) add_path(out, pair.first, pair.second, r);
  }
  for (const auto& [v, k] : g.loops()) {
    if (!subset.contains_loop(v)) {
      out.add_loop(v, k);
      continue;
    }
    for (std::size_t c = 0; c < k; ++c) add_path(out, v, v, r);
  }
  return out;
}

Multigraph stretch(const Multigraph& g, std::size_t r) { return stretch(g, EdgeSelection::all(g), r); }

void glue_path_gadget(Multigraph& host, std::size_t a, std::size_t b, std::size_t n, std::size_t p) {
  require(n >= 1 && p >= 1, ErrorKind::Contract, "P_{n,p} requires n, p >= 1");
  std::size_t prev = a;
  for (std::size_t seg = 0; seg < n; ++seg) {
    const std::size_t next = seg + 1 == n ? b : host.add_vertex();
    for (std::size_t k = 0; k < p; ++k) {
      const std::size_t mid = host.add_vertex();
      host.add_edge(prev, mid);
      host.add_edge(mid, next);
    }
    prev = next;
  }
}

EdgeGadget build_P(std::size_t n, std::size_t p) {
  EdgeGadget gadget{Multigraph(2), 0, 1};
  glue_path_gadget(gadget.graph, 0, 1, n, p);
  return gadget;
}

namespace {

std::vector<VertexPair> cycle_pairs(const std::vector<std::size_t>& f) {
  std::vector<VertexPair> out;
  const std::size_t d = f.size();
  if (d == 1) {
    out.emplace_back(f[0], f[0]);
  } else if (d == 2) {
    out.emplace_back(f[0], f[1]);
    out.emplace_back(f[0], f[1]);
  } else {
    for (std::size_t i = 0; i < d; ++i) out.emplace_back(f[i], f[(i + 1) % d]);
  }
  return out;
}

}  // namespace

StubbedGadget build_R(std::size_t d, std::size_t n, std::size_t p) {
  require(d >= 1 && n >= 1 && p >= 1, ErrorKind::Contract, "R_{d,n,p} requires d, n, p >= 1");
  StubbedGadget out{Multigraph(d), {}};
  std::vector<std::size_t> f(d);
  for (std::size_t i = 0; i < d; ++i) f[i] = i;
  for (const auto& [a, b] : cycle_pairs(f)) glue_path_gadget(out.graph, a, b, n, p);
  out.stubs = f;
  return out;
}

CycleStructure build_Gprime(const Multigraph& g) {
  require(!g.has_loops(), ErrorKind::Contract, "build_Gprime: input graph has loops");
  require(g.isolated_vertices().empty(), ErrorKind::Contract,
          "build_Gprime: input graph has isolated vertices; strip them first");
  CycleStructure cs;
  cs.parent = g;
  const auto deg = g.degrees();
  cs.cycles.resize(g.vertex_count());
  std::size_t next = 0;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t i = 0; i < deg[u]; ++i) cs.cycles[u].push_back(next++);
  }
  cs.graph = Multigraph(next);
  std::vector<std::size_t> used(g.vertex_count(), 0);
  // Dangling edges pair up in sorted incidence order.
  for (const auto& [pair, k] : g.edges()) {
    for (std::size_t c = 0; c < k; ++c) {
      const std::size_t a = cs.cycles[pair.first][used[pair.first]++];
      const std::size_t b = cs.cycles[pair.second][used[pair.second]++];
      cs.merged_edges.emplace_back(a, b);
      cs.graph.add_edge(a, b);
    }
  }
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (const auto& [a, b] : cycle_pairs(cs.cycles[u])) {
      cs.cycle_edges.emplace_back(a, b);
      cs.graph.add_edge(a, b);
    }
  }
  return cs;
}

Multigraph build_Gnp(const CycleStructure& gp, std::size_t n, std::size_t p) {
  Multigraph out(gp.graph.vertex_count());
  for (const auto& [a, b] : gp.merged_edges) out.add_edge(a, b);
  for (const auto& [a, b] : gp.cycle_edges) glue_path_gadget(out, a, b, n, p);
  return out;
}

Multigraph build_Gnp(const Multigraph& g, std::size_t n, std::size_t p) {
  return build_Gnp(build_Gprime(g), n, p);
}

EdgeSelection parallel_and_loop_selection(const Multigraph& g) {
  EdgeSelection sel;
  for (const auto& [pair, k] : g.edges()) {
    if (k >= 2) sel.edges.insert(pair);
  }
  for (const auto& [v, k] : g.loops()) sel.loops.insert(v);
  return sel;
}

StretchedGraph build_Gn_simple(const Multigraph& g, std::size_t n) {
  require(n >= 2, ErrorKind::Contract, "build_Gn_simple requires n >= 2");
  StretchedGraph out;
  out.stretched = parallel_and_loop_selection(g);
  for (const auto& pair : out.stretched.edges) out.t += g.multiplicity(pair.first, pair.second);
  for (std::size_t v : out.stretched.loops) out.t += g.loop_count(v);
  out.graph = stretch(g, out.stretched, n);
  return out;
}

}  // namespace homdich
