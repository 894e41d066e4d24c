#include "homdich/graphs/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "homdich/error.hpp"

namespace homdich {

std::size_t Multigraph::add_vertices(std::size_t count) {
  const std::size_t first = vertex_count_;
  vertex_count_ += count;
  return first;
}

void Multigraph::add_edge(std::size_t u, std::size_t v, std::size_t multiplicity) {
  require(u < vertex_count_ && v < vertex_count_, ErrorKind::Contract,
          "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for " +
              std::to_string(vertex_count_) + " vertices");
  if (multiplicity == 0) return;
  if (u == v) {
    add_loop(u, multiplicity);
    return;
  }
  edges_[{std::min(u, v), std::max(u, v)}] += multiplicity;
}

void Multigraph::add_loop(std::size_t v, std::size_t count) {
  require(v < vertex_count_, ErrorKind::Contract, "loop vertex " + std::to_string(v) + " out of range");
  if (count == 0) return;
  loops_[v] += count;
}

std::size_t Multigraph::multiplicity(std::size_t u, std::size_t v) const {
  if (u == v) return loop_count(u);
  auto it = edges_.find({std::min(u, v), std::max(u, v)});
  return it == edges_.end() ? 0 : it->second;
}

std::size_t Multigraph::loop_count(std::size_t v) const {
  auto it = loops_.find(v);
  return it == loops_.end() ? 0 : it->second;
}

std::size_t Multigraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& [pair, k] : edges_) total += k;
  for (const auto& [v, k] : loops_) total += k;
  return total;
}

std::vector<std::size_t> Multigraph::degrees() const {
  std::vector<std::size_t> deg(vertex_count_, 0);
  for (const auto& [pair, k] : edges_) {
    deg[pair.first] += k;
    deg[pair.second] += k;
  }
  for (const auto& [v, k] : loops_) deg[v] += 2 * k;
  return deg;
}

std::size_t Multigraph::degree(std::size_t v) const { return degrees().at(v); }

std::size_t Multigraph::max_degree() const {
  const auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool Multigraph::has_parallel_edges() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.second > 1; });
}

std::vector<std::size_t> Multigraph::isolated_vertices() const {
  const auto deg = degrees();
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    if (deg[v] == 0) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<std::size_t>> Multigraph::components() const {
  std::vector<std::size_t> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [pair, k] : edges_) {
    const std::size_t a = find(pair.first);
    const std::size_t b = find(pair.second);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < vertex_count_; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

Multigraph Multigraph::induced(const std::vector<std::size_t>& keep) const {
  std::vector<std::size_t> index(vertex_count_, vertex_count_);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = i;
  Multigraph h(keep.size());
  for (const auto& [pair, k] : edges_) {
    if (index[pair.first] < keep.size() && index[pair.second] < keep.size()) {
      h.add_edge(index[pair.first], index[pair.second], k);
    }
  }
  for (const auto& [v, k] : loops_) {
    if (index[v] < keep.size()) h.add_loop(index[v], k);
  }
  return h;
}

EdgeSelection EdgeSelection::all(const Multigraph& g) {
  EdgeSelection sel;
  for (const auto& [pair, k] : g.edges()) sel.edges.insert(pair);
  for (const auto& [v, k] : g.loops()) sel.loops.insert(v);
  return sel;
}

bool EdgeSelection::contains_edge(std::size_t u, std::size_t v) const {
  return edges.count({std::min(u, v), std::max(u, v)}) != 0;
}

StrippedGraph strip_isolated(const Multigraph& g) {
  const auto deg = g.degrees();
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] > 0) keep.push_back(v);
  }
  return {g.induced(keep), g.vertex_count() - keep.size()};
}

Bipartition bipartition(const Multigraph& g, const std::vector<std::size_t>& component) {
  Bipartition out;
  if (component.empty()) {
    out.ok = true;
    return out;
  }
  std::vector<std::vector<std::size_t>> adj(g.vertex_count());
  for (const auto& [pair, k] : g.edges()) {
    adj[pair.first].push_back(pair.second);
    adj[pair.second].push_back(pair.first);
  }
  std::vector<int> colour(g.vertex_count(), -1);
  for (std::size_t v : component) {
    if (g.loop_count(v) > 0) return out;
  }
  std::queue<std::size_t> q;
  colour[component.front()] = 0;
  q.push(component.front());
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop();
    for (std::size_t w : adj[v]) {
      if (colour[w] < 0) {
        colour[w] = 1 - colour[v];
        q.push(w);
      } else if (colour[w] == colour[v]) {
        return out;
      }
    }
  }
  for (std::size_t v : component) (colour[v] == 0 ? out.side_a : out.side_b).push_back(v);
  out.ok = true;
  return out;
}

}  // namespace homdich
