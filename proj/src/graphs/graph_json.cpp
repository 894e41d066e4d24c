#include "homdich/graphs/graph_json.hpp"

#include <fstream>

#include "homdich/error.hpp"

namespace homdich {

namespace {

std::size_t index_field(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    fail(ErrorKind::Parse, std::string("graph JSON: ") + what + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

Multigraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices")) fail(ErrorKind::Parse, "graph JSON: missing \"vertices\"");
  const std::size_t n = index_field(j.at("vertices"), "vertices");
  Multigraph g(n);
  auto in_range = [&](std::size_t v) {
    if (v >= n) fail(ErrorKind::Parse, "graph JSON: vertex " + std::to_string(v) + " out of range");
  };
  if (j.contains("edges")) {
    if (!j.at("edges").is_array()) fail(ErrorKind::Parse, "graph JSON: \"edges\" must be an array");
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || (e.size() != 2 && e.size() != 3)) {
        fail(ErrorKind::Parse, "graph JSON: each edge is [u, v] or [u, v, multiplicity]");
      }
      const std::size_t u = index_field(e[0], "edge endpoint");
      const std::size_t v = index_field(e[1], "edge endpoint");
      const std::size_t k = e.size() == 3 ? index_field(e[2], "edge multiplicity") : 1;
      in_range(u);
      in_range(v);
      if (k == 0) fail(ErrorKind::Parse, "graph JSON: multiplicity must be >= 1");
      g.add_edge(u, v, k);
    }
  }
  if (j.contains("loops")) {
    if (!j.at("loops").is_array()) fail(ErrorKind::Parse, "graph JSON: \"loops\" must be an array");
    for (const auto& l : j.at("loops")) {
      if (!l.is_array() || l.size() != 2) fail(ErrorKind::Parse, "graph JSON: each loop is [v, count]");
      const std::size_t v = index_field(l[0], "loop vertex");
      const std::size_t k = index_field(l[1], "loop count");
      in_range(v);
      if (k == 0) fail(ErrorKind::Parse, "graph JSON: loop count must be >= 1");
      g.add_loop(v, k);
    }
  }
  return g;
}

nlohmann::json graph_to_json(const Multigraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [pair, k] : g.edges()) edges.push_back({pair.first, pair.second, k});
  nlohmann::json out{{"vertices", g.vertex_count()}, {"edges", edges}};
  if (g.has_loops()) {
    nlohmann::json loops = nlohmann::json::array();
    for (const auto& [v, k] : g.loops()) loops.push_back({v, k});
    out["loops"] = loops;
  }
  return out;
}

Multigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open graph file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, "graph file '" + path + "': " + e.what());
  }
  return graph_from_json(j);
}

}  // namespace homdich
