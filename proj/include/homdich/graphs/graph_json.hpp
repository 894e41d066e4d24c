#pragma once

#include <string>

#include <json.hpp>

#include "homdich/graphs/multigraph.hpp"

namespace homdich {

// {"vertices": n, "edges": [[u, v, multiplicity], ...], "loops": [[v, count], ...]}
// with 0-based indices; a missing "loops" key means no loops. Repeated pairs
// accumulate.
Multigraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Multigraph& g);

Multigraph read_graph_file(const std::string& path);

}  // namespace homdich
