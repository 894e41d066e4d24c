#include "homdich/graphs/ghgrid.hpp"

#include "homdich/error.hpp"

namespace homdich {

MatrixId GHGrid::add_matrix(RationalMatrix m) {
  pool_.push_back(std::move(m));
  return pool_.size() - 1;
}

void GHGrid::add_edge(std::size_t u, std::size_t v, MatrixId matrix, bool directed) {
  require(u < vertex_count_ && v < vertex_count_, ErrorKind::Contract, "GH-grid edge endpoint out of range");
  edges_.push_back({u, v, matrix, directed});
}

void GHGrid::set_vertex_weight(std::size_t v, MatrixId matrix) {
  require(v < vertex_count_, ErrorKind::Contract, "GH-grid vertex out of range");
  vertex_weight_[v] = matrix;
}

void GHGrid::set_all_vertex_weights(MatrixId matrix) {
  for (auto& w : vertex_weight_) w = matrix;
}

void GHGrid::validate() const {
  auto check_shape = [&](MatrixId id) {
    require(id < pool_.size(), ErrorKind::Contract, "GH-grid references missing matrix id " + std::to_string(id));
    const auto& m = pool_[id];
    require(m.rows() == domain_size_ && m.cols() == domain_size_, ErrorKind::Contract,
            "GH-grid matrix " + std::to_string(id) + " is not " + std::to_string(domain_size_) + "x" +
                std::to_string(domain_size_));
    return &m;
  };
  for (const auto& e : edges_) {
    const auto* m = check_shape(e.matrix);
    require(e.directed || m->is_symmetric(), ErrorKind::Contract,
            "undirected GH-grid edge carries non-symmetric matrix " + std::to_string(e.matrix));
  }
  for (const auto& w : vertex_weight_) {
    if (!w) continue;
    const auto* m = check_shape(*w);
    require(m->is_diagonal(), ErrorKind::Contract, "GH-grid vertex weight " + std::to_string(*w) + " is not diagonal");
  }
}

}  // namespace homdich
