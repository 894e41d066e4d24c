#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "homdich/numeric/matrix.hpp"

namespace homdich {

using MatrixId = std::size_t;

// One edge of a GH-grid. A loop has u == v and reads the diagonal of its
// matrix. Directed edges index rows by the tail u and columns by the head v.
struct GHEdge {
  std::size_t u;
  std::size_t v;
  MatrixId matrix;
  bool directed = false;
};

// A graph whose edges and vertices carry individually assigned weight
// matrices drawn from a shared pool. Vertices without an assigned weight
// matrix contribute a factor of 1.
class GHGrid {
 public:
  GHGrid(std::size_t vertex_count, std::size_t domain_size)
      : vertex_count_(vertex_count), domain_size_(domain_size), vertex_weight_(vertex_count) {}

  MatrixId add_matrix(RationalMatrix m);
  void add_edge(std::size_t u, std::size_t v, MatrixId matrix, bool directed = false);
  void set_vertex_weight(std::size_t v, MatrixId matrix);
  void set_all_vertex_weights(MatrixId matrix);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t domain_size() const noexcept { return domain_size_; }
  const std::vector<GHEdge>& edges() const noexcept { return edges_; }
  const std::vector<std::optional<MatrixId>>& vertex_weights() const noexcept { return vertex_weight_; }
  const std::vector<RationalMatrix>& matrix_pool() const noexcept { return pool_; }

  // Throws Contract when an id is missing, an undirected edge carries a
  // non-symmetric matrix, a vertex weight is not diagonal, or sizes disagree.
  void validate() const;

 private:
  std::size_t vertex_count_;
  std::size_t domain_size_;
  std::vector<GHEdge> edges_;
  std::vector<std::optional<MatrixId>> vertex_weight_;
  std::vector<RationalMatrix> pool_;
};

}  // namespace homdich
