#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "homdich/numeric/matrix.hpp"

namespace homdich {

inline constexpr std::uint64_t kDefaultTermBudget = 200'000'000;

struct EnumerationOptions {
  std::uint64_t budget = kDefaultTermBudget;
  int threads = 0;  // 0: OpenMP default
  bool serial_reference = false;
};

struct PartitionValue {
  Rational value;
  std::uint64_t term_count = 0;  // domain^|V| assignments enumerated
};

// Sum over all maps xi: V -> [domain] of
//   prod_v vertex_weight[v][xi(v)] * prod_f table_f[xi(u_f)][xi(v_f)].
// Loops are folded into vertex weights by the builders.
class WeightedInstance {
 public:
  struct Factor {
    std::size_t u;
    std::size_t v;
    std::vector<Rational> table;  // row-major domain x domain, rows indexed by u
  };

  WeightedInstance(std::size_t vertex_count, std::size_t domain);

  std::size_t vertex_count() const noexcept { return weights_.size(); }
  std::size_t domain() const noexcept { return domain_; }
  const std::vector<Rational>& vertex_weight(std::size_t v) const { return weights_[v]; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }

  // Multiplies the weight vector of v entrywise.
  void scale_vertex(std::size_t v, const std::vector<Rational>& weights);
  // Multiplies the factor between (u, v) by `table`; u != v. Parallel
  // factors on the same ordered pair merge into one table.
  void multiply_factor(std::size_t u, std::size_t v, const std::vector<Rational>& table);

  std::uint64_t term_count_or_budget_error(std::uint64_t budget) const;

 private:
  std::size_t domain_;
  std::vector<std::vector<Rational>> weights_;
  std::vector<Factor> factors_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> factor_index_;
};

// Reference: straight mixed-radix odometer over every assignment, full product
// per term. Kept serial and simple for cross-checking.
PartitionValue enumerate_serial(const WeightedInstance& inst, const EnumerationOptions& opts = {});

// OpenMP: the first few vertices (in a connectivity-driven order) fix a prefix
// block per task, the rest is a depth-first search with zero pruning. Exact
// addition makes the result independent of the schedule.
PartitionValue enumerate_parallel(const WeightedInstance& inst, const EnumerationOptions& opts = {});

// Dispatches on opts.serial_reference.
PartitionValue enumerate(const WeightedInstance& inst, const EnumerationOptions& opts = {});

}  // namespace homdich
