#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "homdich/condense/condensation.hpp"
#include "homdich/graphs/multigraph.hpp"
#include "homdich/partition/enumerate.hpp"

namespace homdich {

// c_kappa for every kappa = (k_ij)_{i<=j} summing to t, the number of cycle
// edges of G'. Pair types are ordered (0,0), (0,1), ..., (s-1,s-1).
struct Stratification {
  std::size_t s = 0;
  std::size_t t = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pair_types;
  std::vector<std::vector<std::size_t>> kappa_index;
  std::vector<Rational> coefficients;

  // sum_kappa c_kappa prod (L_ij)^{k_ij}
  Rational evaluate(const RationalMatrix& l) const;
};

// binom(t + q - 1, q - 1) with q = s(s+1)/2.
std::uint64_t stratification_size(std::size_t t, std::size_t s);

Stratification compute_stratification(const Multigraph& g, const Condensation& cond, std::size_t p,
                                      const EnumerationOptions& opts = {});

}  // namespace homdich
