#pragma once

#include <cstddef>
#include <vector>

#include "homdich/numeric/matrix.hpp"

namespace homdich {

// Compressed form of (A, D): surviving indices of [m] are grouped into s
// classes of pairwise linearly dependent columns. Group members are original
// indices, ascending; the first is the representative with mu = 1.
//   A[g_i[j]][g_k[l]] = mu[i][j] * mu[k][l] * a_prime(i, k)
struct Condensation {
  std::size_t original_size = 0;
  std::vector<std::size_t> struck;
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::vector<Rational>> mu;
  std::vector<std::vector<Rational>> alpha;
  RationalMatrix a_prime;

  std::size_t s() const noexcept { return groups.size(); }
  // D^[[k]]_i = sum_j alpha_ij mu_ij^k
  std::vector<Rational> weight_diagonal(std::size_t k) const;
  RationalMatrix weight(std::size_t k) const;
};

}  // namespace homdich
