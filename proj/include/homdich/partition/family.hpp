#pragma once

#include <cstddef>
#include <vector>

#include "homdich/numeric/matrix.hpp"

namespace homdich {

// Degree-indexed vertex weights: a vertex of degree k gets diag(D^[[k]]).
class DegreeWeightFamily {
 public:
  enum class Kind { Explicit, Constant, Condensed, Power };

  // diagonals[k] for k = 0..max; degrees above max are a contract error.
  static DegreeWeightFamily explicit_list(std::vector<std::vector<Rational>> diagonals);
  static DegreeWeightFamily constant(std::vector<Rational> diagonal);
  // D^[[k]]_i = sum_j alpha[i][j] * mu[i][j]^k
  static DegreeWeightFamily condensed(std::vector<std::vector<Rational>> alpha,
                                      std::vector<std::vector<Rational>> mu);
  // P^[[k]]_j = w_j^k, P^[[0]] = I.
  static DegreeWeightFamily power(std::vector<Rational> w);

  Kind kind() const noexcept { return kind_; }
  std::size_t domain_size() const noexcept { return size_; }
  std::vector<Rational> diagonal(std::size_t k) const;
  RationalMatrix matrix(std::size_t k) const;

 private:
  DegreeWeightFamily(Kind kind, std::size_t size) : kind_(kind), size_(size) {}

  Kind kind_;
  std::size_t size_;
  std::vector<std::vector<Rational>> a_;  // Explicit: diagonals; Condensed: alpha
  std::vector<std::vector<Rational>> b_;  // Condensed: mu
  std::vector<Rational> w_;               // Constant / Power
};

}  // namespace homdich
