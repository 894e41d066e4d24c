#pragma once

#include <cstddef>
#include <vector>

#include "homdich/numeric/rational.hpp"

namespace homdich {

// z_{n+c} = sum_{j<c} coefficients[j] * z_{n+j}, c = order().
struct LinearRecurrence {
  std::vector<Rational> coefficients;

  std::size_t order() const noexcept { return coefficients.size(); }
  // Does the recurrence hold on every full window of `samples`?
  bool annihilates(const std::vector<Rational>& samples) const;
  // Next term after the window ending at samples.back().
  Rational predict_next(const std::vector<Rational>& samples) const;
};

// Berlekamp-Massey over Q. Requires samples.size() >= 2 * order_bound; throws
// OrderBound when the shortest recurrence exceeds order_bound.
LinearRecurrence min_recurrence(const std::vector<Rational>& samples, std::size_t order_bound);

// Runs the recurrence backwards `steps` times from a window starting at some
// index n0 >= steps and returns z_{n0 - steps}. Throws ZeroConstantTerm when
// coefficients[0] == 0.
Rational extrapolate_back(const LinearRecurrence& rec, const std::vector<Rational>& samples, std::size_t steps);

}  // namespace homdich
