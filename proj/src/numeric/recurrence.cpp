#include "homdich/numeric/recurrence.hpp"

#include <deque>

#include "homdich/error.hpp"

namespace homdich {

bool LinearRecurrence::annihilates(const std::vector<Rational>& samples) const {
  const std::size_t c = order();
  for (std::size_t n = 0; n + c < samples.size(); ++n) {
    Rational acc;
    for (std::size_t j = 0; j < c; ++j) acc += coefficients[j] * samples[n + j];
    if (acc != samples[n + c]) return false;
  }
  return true;
}

Rational LinearRecurrence::predict_next(const std::vector<Rational>& samples) const {
  const std::size_t c = order();
  require(samples.size() >= c, ErrorKind::Contract, "predict_next: window shorter than the order");
  const std::size_t base = samples.size() - c;
  Rational acc;
  for (std::size_t j = 0; j < c; ++j) acc += coefficients[j] * samples[base + j];
  return acc;
}

LinearRecurrence min_recurrence(const std::vector<Rational>& samples, std::size_t order_bound) {
  require(samples.size() >= 2 * order_bound, ErrorKind::Contract,
          "min_recurrence: need at least " + std::to_string(2 * order_bound) + " samples, got " +
              std::to_string(samples.size()));
  // Connection polynomial conn(x) = 1 + conn[1] x + ... ; z_n + sum_i conn[i] z_{n-i} = 0.
  std::vector<Rational> conn{Rational(1)};
  std::vector<Rational> prev{Rational(1)};
  std::size_t len = 0;
  std::size_t shift = 1;
  Rational prev_disc = 1;
  for (std::size_t n = 0; n < samples.size(); ++n) {
    Rational disc = samples[n];
    for (std::size_t i = 1; i <= len && i < conn.size(); ++i) disc += conn[i] * samples[n - i];
    if (sgn(disc) == 0) {
      ++shift;
      continue;
    }
    const Rational factor = disc / prev_disc;
    std::vector<Rational> next = conn;
    if (next.size() < prev.size() + shift) next.resize(prev.size() + shift);
    for (std::size_t i = 0; i < prev.size(); ++i) next[i + shift] -= factor * prev[i];
    if (2 * len <= n) {
      prev = conn;
      len = n + 1 - len;
      prev_disc = disc;
      shift = 1;
    } else {
      ++shift;
    }
    conn = std::move(next);
  }
  if (len > order_bound) {
    fail(ErrorKind::OrderBound, "min_recurrence: shortest recurrence has order " + std::to_string(len) +
                                    " > bound " + std::to_string(order_bound));
  }
  conn.resize(len + 1);
  LinearRecurrence rec;
  rec.coefficients.resize(len);
  for (std::size_t j = 0; j < len; ++j) rec.coefficients[j] = -conn[len - j];
  return rec;
}

Rational extrapolate_back(const LinearRecurrence& rec, const std::vector<Rational>& samples, std::size_t steps) {
  require(!samples.empty(), ErrorKind::Contract, "extrapolate_back: empty sample window");
  if (steps == 0) return samples.front();
  const std::size_t c = rec.order();
  if (c == 0) return Rational(0);
  require(samples.size() >= c, ErrorKind::Contract, "extrapolate_back: window shorter than the order");
  const Rational& a0 = rec.coefficients[0];
  if (sgn(a0) == 0) {
    fail(ErrorKind::ZeroConstantTerm,
         "extrapolate_back: recurrence has zero constant term (a zero characteristic root)");
  }
  std::deque<Rational> window(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(c));
  for (std::size_t s = 0; s < steps; ++s) {
    // z_n = (z_{n+c} - sum_{j=1}^{c-1} a_j z_{n+j}) / a_0 with window = z_{n+1..n+c}.
    Rational acc = window[c - 1];
    for (std::size_t j = 1; j < c; ++j) acc -= rec.coefficients[j] * window[j - 1];
    window.push_front(acc / a0);
    window.pop_back();
  }
  return window.front();
}

}  // namespace homdich
