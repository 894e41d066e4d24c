#include "homdich/numeric/vandermonde.hpp"

#include <algorithm>

#include "homdich/error.hpp"

namespace homdich {

namespace {

HighPrecReal power(const HighPrecReal& x, long e) {
  if (e >= 0) return pow(x, static_cast<unsigned long>(e));
  return HighPrecReal(1L, x.precision()) / pow(x, static_cast<unsigned long>(-e));
}

Precision max_precision(const std::vector<HighPrecReal>& xs, Precision floor) {
  Precision p = floor;
  for (const auto& x : xs) p = std::max(p, x.precision());
  return p;
}

}  // namespace

HighPrecReal VandermondeSolution::evaluate(long exponent) const {
  HighPrecReal acc(residual.precision());
  for (std::size_t j = 0; j < nodes.size(); ++j) acc += coefficients[j] * power(nodes[j], exponent);
  return acc;
}

HighPrecReal default_merge_tol(const std::vector<HighPrecReal>& nodes, Precision precision) {
  HighPrecReal biggest(precision);
  for (const auto& x : nodes) biggest = max(biggest, abs(x));
  return HighPrecReal::exp2(-static_cast<long>(precision / 2), precision) *
         (HighPrecReal(1L, precision) + biggest);
}

VandermondeSolution solve_vandermonde(const std::vector<HighPrecReal>& nodes,
                                      const std::vector<HighPrecReal>& samples,
                                      const VandermondeOptions& options) {
  const Precision prec = max_precision(samples, max_precision(nodes, kMinPrecision));
  const HighPrecReal tol = options.merge_tol ? *options.merge_tol : default_merge_tol(nodes, prec);

  std::vector<HighPrecReal> merged;
  std::vector<std::size_t> mult;
  for (const auto& x : nodes) {
    if (options.require_nonzero_nodes && abs(x) <= tol) {
      fail(ErrorKind::DegenerateNode, "solve_vandermonde: node " + x.to_string() +
                                          " is zero within tolerance; cannot extrapolate below the samples");
    }
    bool found = false;
    for (std::size_t j = 0; j < merged.size(); ++j) {
      if (abs(merged[j] - x) <= tol) {
        ++mult[j];
        found = true;
        break;
      }
    }
    if (!found) {
      merged.push_back(x);
      mult.push_back(1);
    }
  }
  const std::size_t k = merged.size();
  require(samples.size() >= k, ErrorKind::Contract,
          "solve_vandermonde: " + std::to_string(samples.size()) + " samples for " + std::to_string(k) +
              " distinct nodes");

  // Row r: sum_j c_j node_j^(e0 + r) = sample_r. Gaussian elimination with
  // partial pivoting on the k x k leading block.
  std::vector<std::vector<HighPrecReal>> m(k, std::vector<HighPrecReal>(k + 1, HighPrecReal(prec)));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t j = 0; j < k; ++j) m[r][j] = power(merged[j], options.first_exponent + static_cast<long>(r));
    m[r][k] = samples[r];
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < k; ++r) {
      if (abs(m[r][c]) > abs(m[piv][c])) piv = r;
    }
    if (m[piv][c].is_zero()) {
      fail(ErrorKind::IllConditioned, "solve_vandermonde: singular system after merging");
    }
    std::swap(m[piv], m[c]);
    for (std::size_t r = c + 1; r < k; ++r) {
      const HighPrecReal f = m[r][c] / m[c][c];
      for (std::size_t j = c; j <= k; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<HighPrecReal> coef(k, HighPrecReal(prec));
  for (std::size_t c = k; c-- > 0;) {
    HighPrecReal acc = m[c][k];
    for (std::size_t j = c + 1; j < k; ++j) acc -= m[c][j] * coef[j];
    coef[c] = acc / m[c][c];
  }

  VandermondeSolution sol{merged, mult, coef, HighPrecReal(prec), tol, HighPrecReal(1L, prec)};
  for (const auto& y : samples) sol.scale = max(sol.scale, abs(y));
  for (std::size_t r = 0; r < samples.size(); ++r) {
    const HighPrecReal fit = sol.evaluate(options.first_exponent + static_cast<long>(r));
    sol.residual = max(sol.residual, abs(fit - samples[r]));
  }
  if (sol.residual > tol * sol.scale) {
    fail(ErrorKind::IllConditioned, "solve_vandermonde: residual " + sol.residual.to_string() +
                                        " exceeds tolerance; retry at higher precision");
  }
  return sol;
}

}  // namespace homdich
