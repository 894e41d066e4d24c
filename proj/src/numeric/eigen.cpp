#include "homdich/numeric/eigen.hpp"

#include <algorithm>
#include <numeric>

#include "homdich/error.hpp"

namespace homdich {

HighPrecReal EigenDecomposition::orthogonality_residual() const {
  const std::size_t n = basis.rows();
  RealMatrix prod = mat_mul(basis, transpose(basis));
  RealMatrix diff = prod - RealMatrix::identity(n, precision);
  return diff.max_abs();
}

HighPrecReal EigenDecomposition::reconstruction_residual() const {
  const std::size_t n = basis.rows();
  RealMatrix j(n, n, precision);
  for (std::size_t i = 0; i < n; ++i) j(i, i) = eigenvalues[i];
  RealMatrix rebuilt = mat_mul(mat_mul(transpose(basis), j), basis);
  return (rebuilt - source).max_abs();
}

bool EigenDecomposition::satisfies_invariants() const {
  const HighPrecReal tol = HighPrecReal::exp2(-static_cast<long>(precision / 2), precision);
  if (orthogonality_residual() > tol) return false;
  const HighPrecReal scale = source.max_abs();
  return reconstruction_residual() <= tol * max(scale, HighPrecReal(1L, precision));
}

EigenDecomposition sym_eigen(const RealMatrix& input, int max_sweeps) {
  require(input.rows() == input.cols() && input.is_symmetric(), ErrorKind::Contract,
          "sym_eigen: input matrix is not symmetric");
  const std::size_t n = input.rows();
  const Precision prec = input.precision();
  RealMatrix a = input;
  RealMatrix v = RealMatrix::identity(n, prec);

  HighPrecReal norm_sq(prec);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) norm_sq += a(i, j) * a(i, j);
  }
  // Stop once the off-diagonal mass is below (2^(16-prec))^2 * ||a||_F^2.
  const HighPrecReal thresh = HighPrecReal::exp2(2 * (16 - static_cast<long>(prec)), prec) * norm_sq;
  const HighPrecReal one(1L, prec);
  const HighPrecReal two(2L, prec);

  bool converged = n <= 1 || norm_sq.is_zero();
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    HighPrecReal off(prec);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    }
    if (two * off <= thresh) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q).is_zero()) continue;
        const HighPrecReal theta = (a(q, q) - a(p, p)) / (two * a(p, q));
        HighPrecReal t = one / (abs(theta) + sqrt(theta * theta + one));
        if (theta.sign() < 0) t = -t;
        const HighPrecReal c = one / sqrt(t * t + one);
        const HighPrecReal s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const HighPrecReal akp = a(k, p);
          const HighPrecReal akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const HighPrecReal apk = a(p, k);
          const HighPrecReal aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const HighPrecReal vkp = v(k, p);
          const HighPrecReal vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged) {
    HighPrecReal off(prec);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    }
    if (!(two * off <= thresh)) {
      fail(ErrorKind::Precision, "sym_eigen: Jacobi sweeps did not converge at " + std::to_string(prec) +
                                     " bits; retry at higher precision");
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

  EigenDecomposition out{{}, RealMatrix(n, n, prec), input, prec};
  out.eigenvalues.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    out.eigenvalues.push_back(a(order[r], order[r]));
    for (std::size_t k = 0; k < n; ++k) out.basis(r, k) = v(k, order[r]);
  }
  return out;
}

EigenDecomposition sym_eigen(const RationalMatrix& a, Precision precision) {
  require(a.is_symmetric(), ErrorKind::Contract, "sym_eigen: input matrix is not symmetric");
  return sym_eigen(RealMatrix(a, precision));
}

}  // namespace homdich
