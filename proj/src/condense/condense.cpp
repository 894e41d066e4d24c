#include "homdich/condense/condense.hpp"

#include <cmath>
#include <numeric>

#include "homdich/error.hpp"

namespace homdich {

namespace {

void check_pair(const RationalMatrix& a, const RationalMatrix& d) {
  require(a.is_square() && a.is_symmetric(), ErrorKind::Contract, "A must be square and symmetric");
  require(a.is_nonnegative(), ErrorKind::Contract, "A must be nonnegative");
  require(d.is_square() && d.rows() == a.rows(), ErrorKind::Shape, "D size differs from A");
  require(d.is_diagonal(), ErrorKind::Contract, "D must be diagonal");
  for (const auto& x : d.diagonal_entries()) require(sgn(x) > 0, ErrorKind::Contract, "D must be positive");
}

// Smallest element is the root so representatives are the lowest index.
std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Some ratio r with column j = r * column i, if the columns are proportional.
std::optional<Rational> column_ratio(const RationalMatrix& a, std::size_t i, std::size_t j) {
  std::size_t ref = a.rows();
  for (std::size_t k = 0; k < a.rows(); ++k) {
    if (sgn(a(k, i)) != 0) {
      ref = k;
      break;
    }
  }
  if (ref == a.rows()) return std::nullopt;
  const Rational r = a(ref, j) / a(ref, i);
  for (std::size_t k = 0; k < a.rows(); ++k) {
    if (a(k, j) != r * a(k, i)) return std::nullopt;
  }
  return r;
}

}  // namespace

StrikeResult strike_zero_rows(const RationalMatrix& a, const RationalMatrix& d) {
  require(a.is_square(), ErrorKind::Shape, "A must be square");
  require(d.is_square() && d.rows() == a.rows(), ErrorKind::Shape, "D size differs from A");
  StrikeResult out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < a.cols() && zero; ++j) zero = sgn(a(i, j)) == 0;
    (zero ? out.struck : out.kept).push_back(i);
  }
  require(!out.kept.empty(), ErrorKind::EmptyDomain, "every row of A is zero");
  out.a = principal_submatrix(a, out.kept);
  out.d = principal_submatrix(d, out.kept);
  return out;
}

Condensation condense(const RationalMatrix& a, const RationalMatrix& d) {
  check_pair(a, d);
  const auto st = strike_zero_rows(a, d);
  const std::size_t n = st.kept.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (find_root(parent, j) != j) continue;
      if (column_ratio(st.a, i, j)) {
        const std::size_t ri = find_root(parent, i);
        parent[j] = ri;
      }
    }
  }
  Condensation c;
  c.original_size = a.rows();
  c.struck = st.struck;
  std::vector<std::size_t> group_of(n, n);
  std::vector<std::size_t> reps;
  const auto dd = st.d.diagonal_entries();
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t r = find_root(parent, j);
    if (group_of[r] == n) {
      group_of[r] = c.groups.size();
      c.groups.emplace_back();
      c.mu.emplace_back();
      c.alpha.emplace_back();
      reps.push_back(r);
    }
    const std::size_t gi = group_of[r];
    c.groups[gi].push_back(st.kept[j]);
    c.mu[gi].push_back(r == j ? Rational(1) : *column_ratio(st.a, r, j));
    c.alpha[gi].push_back(dd[j]);
  }
  c.a_prime = principal_submatrix(st.a, reps);
  return c;
}

DegreeWeightFamily family_from(const Condensation& cond) { return DegreeWeightFamily::condensed(cond.alpha, cond.mu); }

AdaIndependenceCheck check_ada_independence(const RationalMatrix& a_prime, const RationalMatrix& d) {
  require(a_prime.is_square() && d.is_square() && d.rows() == a_prime.rows() && d.is_diagonal(), ErrorKind::Shape,
          "A' and D must be square of equal size, D diagonal");
  AdaIndependenceCheck out;
  out.ada = mat_mul(mat_mul(a_prime, d), a_prime);
  const auto& m = out.ada;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n && out.holds; ++i) {
    bool nonzero = false;
    for (std::size_t k = 0; k < n; ++k) nonzero = nonzero || sgn(m(k, i)) != 0;
    if (!nonzero) {
      out.holds = false;
      out.violating_columns = std::make_pair(i, i);
    }
  }
  for (std::size_t i = 0; i < n && out.holds; ++i) {
    for (std::size_t j = i + 1; j < n && out.holds; ++j) {
      bool independent = false;
      for (std::size_t k = 0; k < n && !independent; ++k) {
        for (std::size_t l = k + 1; l < n && !independent; ++l) {
          independent = m(k, i) * m(l, j) != m(k, j) * m(l, i);
        }
      }
      if (!independent) {
        out.holds = false;
        out.violating_columns = std::make_pair(i, j);
      }
    }
  }
  return out;
}

Rational thickening_gamma_sq(const RationalMatrix& a_prime, const RationalMatrix& d2) {
  const auto m = mat_mul(mat_mul(a_prime, d2), a_prime);
  Rational best;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i + 1; j < m.rows(); ++j) {
      require(sgn(m(i, i)) > 0 && sgn(m(j, j)) > 0, ErrorKind::Contract, "A' D A' has a zero diagonal entry");
      const Rational g = m(i, j) * m(i, j) / (m(i, i) * m(j, j));
      if (g > best) best = g;
    }
  }
  return best;
}

std::size_t thickening_analytic_bound(const Rational& gamma_sq, std::size_t m) {
  if (m <= 1) return 1;
  require(gamma_sq < 1, ErrorKind::Contract, "gamma^2 must be below 1; columns of A' are not independent");
  if (sgn(gamma_sq) == 0) return 2;
  const double ln_inv_gamma = -0.5 * std::log(gamma_sq.get_d());
  const double raw = std::floor(std::log(2.0 * static_cast<double>(m)) / ln_inv_gamma) + 1.0;
  return static_cast<std::size_t>(raw) + 1;
}

ThickeningCertificate find_thickening_p(const RationalMatrix& a_prime, const RationalMatrix& d2) {
  require(a_prime.is_square() && a_prime.rows() > 0, ErrorKind::Shape, "A' must be a nonempty square matrix");
  ThickeningCertificate cert;
  cert.gamma_sq = thickening_gamma_sq(a_prime, d2);
  cert.analytic_bound = thickening_analytic_bound(cert.gamma_sq, a_prime.rows());
  const auto m = mat_mul(mat_mul(a_prime, d2), a_prime);
  for (std::size_t p = 1; p <= cert.analytic_bound; ++p) {
    Rational dt = det(hadamard_pow(m, p));
    if (sgn(dt) != 0) {
      cert.p = p;
      cert.det_B = dt;
      return cert;
    }
  }
  fail(ErrorKind::Internal, "no nondegenerate thickening up to the analytic bound " +
                                std::to_string(cert.analytic_bound));
}

RedistributedWeights build_weights(const Condensation& cond, std::size_t p) {
  require(p >= 1, ErrorKind::Contract, "thickening power must be at least 1");
  const auto num = cond.weight_diagonal(2 * p + 1);
  const auto den = cond.weight_diagonal(2 * p);
  std::vector<Rational> w(cond.s());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = num[i] / den[i];
  const std::size_t s = cond.s();
  std::vector<Rational> c(s * s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) c[i * s + j] = cond.a_prime(i, j) * w[i] * w[j];
  }
  return {w, DegreeWeightFamily::power(w), RationalMatrix(s, s, std::move(c))};
}

}  // namespace homdich
