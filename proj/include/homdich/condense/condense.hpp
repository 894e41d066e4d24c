#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "homdich/condense/condensation.hpp"
#include "homdich/partition/family.hpp"

namespace homdich {

struct StrikeResult {
  RationalMatrix a;
  RationalMatrix d;
  std::vector<std::size_t> kept;    // original indices of the surviving rows
  std::vector<std::size_t> struck;  // original indices removed
};

// Removes all-zero rows/columns of a together with the matching entries of d.
// Throws EmptyDomain when nothing survives.
StrikeResult strike_zero_rows(const RationalMatrix& a, const RationalMatrix& d);

// a nonnegative symmetric, d positive diagonal. Zero rows are struck first.
Condensation condense(const RationalMatrix& a, const RationalMatrix& d);

// Condensed family D^[[k]]_i = sum_j alpha_ij mu_ij^k.
DegreeWeightFamily family_from(const Condensation& cond);

struct AdaIndependenceCheck {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> violating_columns;
  RationalMatrix ada;
};

// Exact check that the columns of A' D A' are nonzero and pairwise independent.
AdaIndependenceCheck check_ada_independence(const RationalMatrix& a_prime, const RationalMatrix& d);

struct ThickeningCertificate {
  std::size_t p = 1;
  Rational gamma_sq;
  std::size_t analytic_bound = 1;
  Rational det_B;
};

// Smallest p >= 1 with det((A' D2 A')^{(.)p}) != 0.
ThickeningCertificate find_thickening_p(const RationalMatrix& a_prime, const RationalMatrix& d2);

// gamma^2 = max_{i<j} M_ij^2 / (M_ii M_jj) for M = A' D2 A' (0 when m = 1).
Rational thickening_gamma_sq(const RationalMatrix& a_prime, const RationalMatrix& d2);
std::size_t thickening_analytic_bound(const Rational& gamma_sq, std::size_t m);

struct RedistributedWeights {
  std::vector<Rational> w;  // w_j = D^[[2p+1]]_j / D^[[2p]]_j
  DegreeWeightFamily family;
  RationalMatrix c;  // C_ij = A'_ij w_i w_j
};

RedistributedWeights build_weights(const Condensation& cond, std::size_t p);

}  // namespace homdich
