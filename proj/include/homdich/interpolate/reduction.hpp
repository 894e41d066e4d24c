#pragma once

#include <optional>
#include <vector>

#include "homdich/interpolate/transcript.hpp"
#include "homdich/graphs/multigraph.hpp"
#include "homdich/numeric/eigen.hpp"
#include "homdich/partition/enumerate.hpp"

namespace homdich {

struct ReductionOptions {
  ReductionMode mode = ReductionMode::ExactRecurrence;
  Precision precision = kDefaultPrecision;
  std::optional<std::size_t> p_override;  // bounded variant only
  EnumerationOptions enumeration;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// First oracle index with a simple G_{n,p}: 2 when some vertex of g has
// degree 1 (R_{1,1,p} carries double edges), else 1.
std::size_t bounded_first_n(const Multigraph& g_stripped);
// First n with a simple G_n: 3 when g has loops (S_2 of a loop is a double
// edge), else 2.
std::size_t simple_first_n(const Multigraph& g);

// Interpolates Z_C(g) from oracle values on G_{n,p}. Throws Contract when
// (a, d) is block-rank-1.
ReductionTranscript run_bounded_reduction(const RationalMatrix& a, const RationalMatrix& d, const Multigraph& g,
                                          const ReductionOptions& opts = {});

// Interpolates Z_{A,D}(g) from oracle values on the simple graphs G_n.
ReductionTranscript run_simple_reduction(const RationalMatrix& a, const RationalMatrix& d, const Multigraph& g,
                                         const ReductionOptions& opts = {});

// a_ijl with L^(n)_ij = sum_l a_ijl lambda_l^n, from the decomposition of
// B~ = D^{1/2} B D^{1/2}: a_ijl = S_li S_lj / sqrt(D_i D_j). One matrix per l.
std::vector<RealMatrix> expansion_tensor(const EigenDecomposition& eig, const std::vector<Rational>& d);

// Every combination prod_j lambda_j^{i_j} with i_1 + ... + i_k = t.
std::vector<HighPrecReal> product_nodes(const std::vector<HighPrecReal>& lambdas, std::size_t t);

}  // namespace homdich
