#include "homdich/interpolate/stratification.hpp"

#include <map>

#include "homdich/error.hpp"
#include "homdich/graphs/transforms.hpp"

namespace homdich {

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void compositions(std::size_t total, std::size_t parts, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::size_t k = total + 1; k-- > 0;) {
    cur.push_back(k);
    compositions(total - k, parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::uint64_t stratification_size(std::size_t t, std::size_t s) {
  const std::uint64_t q = s * (s + 1) / 2;
  return q == 0 ? (t == 0 ? 1 : 0) : binom(t + q - 1, q - 1);
}

Rational Stratification::evaluate(const RationalMatrix& l) const {
  require(l.rows() == s && l.cols() == s, ErrorKind::Shape, "transfer matrix size differs from s");
  Rational total;
  for (std::size_t k = 0; k < kappa_index.size(); ++k) {
    if (sgn(coefficients[k]) == 0) continue;
    Rational term = coefficients[k];
    for (std::size_t q = 0; q < pair_types.size(); ++q) {
      term *= pow(l(pair_types[q].first, pair_types[q].second), kappa_index[k][q]);
    }
    total += term;
  }
  return total;
}

Stratification compute_stratification(const Multigraph& g, const Condensation& cond, std::size_t p,
                                      const EnumerationOptions& opts) {
  const CycleStructure gp = build_Gprime(g);
  Stratification st;
  st.s = cond.s();
  st.t = gp.cycle_edges.size();
  const std::size_t s = st.s;
  std::vector<std::vector<std::size_t>> type_of(s, std::vector<std::size_t>(s));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i; j < s; ++j) {
      type_of[i][j] = type_of[j][i] = st.pair_types.size();
      st.pair_types.emplace_back(i, j);
    }
  }
  std::vector<std::size_t> cur;
  if (!st.pair_types.empty()) compositions(st.t, st.pair_types.size(), cur, st.kappa_index);
  std::map<std::vector<std::size_t>, std::size_t> position;
  for (std::size_t k = 0; k < st.kappa_index.size(); ++k) position[st.kappa_index[k]] = k;
  st.coefficients.assign(st.kappa_index.size(), Rational(0));

  const std::size_t n = gp.graph.vertex_count();
  const WeightedInstance sizing(n, s);
  const std::uint64_t terms = sizing.term_count_or_budget_error(opts.budget);
  const auto vw = cond.weight_diagonal(2 * p + 1);
  const auto& ap = cond.a_prime;
  std::vector<std::size_t> zeta(n, 0);
  std::vector<std::size_t> kappa(st.pair_types.size());
  for (std::uint64_t term = 0; term < terms; ++term) {
    Rational w = 1;
    for (std::size_t v = 0; v < n; ++v) w *= vw[zeta[v]];
    for (const auto& [u, v] : gp.merged_edges) w *= ap(zeta[u], zeta[v]);
    if (sgn(w) != 0) {
      std::fill(kappa.begin(), kappa.end(), 0);
      for (const auto& [u, v] : gp.cycle_edges) ++kappa[type_of[zeta[u]][zeta[v]]];
      st.coefficients[position.at(kappa)] += w;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (++zeta[v] < s) break;
      zeta[v] = 0;
    }
  }
  return st;
}

}  // namespace homdich
