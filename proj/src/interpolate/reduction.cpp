#include "homdich/interpolate/reduction.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "homdich/condense/condense.hpp"
#include "homdich/dichotomy/dichotomy.hpp"
#include "homdich/error.hpp"
#include "homdich/graphs/transforms.hpp"
#include "homdich/io/digest.hpp"
#include "homdich/numeric/recurrence.hpp"
#include "homdich/numeric/vandermonde.hpp"
#include "homdich/partition/collapsed.hpp"
#include "homdich/partition/partition.hpp"

namespace homdich {

namespace {

void check_positive_diagonal(const RationalMatrix& a, const RationalMatrix& d) {
  require(d.is_square() && d.rows() == a.rows(), ErrorKind::Shape, "D size differs from A");
  require(d.is_diagonal(), ErrorKind::Contract, "D must be diagonal");
  for (const auto& x : d.diagonal_entries()) require(sgn(x) > 0, ErrorKind::Contract, "D must be positive");
}

OracleQuery describe(std::size_t n, const Multigraph& h) {
  OracleQuery q;
  q.n = n;
  q.vertices = h.vertex_count();
  q.edges = h.edge_count();
  q.max_degree = h.max_degree();
  q.simple = h.is_simple();
  return q;
}

void compose_exact(ReductionTranscript& tr, std::size_t first_n) {
  std::vector<Rational> samples;
  for (const auto& q : tr.oracle) samples.push_back(q.value);
  // All but the last sample fit the recurrence; the last one is held out.
  const std::vector<Rational> fit(samples.begin(), samples.end() - 1);
  const LinearRecurrence rec = min_recurrence(fit, tr.order_bound);
  if (rec.predict_next(fit) != samples.back()) {
    fail(ErrorKind::OrderBound, "recurrence of order " + std::to_string(rec.order()) +
                                    " does not predict the held-out oracle value");
  }
  tr.recurrence = rec.coefficients;
  tr.recovered_exact = extrapolate_back(rec, fit, first_n - tr.target_n);
}

HighPrecReal at_precision(const HighPrecReal& x, Precision prec) {
  HighPrecReal out(prec);
  out += x;
  return out;
}

// Nodes at a given working precision; recomputed from scratch on every pass.
using NodeSource = std::function<std::vector<HighPrecReal>(Precision)>;

// Extrapolating through the Vandermonde system amplifies node errors by up to
// the spread of the nodes raised to the sample count, so `precision` is the
// target accuracy and the working precision doubles until two passes agree to
// half of it (twice the bits the verdict tolerance asks for). The stopping
// rule never looks at the direct values.
void compose_eigen(ReductionTranscript& tr, const NodeSource& make_nodes, std::size_t first_n) {
  const Precision target = tr.precision;
  const Precision ceiling = 16 * target;
  std::optional<VandermondeSolution> prev;
  std::optional<HighPrecReal> prev_value;
  for (Precision w = target; w <= ceiling; w *= 2) {
    std::vector<HighPrecReal> samples;
    for (const auto& q : tr.oracle) samples.emplace_back(q.value, w);
    VandermondeOptions vo;
    vo.first_exponent = static_cast<long>(first_n);
    vo.require_nonzero_nodes = true;
    std::optional<VandermondeSolution> sol;
    try {
      sol = solve_vandermonde(make_nodes(w), samples, vo);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::IllConditioned) throw;
      prev.reset();
      prev_value.reset();
      continue;
    }
    const HighPrecReal value = sol->evaluate(static_cast<long>(tr.target_n));
    if (prev_value) {
      const HighPrecReal bound = HighPrecReal::exp2(-static_cast<long>(target / 2), w) *
                                 max(HighPrecReal(1L, w), abs(value));
      if (abs(value - *prev_value) <= bound) {
        tr.working_precision = w;
        for (const auto& x : sol->nodes) tr.nodes.push_back(at_precision(x, target).to_string());
        for (const auto& x : sol->coefficients) tr.coefficients.push_back(at_precision(x, target).to_string());
        tr.recovered_decimal = at_precision(value, target).to_string();
        return;
      }
    }
    prev = std::move(sol);
    prev_value = value;
  }
  fail(ErrorKind::IllConditioned, "Vandermonde extrapolation did not settle to " + std::to_string(target) +
                                      " bits below a working precision of " + std::to_string(ceiling) +
                                      "; retry with a higher --precision");
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t bounded_first_n(const Multigraph& g_stripped) {
  const auto deg = g_stripped.degrees();
  return std::find(deg.begin(), deg.end(), 1) != deg.end() ? 2 : 1;
}

std::size_t simple_first_n(const Multigraph& g) { return g.has_loops() ? 3 : 2; }

std::vector<HighPrecReal> product_nodes(const std::vector<HighPrecReal>& lambdas, std::size_t t) {
  const Precision prec = lambdas.empty() ? kDefaultPrecision : lambdas.front().precision();
  std::vector<HighPrecReal> out;
  if (lambdas.empty()) {
    if (t == 0) out.emplace_back(1L, prec);
    return out;
  }
  // Exponent tuples in lexicographic order, generated by recursion on the index.
  std::vector<std::size_t> ex(lambdas.size(), 0);
  auto rec = [&](auto&& self, std::size_t idx, std::size_t left) -> void {
    if (idx + 1 == lambdas.size()) {
      ex[idx] = left;
      HighPrecReal node(1L, prec);
      for (std::size_t j = 0; j < lambdas.size(); ++j) node *= pow(lambdas[j], ex[j]);
      out.push_back(node);
      return;
    }
    for (std::size_t k = left + 1; k-- > 0;) {
      ex[idx] = k;
      self(self, idx + 1, left - k);
    }
  };
  rec(rec, 0, t);
  return out;
}

std::vector<RealMatrix> expansion_tensor(const EigenDecomposition& eig, const std::vector<Rational>& d) {
  const std::size_t m = d.size();
  const Precision prec = eig.precision;
  std::vector<HighPrecReal> inv_sqrt;
  for (const auto& x : d) inv_sqrt.push_back(HighPrecReal(1L, prec) / sqrt(HighPrecReal(x, prec)));
  std::vector<RealMatrix> out;
  for (std::size_t l = 0; l < m; ++l) {
    RealMatrix t(m, m, prec);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) t(i, j) = eig.basis(l, i) * eig.basis(l, j) * inv_sqrt[i] * inv_sqrt[j];
    }
    out.push_back(std::move(t));
  }
  return out;
}

ReductionTranscript run_bounded_reduction(const RationalMatrix& a, const RationalMatrix& d, const Multigraph& g,
                                          const ReductionOptions& opts) {
  require(a.is_square() && a.is_symmetric() && a.is_nonnegative(), ErrorKind::Contract,
          "bounded reduction needs a nonnegative symmetric matrix");
  check_positive_diagonal(a, d);
  require(!g.has_loops(), ErrorKind::Contract, "bounded reduction needs a loopless graph");
  const Verdict v = classify_pair(a, d);
  if (v.tractable) {
    fail(ErrorKind::Contract, "input is tractable (" + to_string(v.reason) + "); the bounded reduction needs a "
                              "matrix that is not block-rank-1");
  }

  ReductionTranscript tr;
  tr.variant = ReductionVariant::Bounded;
  tr.mode = opts.mode;
  tr.precision = opts.precision;
  tr.working_precision = opts.precision;
  tr.a_digest = digest(a);
  tr.d_digest = digest(d);
  tr.g_digest = digest(g);

  const StrippedGraph stripped = strip_isolated(g);
  const Condensation cond = condense(a, d);
  const std::size_t s = cond.s();
  const RationalMatrix d2 = cond.weight(2);
  std::size_t p = 0;
  if (opts.p_override) {
    p = *opts.p_override;
    require(p >= 1, ErrorKind::Contract, "p must be at least 1");
    const auto m = mat_mul(mat_mul(cond.a_prime, d2), cond.a_prime);
    require(sgn(det(hadamard_pow(m, p))) != 0, ErrorKind::Contract,
            "B is degenerate for p = " + std::to_string(p));
  } else {
    p = find_thickening_p(cond.a_prime, d2).p;
  }

  tr.domain_size = s;
  tr.p = p;
  tr.isolated = stripped.isolated;
  tr.t = 2 * stripped.graph.edge_count();
  tr.order_bound = static_cast<std::size_t>(binomial(tr.t + s - 1, s - 1));
  tr.target_n = 0;

  const CycleStructure gp = build_Gprime(stripped.graph);
  const std::size_t first_n = bounded_first_n(stripped.graph);
  const std::size_t e = stripped.graph.edge_count();
  const std::size_t count =
      opts.mode == ReductionMode::ExactRecurrence ? 2 * tr.order_bound + 2 : tr.order_bound + 1;
  for (std::size_t n = first_n; n < first_n + count; ++n) {
    const Multigraph gnp = build_Gnp(gp, n, p);
    OracleQuery q = describe(n, gnp);
    require(q.simple && q.max_degree <= 2 * p + 1 && q.vertices == 2 * n * (p + 1) * e &&
                q.edges == (4 * n * p + 1) * e,
            ErrorKind::Internal, "oracle graph G_{" + std::to_string(n) + "," + std::to_string(p) +
                                     "} violates its structural guarantees");
    q.value = z_ghgrid(collapsed_bounded_grid(gp, cond, p, n), opts.enumeration).value;
    tr.oracle.push_back(q);
  }

  if (opts.mode == ReductionMode::ExactRecurrence) {
    compose_exact(tr, first_n);
  } else {
    const RationalMatrix b = thickened_B(cond, p);
    const auto d2p = cond.weight_diagonal(2 * p);
    const std::size_t t = tr.t;
    compose_eigen(
        tr,
        [&](Precision w) {
          std::vector<HighPrecReal> root;
          for (const auto& x : d2p) root.push_back(sqrt(HighPrecReal(x, w)));
          return product_nodes(sym_eigen(congruence_by_diagonal(RealMatrix(b, w), root)).eigenvalues, t);
        },
        first_n);
  }

  const auto weights = build_weights(cond, p);
  Rational s_h = pow(Rational(static_cast<long>(s)), stripped.isolated);
  tr.direct.push_back({"z_ghgrid(G_0p)", z_ghgrid(collapsed_bounded_grid(gp, cond, p, 0), opts.enumeration).value, 1});
  tr.direct.push_back(
      {"z_degree_weighted(A',P,G)", z_degree_weighted(cond.a_prime, weights.family, g, opts.enumeration).value, s_h});
  tr.direct.push_back({"z_plain(C,G)", z_plain(weights.c, g, opts.enumeration).value, s_h});
  return tr;
}

ReductionTranscript run_simple_reduction(const RationalMatrix& a, const RationalMatrix& d, const Multigraph& g,
                                         const ReductionOptions& opts) {
  require(a.is_square() && a.is_symmetric(), ErrorKind::Contract, "simple reduction needs a symmetric matrix");
  check_positive_diagonal(a, d);

  ReductionTranscript tr;
  tr.variant = ReductionVariant::Simple;
  tr.mode = opts.mode;
  tr.precision = opts.precision;
  tr.working_precision = opts.precision;
  tr.a_digest = digest(a);
  tr.d_digest = digest(d);
  tr.g_digest = digest(g);

  const EdgeSelection f = parallel_and_loop_selection(g);
  const std::size_t r = rank(a);
  tr.domain_size = a.rows();
  tr.rank = r;
  tr.t = 0;
  for (const auto& [pair, mult] : g.edges()) {
    if (f.contains_edge(pair.first, pair.second)) tr.t += mult;
  }
  for (const auto& [v, count] : g.loops()) tr.t += count;
  tr.order_bound = r == 0 ? 1 : static_cast<std::size_t>(binomial(tr.t + r - 1, r - 1));
  tr.target_n = 1;

  const std::size_t first_n = simple_first_n(g);
  const std::size_t count =
      opts.mode == ReductionMode::ExactRecurrence ? 2 * tr.order_bound + 2 : tr.order_bound + 1;
  for (std::size_t n = first_n; n < first_n + count; ++n) {
    const StretchedGraph gn = build_Gn_simple(g, n);
    OracleQuery q = describe(n, gn.graph);
    require(q.simple, ErrorKind::Internal, "oracle graph G_" + std::to_string(n) + " is not simple");
    q.value = z_collapsed_stretch(g, a, d, f, n, opts.enumeration).value;
    tr.oracle.push_back(q);
  }

  if (opts.mode == ReductionMode::ExactRecurrence) {
    compose_exact(tr, first_n);
  } else {
    const std::size_t t = tr.t;
    compose_eigen(
        tr,
        [&](Precision w) {
          std::vector<HighPrecReal> root;
          for (const auto& x : d.diagonal_entries()) root.push_back(sqrt(HighPrecReal(x, w)));
          const auto eig = sym_eigen(congruence_by_diagonal(RealMatrix(a, w), root));
          std::vector<HighPrecReal> lambdas = eig.eigenvalues;
          std::stable_sort(lambdas.begin(), lambdas.end(),
                           [](const HighPrecReal& x, const HighPrecReal& y) { return abs(x) > abs(y); });
          lambdas.resize(r);
          const HighPrecReal floor_tol = HighPrecReal::exp2(-static_cast<long>(w / 2), w) *
                                         max(HighPrecReal(1L, w), eig.source.max_abs());
          for (const auto& l : lambdas) {
            require(abs(l) > floor_tol, ErrorKind::Internal, "a zero eigenvalue leaked into the interpolation nodes");
          }
          return product_nodes(lambdas, t);
        },
        first_n);
  }

  tr.direct.push_back({"z_vertex_weighted(A,D,G)", z_vertex_weighted(a, d, g, opts.enumeration).value, 1});
  return tr;
}

}  // namespace homdich
