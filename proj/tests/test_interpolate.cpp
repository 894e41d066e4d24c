#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homdich/condense/condense.hpp"
#include "homdich/graphs/transforms.hpp"
#include "homdich/interpolate/reduction.hpp"
#include "homdich/interpolate/stratification.hpp"
#include "homdich/partition/collapsed.hpp"
#include "homdich/partition/partition.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace homdich;
using M = RationalMatrix;

namespace {

const M kHardcore = M::from_rows({{1, 1}, {1, 0}});

Multigraph path(std::size_t edges) {
  Multigraph g(edges + 1);
  for (std::size_t v = 0; v < edges; ++v) g.add_edge(v, v + 1);
  return g;
}

Multigraph double_edge() {
  Multigraph g(2);
  g.add_edge(0, 1, 2);
  return g;
}

HighPrecReal gap(const HighPrecReal& x, const Rational& y) { return abs(x - HighPrecReal(y, x.precision())); }

void require_sound(const ReductionTranscript& t) {
  REQUIRE(t.verdict() != ReductionVerdict::Mismatch);
  for (const auto& q : t.oracle) REQUIRE(q.simple);
  REQUIRE(t.oracle.size() <= 2 * t.order_bound + 3);
}

}  // namespace

TEST_CASE("stratification size and single-edge example") {
  CHECK(stratification_size(2, 1) == 1);
  CHECK(stratification_size(2, 2) == 6);   // binom(4, 2)
  CHECK(stratification_size(4, 2) == 15);  // binom(6, 2)
  CHECK(stratification_size(0, 3) == 1);
  const auto cond = condense(M::from_rows({{2}}), diag_of({3}));
  const auto st = compute_stratification(path(1), cond, 1);
  REQUIRE(st.coefficients.size() == 1);
  CHECK(st.t == 2);
  // D^[[3]] = 3, squared, times A' = 2.
  CHECK(st.coefficients[0] == 18);
}

TEST_CASE("property: stratification reproduces the collapsed oracle") {
  oracle::Rng rng(101);
  const std::vector<M> mats = {kHardcore, M::from_rows({{1, 2, 1}, {2, 4, 2}, {1, 2, 0}}),
                               M::from_rows({{2, 1}, {1, 3}})};
  for (const auto& a : mats) {
    const auto cond = condense(a, oracle::random_positive_diagonal(rng, a.rows()));
    const std::size_t p = find_thickening_p(cond.a_prime, cond.weight(2)).p;
    for (const auto& g : {path(1), path(2), double_edge()}) {
      const auto st = compute_stratification(g, cond, p);
      REQUIRE(st.kappa_index.size() == stratification_size(st.t, cond.s()));
      for (const auto& c : st.coefficients) REQUIRE(c >= 0);
      for (std::size_t n = 0; n <= 3; ++n) {
        REQUIRE(st.evaluate(transfer_L(cond, p, n)) == z_collapsed_bounded(g, cond, p, n).value);
      }
    }
  }
}

TEST_CASE("bounded reduction examples") {
  const auto t = run_bounded_reduction(kHardcore, M::identity(2), path(1));
  CHECK(t.verdict() == ReductionVerdict::Equal);
  REQUIRE(t.recovered_exact);
  const auto cond = condense(kHardcore, M::identity(2));
  const auto w = build_weights(cond, t.p);
  CHECK(*t.recovered_exact == oracle::brute_z(w.c, path(1)));
  CHECK(t.direct.size() == 3);
  for (const auto& q : t.oracle) {
    CHECK(q.simple);
    CHECK(q.max_degree <= 2 * t.p + 1);
  }
  CHECK_THROWS_KIND(run_bounded_reduction(M::from_rows({{1, 2}, {2, 4}}), M::identity(2), path(1)), ErrorKind::Contract);
  Multigraph iso = path(1);
  iso.add_vertex();
  const auto ti = run_bounded_reduction(kHardcore, M::identity(2), iso);
  CHECK(ti.isolated == 1);
  CHECK(ti.verdict() == ReductionVerdict::Equal);
  CHECK(*ti.recovered_exact * 2 == oracle::brute_z(w.c, iso));
  Multigraph looped(1);
  looped.add_loop(0);
  CHECK_THROWS(run_bounded_reduction(kHardcore, M::identity(2), looped));
}

TEST_CASE("bounded reduction window starts after the degenerate gadget") {
  CHECK(bounded_first_n(path(1)) == 2);
  Multigraph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  CHECK(bounded_first_n(tri) == 1);
  CHECK(simple_first_n(path(2)) == 2);
  Multigraph loop(1);
  loop.add_loop(0);
  CHECK(simple_first_n(loop) == 3);
  const auto t = run_bounded_reduction(kHardcore, M::identity(2), tri);
  CHECK(t.oracle.front().n == 1);
  CHECK(t.verdict() == ReductionVerdict::Equal);
}

TEST_CASE("simple reduction examples") {
  const auto t = run_simple_reduction(M::from_rows({{0, 1}, {1, 0}}), M::identity(2), double_edge());
  CHECK(t.verdict() == ReductionVerdict::Equal);
  CHECK(*t.recovered_exact == 2);
  const auto s = run_simple_reduction(kHardcore, M::identity(2), path(2));
  CHECK(s.t == 0);
  CHECK(s.order_bound == 1);
  CHECK(*s.recovered_exact == 5);
  Multigraph loop(1);
  loop.add_loop(0);
  const auto l = run_simple_reduction(kHardcore, M::identity(2), loop);
  CHECK(*l.recovered_exact == 1);
  CHECK(l.verdict() == ReductionVerdict::Equal);
  for (const auto& q : l.oracle) CHECK(q.simple);
  const auto neg = run_simple_reduction(M::from_rows({{1, -2}, {-2, 1}}), diag_of({1, 3}), double_edge());
  CHECK(*neg.recovered_exact == oracle::brute_z(M::from_rows({{1, -2}, {-2, 1}}), diag_of({1, 3}), double_edge()));
}

TEST_CASE("property: simple reduction recovers brute force on random multigraphs") {
  oracle::Rng rng(103);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = static_cast<std::size_t>(rng.uniform(1, 3));
    const M a = oracle::random_symmetric(rng, m, -3, 3, 2, 0.2);
    const M d = oracle::random_positive_diagonal(rng, m);
    const auto g = oracle::random_multigraph(rng, static_cast<std::size_t>(rng.uniform(1, 3)),
                                             static_cast<std::size_t>(rng.uniform(0, 4)), true);
    const auto t = run_simple_reduction(a, d, g);
    require_sound(t);
    REQUIRE(t.verdict() == ReductionVerdict::Equal);
    REQUIRE(*t.recovered_exact == oracle::brute_z(a, d, g));
    REQUIRE(t.order_bound == binomial(t.t + std::max<std::size_t>(t.rank, 1) - 1, std::max<std::size_t>(t.rank, 1) - 1));
  }
}

TEST_CASE("property: bounded reduction recovers Z_C on random loopless multigraphs") {
  oracle::Rng rng(107);
  const std::vector<M> mats = {kHardcore, M::from_rows({{1, 2, 1}, {2, 4, 2}, {1, 2, 0}}),
                               M::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})};
  for (int trial = 0; trial < 12; ++trial) {
    const M& a = mats[static_cast<std::size_t>(trial) % mats.size()];
    const M d = oracle::random_positive_diagonal(rng, a.rows());
    const auto g = oracle::random_multigraph(rng, static_cast<std::size_t>(rng.uniform(2, 3)),
                                             static_cast<std::size_t>(rng.uniform(1, 2)), false);
    const auto t = run_bounded_reduction(a, d, g);
    require_sound(t);
    REQUIRE(t.verdict() == ReductionVerdict::Equal);
    const auto cond = condense(a, d);
    const auto w = build_weights(cond, t.p);
    REQUIRE(*t.recovered_exact * pow(Rational(cond.s()), t.isolated) == oracle::brute_z(w.c, g));
  }
}

TEST_CASE("eigen mode agrees with exact mode") {
  ReductionOptions eig;
  eig.mode = ReductionMode::EigenVandermonde;
  eig.precision = 256;
  const auto b = run_bounded_reduction(kHardcore, M::identity(2), path(1), eig);
  CHECK(b.verdict() == ReductionVerdict::WithinTolerance);
  const auto be = run_bounded_reduction(kHardcore, M::identity(2), path(1));
  CHECK(gap(HighPrecReal::parse(b.recovered_decimal, 256), *be.recovered_exact) < HighPrecReal::exp2(-64, 256));
  const auto s = run_simple_reduction(M::from_rows({{1, -2}, {-2, 1}}), diag_of({1, 3}), double_edge(), eig);
  CHECK(s.verdict() == ReductionVerdict::WithinTolerance);
  CHECK(s.nodes.size() == 3);  // rank 2, t = 2
}

TEST_CASE("expansion tensor is symmetric and reproduces the transfer matrices") {
  const auto cond = condense(M::from_rows({{2, 1}, {1, 3}}), diag_of({1, 2}));
  const std::size_t p = 1;
  const M b = thickened_B(cond, p);
  const auto d = cond.weight_diagonal(2 * p);
  const Precision prec = 256;
  RealMatrix bt(b, prec);
  std::vector<HighPrecReal> root;
  for (const auto& x : d) root.push_back(sqrt(HighPrecReal(x, prec)));
  const auto eig = sym_eigen(congruence_by_diagonal(bt, root));
  const auto tensor = expansion_tensor(eig, d);
  const HighPrecReal tol = HighPrecReal::exp2(-150, prec);
  for (const auto& t : tensor) {
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) CHECK(abs(t(i, j) - t(j, i)) < tol);
    }
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    const M l = transfer_L(cond, p, n);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        HighPrecReal sum(0L, prec);
        for (std::size_t k = 0; k < tensor.size(); ++k) sum += tensor[k](i, j) * pow(eig.eigenvalues[k], n);
        CHECK(gap(sum, l(i, j)) < tol);
      }
    }
  }
}

TEST_CASE("product_nodes enumerates exponent tuples") {
  const Precision prec = 128;
  const std::vector<HighPrecReal> l = {HighPrecReal(2L, prec), HighPrecReal(3L, prec)};
  const auto nodes = product_nodes(l, 2);
  REQUIRE(nodes.size() == 3);
  std::vector<double> got;
  for (const auto& x : nodes) got.push_back(x.to_double());
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<double>{4, 6, 9});
  CHECK(product_nodes(l, 0).size() == 1);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("transcript JSON round trip recomputes the verdict") {
  const auto t = run_bounded_reduction(kHardcore, M::identity(2), path(2));
  const auto j = to_json(t);
  CHECK(j.at("verdict") == "equal");
  const auto back = transcript_from_json(j);
  CHECK(back.verdict() == ReductionVerdict::Equal);
  CHECK(to_json(back) == j);
  auto tampered = j;
  tampered["recovered"] = "12345/1";
  tampered["verdict"] = "equal";
  CHECK(transcript_from_json(tampered).verdict() == ReductionVerdict::Mismatch);
  CHECK_THROWS_KIND(transcript_from_json(nlohmann::json::parse("{\"variant\": 3}")), ErrorKind::Parse);

  ReductionOptions eig;
  eig.mode = ReductionMode::EigenVandermonde;
  const auto e = run_simple_reduction(kHardcore, M::identity(2), double_edge(), eig);
  const auto ej = to_json(e);
  CHECK(transcript_from_json(ej).verdict() == ReductionVerdict::WithinTolerance);
  auto et = ej;
  et["recovered"] = "1000.5";
  CHECK(transcript_from_json(et).verdict() == ReductionVerdict::Mismatch);
}

TEST_CASE("eigen mode raises the working precision when the nodes are spread out") {
  // 28 nodes spanning six orders of magnitude: 256 working bits lose the answer.
  const M k3 = M::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  Multigraph triple(2);
  triple.add_edge(0, 1, 3);
  ReductionOptions eig;
  eig.mode = ReductionMode::EigenVandermonde;
  eig.precision = 256;
  const auto t = run_bounded_reduction(k3, diag_of({Rational(2, 3), Rational(1, 2), 2}), triple, eig);
  CHECK(t.nodes.size() == 28);
  CHECK(t.working_precision > 256);
  CHECK(t.verdict() == ReductionVerdict::WithinTolerance);
  CHECK(transcript_from_json(to_json(t)).working_precision == t.working_precision);
  const auto easy = run_bounded_reduction(kHardcore, M::identity(2), path(1), eig);
  CHECK(easy.working_precision == 512);
}
