#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "homdich/graphs/graph_json.hpp"
#include "homdich/io/digest.hpp"
#include "homdich/io/matrix_file.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace homdich;
using M = RationalMatrix;

TEST_CASE("parse_matrix accepts integers and fractions") {
  const M a = parse_matrix("2 3\n1 -2 3/6\n0 4/2 -7/3\n");
  CHECK(a.rows() == 2);
  CHECK(a.cols() == 3);
  CHECK(a(0, 2) == Rational(1, 2));
  CHECK(a(1, 1) == 2);
  CHECK(a(1, 2) == Rational(-7, 3));
  CHECK(format_matrix(a) == "2 3\n1 -2 1/2\n0 2 -7/3\n");
  CHECK(parse_matrix("1 1   5") == M::from_rows({{5}}));
}

TEST_CASE("parse_matrix rejects malformed text") {
  for (const char* bad : {"", "2\n1 2", "2 2\n1 2 3", "2 2\n1 2 3 4 5", "1 1\nx", "1 1\n1/0", "-1 2\n", "1 1\n1/2/3"}) {
    CAPTURE(bad);
    CHECK_THROWS_KIND(parse_matrix(bad), ErrorKind::Parse);
  }
}

TEST_CASE("property: format then parse round-trips") {
  oracle::Rng rng(109);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = static_cast<std::size_t>(rng.uniform(1, 5));
    const M a = oracle::random_symmetric(rng, m, -50, 50, 40, 0.2);
    REQUIRE(parse_matrix(format_matrix(a)) == a);
    REQUIRE(format_matrix(parse_matrix(format_matrix(a))) == format_matrix(a));
  }
}

TEST_CASE("vertex weights come as a row or a diagonal") {
  CHECK(vertex_weights_from(parse_matrix("1 3\n1 2 1/3")) == diag_of({1, 2, Rational(1, 3)}));
  CHECK(vertex_weights_from(parse_matrix("2 2\n4 0\n0 5")) == diag_of({4, 5}));
  CHECK_THROWS_KIND(vertex_weights_from(parse_matrix("2 2\n4 1\n0 5")), ErrorKind::Parse);
  CHECK_THROWS_KIND(vertex_weights_from(parse_matrix("2 3\n1 2 3\n4 5 6")), ErrorKind::Parse);
}

TEST_CASE("files are read from disk") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = (dir / "homdich_io_test.txt").string();
  {
    std::ofstream f(path);
    f << "1 2\n3 1/4\n";
  }
  CHECK(read_matrix_file(path) == M::from_rows({{3, Rational(1, 4)}}));
  CHECK(read_vertex_weights_file(path) == diag_of({3, Rational(1, 4)}));
  std::filesystem::remove(path);
  CHECK_THROWS_KIND(read_matrix_file(path), ErrorKind::Parse);
}

TEST_CASE("digests are stable and discriminate") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(digest(M::from_rows({{1, 1}, {1, 0}})) == digest(parse_matrix("2 2 1 1 1 0")));
  CHECK(digest(M::from_rows({{1, 1}, {1, 0}})) != digest(M::from_rows({{1, 1}, {1, 1}})));
  Multigraph g(2);
  g.add_edge(0, 1);
  Multigraph h(2);
  h.add_edge(1, 0);
  CHECK(digest(g) == digest(h));
  h.add_loop(1);
  CHECK(digest(g) != digest(h));
}

TEST_CASE("property: graph JSON round-trips") {
  oracle::Rng rng(113);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_multigraph(rng, static_cast<std::size_t>(rng.uniform(0, 6)),
                                             static_cast<std::size_t>(rng.uniform(0, 8)), true);
    const auto back = graph_from_json(nlohmann::json::parse(graph_to_json(g).dump()));
    REQUIRE(back.vertex_count() == g.vertex_count());
    REQUIRE(back.edges() == g.edges());
    REQUIRE(back.loops() == g.loops());
  }
}
