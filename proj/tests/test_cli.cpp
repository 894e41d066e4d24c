#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int rc = -1;
  std::string out;
  json report;
};

std::string work(const std::string& name) { return (fs::path(HOMDICH_WORK_DIR) / name).string(); }

std::string fixture(const std::string& name, const std::string& body) {
  fs::create_directories(HOMDICH_WORK_DIR);
  const auto path = work(name);
  std::ofstream(path) << body;
  return path;
}

Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + HOMDICH_CLI_PATH + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.report = json::parse(r.out, nullptr, false);
  return r;
}

void require_report(const Run& r, int rc) {
  REQUIRE_FALSE(r.report.is_discarded());
  CHECK(r.rc == rc);
  CHECK(r.report.at("schema") == "homdich.run_report");
  CHECK(r.report.at("schema_version") == 1);
  CHECK(r.report.at("exit_code") == rc);
  CHECK(r.report.contains("wall_time_ms"));
  CHECK(r.report.contains("version"));
}

struct Fixtures {
  std::string hc = fixture("hc.txt", "2 2\n1 1\n1 0\n");
  std::string rank1 = fixture("r1.txt", "2 2\n1 2\n2 4\n");
  std::string k3 = fixture("k3.txt", "3 3\n0 1 1\n1 0 1\n1 1 0\n");
  std::string bad = fixture("bad.txt", "2 2\n1 x\n1 0\n");
  std::string neg = fixture("neg.txt", "2 2\n1 -1\n-1 1\n");
  std::string single = fixture("one.txt", "1 1\n3\n");
  std::string w110 = fixture("w110.txt", "1 3\n1 1 0\n");
  std::string edge = fixture("edge.json", R"({"vertices": 2, "edges": [[0, 1]]})");
  std::string path2 = fixture("path2.json", R"({"vertices": 3, "edges": [[0, 1], [1, 2]]})");
  std::string tri = fixture("tri.json", R"({"vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]})");
  std::string dbl = fixture("dbl.json", R"({"vertices": 2, "edges": [[0, 1, 2]]})");
  std::string empty3 = fixture("empty3.json", R"({"vertices": 3})");
  std::string big = fixture("big.json", R"({"vertices": 12, "edges": [[0, 1], [2, 3], [4, 5]]})");
  std::string badgraph = fixture("badgraph.json", R"({"edges": []})");
};

const Fixtures& fx() {
  static const Fixtures f;
  return f;
}

}  // namespace

TEST_CASE("classify") {
  const auto hard = run("classify --matrix " + fx().hc);
  require_report(hard, 0);
  const auto& res = hard.report.at("result");
  CHECK(res.at("block_rank_1").at("tractable") == false);
  CHECK(res.at("block_rank_1").at("witness").at("zero_entry") == json::array({1, 1}));
  CHECK(res.at("criteria_agree") == true);
  const auto r1 = run("classify --matrix " + fx().rank1);
  require_report(r1, 0);
  CHECK(r1.report.at("result").at("block_rank_1").at("tractable") == true);
  const auto k3 = run("classify --matrix " + fx().k3 + " --vertex-weights " + fx().w110);
  require_report(k3, 0);
  CHECK(k3.report.at("result").at("block_rank_1").at("tractable") == true);
  CHECK(k3.report.at("result").at("block_rank_1").at("struck") == json::array({2}));
}

TEST_CASE("eval") {
  const auto k3 = run("eval --matrix " + fx().k3 + " --graph " + fx().tri);
  require_report(k3, 0);
  CHECK(k3.report.at("result").at("value") == "6/1");
  const auto hc = run("eval --matrix " + fx().hc + " --graph " + fx().edge + " --method brute");
  require_report(hc, 0);
  CHECK(hc.report.at("result").at("value") == "3/1");
  const auto empty = run("eval --matrix " + fx().k3 + " --graph " + fx().empty3);
  require_report(empty, 0);
  CHECK(empty.report.at("result").at("value") == "27/1");
  const auto tr = run("eval --matrix " + fx().rank1 + " --graph " + fx().edge + " --method tractable");
  require_report(tr, 0);
  CHECK(tr.report.at("result").at("value") == "9/1");
  const auto au = run("eval --matrix " + fx().rank1 + " --graph " + fx().tri + " --method auto");
  require_report(au, 0);
  CHECK(au.report.at("result").at("value") == "125/1");
  CHECK(au.report.at("result").at("cross_check") == "agree");
}

TEST_CASE("exit codes for failures") {
  const auto parse = run("eval --matrix " + fx().bad + " --graph " + fx().edge);
  require_report(parse, 2);
  CHECK(parse.report.at("error").at("kind") == "parse");
  require_report(run("eval --matrix " + fx().hc + " --graph " + fx().badgraph), 2);
  require_report(run("eval --matrix " + work("missing.txt") + " --graph " + fx().edge), 2);
  CHECK(run("eval --matrix").rc == 2);
  CHECK(run("frobnicate").rc == 2);
  const auto contract = run("classify --matrix " + fx().neg);
  require_report(contract, 3);
  CHECK(contract.report.at("error").at("kind") == "contract");
  require_report(run("eval --matrix " + fx().hc + " --graph " + fx().edge + " --method tractable"), 3);
  require_report(run("eval --matrix " + fx().k3 + " --graph " + fx().edge + " --vertex-weights " + fx().single), 3);
  const auto budget = run("eval --matrix " + fx().k3 + " --graph " + fx().big + " --method brute --budget 1000");
  require_report(budget, 4);
  CHECK(budget.report.at("error").at("kind") == "budget");
}

TEST_CASE("transform") {
  const auto r = run("transform --op R --params 5 3 4");
  require_report(r, 0);
  CHECK(r.report.at("result").at("counts_match") == true);
  CHECK(r.report.at("result").at("graph").at("vertices") == 75);
  const auto g = run("transform --op Gnp --params 1 1 --graph " + fx().edge);
  require_report(g, 0);
  CHECK(g.report.at("result").at("expected").at("vertices") == 4);
  CHECK(g.report.at("result").at("expected").at("edges") == 5);
  CHECK(g.report.at("result").at("counts_match") == true);
  const auto s = run("transform --op stretch --params 1 --graph " + fx().tri);
  require_report(s, 0);
  CHECK(s.report.at("result").at("graph") == json::parse(R"({"vertices": 3, "edges": [[0, 1, 1], [0, 2, 1], [1, 2, 1]]})"));
  require_report(run("transform --op R --params 0 3 4"), 2);
  require_report(run("transform --op nope --params 1"), 2);
}

TEST_CASE("reduce") {
  const auto b = run("reduce --variant bounded --matrix " + fx().hc + " --graph " + fx().path2);
  require_report(b, 0);
  CHECK(b.report.at("result").at("transcript").at("verdict") == "equal");
  const auto s = run("reduce --variant simple --matrix " + fx().hc + " --graph " + fx().dbl);
  require_report(s, 0);
  CHECK(s.report.at("result").at("transcript").at("verdict") == "equal");
  CHECK(s.report.at("result").at("transcript").at("recovered") == "3/1");
  const auto t = run("reduce --variant bounded --matrix " + fx().rank1 + " --graph " + fx().edge);
  require_report(t, 3);
  CHECK(t.report.at("result").at("verdict").at("tractable") == true);
  const auto e = run("reduce --variant simple --mode eigen --precision 192 --matrix " + fx().hc + " --graph " + fx().dbl);
  require_report(e, 0);
  CHECK(e.report.at("precision") == 192);
  CHECK(e.report.at("result").at("transcript").at("verdict") == "within_tolerance");
}

TEST_CASE("lemmas") {
  const auto b2 = run("lemmas --check b2 --matrix " + fx().single);
  require_report(b2, 0);
  CHECK(b2.report.at("result").at("p") == 1);
  const auto b1 = run("lemmas --check b1 --matrix " + fx().hc);
  require_report(b1, 0);
  require_report(run("lemmas --check b1 --matrix " + fx().rank1), 3);
}

TEST_CASE("--out writes the same report") {
  const auto out = work("report.json");
  fs::remove(out);
  const auto r = run("eval --matrix " + fx().hc + " --graph " + fx().edge + " --out " + out);
  require_report(r, 0);
  std::ifstream f(out);
  REQUIRE(f.good());
  const json saved = json::parse(f);
  CHECK(saved == r.report);
  // The emitted graph parses back as input.
  const auto g = run("transform --op thicken --params 2 --graph " + fx().tri + " --out " + work("thick.json"));
  require_report(g, 0);
  std::ofstream(work("thick_graph.json")) << g.report.at("result").at("graph").dump();
  const auto z = run("eval --matrix " + fx().k3 + " --graph " + work("thick_graph.json"));
  require_report(z, 0);
  CHECK(z.report.at("result").at("value") == "6/1");
}
