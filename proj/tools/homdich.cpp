// homdich: classify weight matrices, evaluate partition functions, build the
// gadget graphs and run the interpolation reductions. Every command prints a
// JSON run report on stdout and a one-line summary on stderr.

#include <omp.h>

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "homdich/condense/condense.hpp"
#include "homdich/dichotomy/dichotomy.hpp"
#include "homdich/error.hpp"
#include "homdich/graphs/graph_json.hpp"
#include "homdich/graphs/transforms.hpp"
#include "homdich/interpolate/reduction.hpp"
#include "homdich/io/digest.hpp"
#include "homdich/io/matrix_file.hpp"
#include "homdich/partition/partition.hpp"
#include "homdich/tractable/tractable.hpp"

using nlohmann::json;
using namespace homdich;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitContract = 3;
constexpr int kExitBudget = 4;
constexpr int kExitMismatch = 5;

struct Args {
  std::string matrix;
  std::string weights;
  std::string graph;
  std::string out;
  std::string method = "auto";
  std::string op;
  std::vector<std::size_t> params;
  std::string variant = "bounded";
  std::string mode = "exact";
  std::string check;
  long precision = kDefaultPrecision;
  std::optional<std::size_t> p;
  int threads = 0;
  std::uint64_t budget = kDefaultTermBudget;
};

struct Outcome {
  json result;
  int exit_code = 0;
  std::string summary;
};

json index_list(const std::vector<std::size_t>& xs) { return json(xs); }

json verdict_json(const Verdict& v) {
  json j;
  j["tractable"] = v.tractable;
  j["reason"] = to_string(v.reason);
  if (v.rectangularity) {
    j["witness"] = {{"zero_entry", {v.rectangularity->zero_entry.first, v.rectangularity->zero_entry.second}},
                    {"four_point", v.rectangularity->four_point}};
  }
  if (v.minor) j["witness"] = {{"minor_rows", {(*v.minor)[0], (*v.minor)[2]}},
                               {"minor_cols", {(*v.minor)[1], (*v.minor)[3]}}};
  json blocks = json::array();
  for (const auto& b : v.structure.blocks) {
    if (b.kind == BlockKind::Loop) {
      blocks.push_back({{"kind", "loop"}, {"T", b.first}});
    } else {
      blocks.push_back({{"kind", "bipartite"}, {"P", b.first}, {"Q", b.second}});
    }
  }
  if (v.reason != VerdictReason::ZeroOneComponents) {
    j["blocks"] = blocks;
    j["residual"] = index_list(v.structure.residual);
  }
  if (!v.components.empty()) {
    json comps = json::array();
    for (const auto& [members, cls] : v.components) comps.push_back({{"indices", members}, {"class", to_string(cls)}});
    j["components"] = comps;
  }
  j["struck"] = index_list(v.struck);
  return j;
}

std::string verdict_line(const Verdict& v) {
  std::string s = v.tractable ? "tractable, block-rank-1" : "#P-hard side";
  if (v.rectangularity) {
    s += ", witness (" + std::to_string(v.rectangularity->zero_entry.first) + "," +
         std::to_string(v.rectangularity->zero_entry.second) + ") rectangularity";
  }
  if (v.minor) {
    const auto& m = *v.minor;
    s += ", witness rows (" + std::to_string(m[0]) + "," + std::to_string(m[2]) + ") cols (" + std::to_string(m[1]) +
         "," + std::to_string(m[3]) + ") rank-2 minor";
  }
  if (v.tractable && !v.struck.empty()) {
    s += " after striking {";
    for (std::size_t i = 0; i < v.struck.size(); ++i) s += (i ? "," : "") + std::to_string(v.struck[i]);
    s += "}";
  }
  return s;
}

RationalMatrix weights_or_identity(const Args& args, std::size_t m) {
  if (args.weights.empty()) return RationalMatrix::identity(m);
  return read_vertex_weights_file(args.weights);
}

EnumerationOptions enum_opts(const Args& args) {
  EnumerationOptions o;
  o.budget = args.budget;
  o.threads = args.threads;
  return o;
}

json graph_stats(const Multigraph& g) {
  return {{"vertices", g.vertex_count()}, {"edges", g.edge_count()},  {"max_degree", g.max_degree()},
          {"simple", g.is_simple()},      {"loops", g.has_loops()}};
}

bool is_zero_one(const RationalMatrix& a) {
  for (const auto& x : a.entries()) {
    if (x != 0 && x != 1) return false;
  }
  return true;
}

Outcome cmd_classify(const Args& args, json& inputs) {
  const auto a = read_matrix_file(args.matrix);
  const auto d = weights_or_identity(args, a.rows());
  inputs["matrix"] = digest(a);
  if (!args.weights.empty()) inputs["vertex_weights"] = digest(d);
  Outcome o;
  const Verdict v = classify_pair(a, d);
  o.result["block_rank_1"] = verdict_json(v);
  o.summary = verdict_line(v);
  if (is_zero_one(a) && args.weights.empty()) {
    const Verdict dg = classify_zero_one(a);
    o.result["zero_one"] = verdict_json(dg);
    o.result["criteria_agree"] = dg.tractable == v.tractable;
  }
  return o;
}

Outcome cmd_eval(const Args& args, json& inputs) {
  const auto a = read_matrix_file(args.matrix);
  const auto g = read_graph_file(args.graph);
  const auto d = weights_or_identity(args, a.rows());
  inputs["matrix"] = digest(a);
  inputs["graph"] = digest(g);
  if (!args.weights.empty()) inputs["vertex_weights"] = digest(d);
  require(args.method == "brute" || args.method == "tractable" || args.method == "auto", ErrorKind::Parse,
          "--method must be brute, tractable or auto");
  Outcome o;
  const auto opts = enum_opts(args);
  const bool tractable = a.is_nonnegative() && d.is_nonnegative() && classify_pair(a, d).tractable;
  std::optional<Rational> brute;
  std::optional<Rational> fast;
  if (args.method == "tractable" || (args.method == "auto" && tractable)) {
    fast = eval_tractable(a, d, g).value;
  }
  if (args.method == "brute" || (args.method == "auto" && !tractable)) {
    const auto pv = z_vertex_weighted(a, d, g, opts);
    brute = pv.value;
    o.result["term_count"] = pv.term_count;
  } else if (args.method == "auto") {
    try {
      const auto pv = z_vertex_weighted(a, d, g, opts);
      brute = pv.value;
      o.result["term_count"] = pv.term_count;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Budget) throw;
      o.result["cross_check"] = "skipped: over budget";
    }
  }
  const Rational value = fast ? *fast : *brute;
  o.result["value"] = to_fraction_string(value);
  o.result["method"] = args.method;
  o.result["tractable"] = tractable;
  if (fast && brute) {
    const bool agree = *fast == *brute;
    o.result["cross_check"] = agree ? "agree" : "MISMATCH";
    if (!agree) o.exit_code = kExitMismatch;
  }
  o.summary = to_string(value);
  return o;
}

Outcome cmd_transform(const Args& args, json& inputs) {
  const auto& ps = args.params;
  auto need = [&](std::size_t k, const char* what) {
    require(ps.size() == k, ErrorKind::Parse, std::string("--op ") + args.op + " takes --params " + what);
    for (std::size_t x : ps) require(x >= 1, ErrorKind::Parse, "transform parameters must be positive");
  };
  auto input_graph = [&]() {
    require(!args.graph.empty(), ErrorKind::Parse, "--op " + args.op + " needs --graph");
    auto g = read_graph_file(args.graph);
    inputs["graph"] = digest(g);
    return g;
  };
  Outcome o;
  json expected;
  Multigraph out;
  if (args.op == "thicken") {
    need(1, "P");
    out = thicken(input_graph(), ps[0]);
  } else if (args.op == "stretch") {
    need(1, "R");
    out = stretch(input_graph(), ps[0]);
  } else if (args.op == "P") {
    need(2, "N P");
    out = build_P(ps[0], ps[1]).graph;
    expected = {{"vertices", ps[0] * (ps[1] + 1) + 1}};
    o.result["endpoints"] = {0, 1};
  } else if (args.op == "R") {
    need(3, "D N P");
    const auto r = build_R(ps[0], ps[1], ps[2]);
    out = r.graph;
    o.result["stubs"] = r.stubs;
    o.result["edges_with_stubs"] = r.edge_count_with_stubs();
    expected = {{"vertices", ps[0] * ps[1] * (ps[2] + 1)}, {"edges_with_stubs", (2 * ps[1] * ps[2] + 1) * ps[0]}};
  } else if (args.op == "Gnp") {
    need(2, "N P");
    const auto g = input_graph();
    out = build_Gnp(g, ps[0], ps[1]);
    const std::size_t e = g.edge_count();
    expected = {{"vertices", 2 * ps[0] * (ps[1] + 1) * e}, {"edges", (4 * ps[0] * ps[1] + 1) * e},
                {"max_degree_at_most", 2 * ps[1] + 1}};
  } else if (args.op == "Gn") {
    require(ps.size() == 1 && ps[0] >= 2, ErrorKind::Parse, "--op Gn takes --params N with N >= 2");
    const auto sg = build_Gn_simple(input_graph(), ps[0]);
    out = sg.graph;
    o.result["stretched_count"] = sg.t;
  } else {
    fail(ErrorKind::Parse, "--op must be one of thicken, stretch, P, R, Gnp, Gn");
  }
  o.result["graph"] = graph_to_json(out);
  o.result["stats"] = graph_stats(out);
  if (!expected.is_null()) {
    bool ok = true;
    const json stats = o.result["stats"];
    for (const auto& [k, v] : expected.items()) {
      if (k == "max_degree_at_most") {
        ok = ok && stats["max_degree"].get<std::size_t>() <= v.get<std::size_t>();
      } else if (k == "edges_with_stubs") {
        ok = ok && o.result["edges_with_stubs"] == v;
      } else {
        ok = ok && stats[k] == v;
      }
    }
    o.result["expected"] = expected;
    o.result["counts_match"] = ok;
  }
  o.summary = "|V|=" + std::to_string(out.vertex_count()) + " |E|=" + std::to_string(out.edge_count());
  return o;
}

Outcome cmd_reduce(const Args& args, json& inputs) {
  const auto a = read_matrix_file(args.matrix);
  const auto g = read_graph_file(args.graph);
  const auto d = weights_or_identity(args, a.rows());
  inputs["matrix"] = digest(a);
  inputs["graph"] = digest(g);
  if (!args.weights.empty()) inputs["vertex_weights"] = digest(d);
  require(args.variant == "bounded" || args.variant == "simple", ErrorKind::Parse,
          "--variant must be bounded or simple");
  require(args.mode == "exact" || args.mode == "eigen", ErrorKind::Parse, "--mode must be exact or eigen");
  require(args.precision >= kMinPrecision, ErrorKind::Parse, "--precision must be at least 64");
  ReductionOptions ro;
  ro.mode = args.mode == "exact" ? ReductionMode::ExactRecurrence : ReductionMode::EigenVandermonde;
  ro.precision = args.precision;
  ro.p_override = args.p;
  ro.enumeration = enum_opts(args);
  Outcome o;
  if (args.variant == "bounded" && a.is_square() && a.is_symmetric() && a.is_nonnegative() && d.is_diagonal() &&
      d.rows() == a.rows()) {
    const Verdict v = classify_pair(a, d);
    if (v.tractable) {
      o.result["verdict"] = verdict_json(v);
      o.result["error"] = {{"kind", "contract"}, {"message", "bounded reduction needs a non-block-rank-1 matrix"}};
      o.exit_code = kExitContract;
      o.summary = "refused: " + verdict_line(v);
      return o;
    }
  }
  const auto tr = args.variant == "bounded" ? run_bounded_reduction(a, d, g, ro) : run_simple_reduction(a, d, g, ro);
  o.result["transcript"] = to_json(tr);
  const auto verdict = tr.verdict();
  o.exit_code = verdict == ReductionVerdict::Mismatch ? kExitMismatch : 0;
  o.summary = "verdict " + to_string(verdict) + ", recovered " +
              (tr.recovered_exact ? to_string(*tr.recovered_exact) : tr.recovered_decimal);
  return o;
}

Outcome cmd_lemmas(const Args& args, json& inputs) {
  const auto a = read_matrix_file(args.matrix);
  const auto d = weights_or_identity(args, a.rows());
  inputs["matrix"] = digest(a);
  if (!args.weights.empty()) inputs["vertex_weights"] = digest(d);
  require(args.check == "b1" || args.check == "b2", ErrorKind::Parse, "--check must be b1 or b2");
  // Preconditions: nonnegative symmetric, positive D, nonzero pairwise
  // independent columns.
  const auto cond = condense(a, d);
  require(cond.struck.empty() && cond.s() == a.rows(), ErrorKind::Contract,
          "columns of the matrix must be nonzero and pairwise linearly independent");
  Outcome o;
  o.result["preconditions"] = "ok";
  if (args.check == "b1") {
    const auto chk = check_ada_independence(a, d);
    o.result["holds"] = chk.holds;
    if (chk.violating_columns) o.result["violating_columns"] = {chk.violating_columns->first, chk.violating_columns->second};
    o.summary = chk.holds ? "columns of ADA pairwise independent" : "columns of ADA DEPENDENT";
    if (!chk.holds) o.exit_code = kExitMismatch;
  } else {
    const auto cert = find_thickening_p(a, d);
    const auto m = mat_mul(mat_mul(a, d), a);
    const bool revalidated = sgn(det(hadamard_pow(m, cert.p))) != 0 && cert.p <= cert.analytic_bound;
    o.result["p"] = cert.p;
    o.result["gamma_sq"] = to_fraction_string(cert.gamma_sq);
    o.result["analytic_bound"] = cert.analytic_bound;
    o.result["det_B"] = to_fraction_string(cert.det_B);
    o.result["revalidated"] = revalidated;
    o.summary = "p=" + std::to_string(cert.p) + " det(B)=" + to_string(cert.det_B);
    if (!revalidated) o.exit_code = kExitMismatch;
  }
  return o;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return kExitParse;
    case ErrorKind::Contract:
    case ErrorKind::Shape:
    case ErrorKind::EmptyDomain: return kExitContract;
    case ErrorKind::Budget: return kExitBudget;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact graph homomorphism partition functions and dichotomy reductions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", HOMDICH_VERSION);
  Args args;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", args.out, "Also write the JSON report to this file");
    sub->add_option("--threads", args.threads, "OpenMP threads (0: default)")->check(CLI::NonNegativeNumber);
    sub->add_option("--budget", args.budget, "Maximum raw enumeration terms");
  };

  auto* classify = app.add_subcommand("classify", "Dichotomy verdict with witness");
  classify->add_option("--matrix", args.matrix, "Edge weight matrix file")->required();
  classify->add_option("--vertex-weights", args.weights, "Diagonal vertex weights file");
  add_common(classify);

  auto* eval = app.add_subcommand("eval", "Evaluate Z_{A,D}(G)");
  eval->add_option("--matrix", args.matrix)->required();
  eval->add_option("--graph", args.graph)->required();
  eval->add_option("--vertex-weights", args.weights);
  eval->add_option("--method", args.method, "brute|tractable|auto");
  add_common(eval);

  auto* transform = app.add_subcommand("transform", "Build thickened, stretched or gadget graphs");
  transform->add_option("--op", args.op, "thicken|stretch|P|R|Gnp|Gn")->required();
  transform->add_option("--params", args.params, "Integer parameters of the construction")->required();
  transform->add_option("--graph", args.graph);
  add_common(transform);

  auto* reduce = app.add_subcommand("reduce", "Run an interpolation reduction and verify it");
  reduce->add_option("--variant", args.variant, "bounded|simple");
  reduce->add_option("--matrix", args.matrix)->required();
  reduce->add_option("--graph", args.graph)->required();
  reduce->add_option("--vertex-weights", args.weights);
  reduce->add_option("--mode", args.mode, "exact|eigen");
  reduce->add_option("--precision", args.precision, "Bits for eigen mode");
  reduce->add_option("--p", args.p, "Thickening power override");
  add_common(reduce);

  auto* lemmas = app.add_subcommand("lemmas", "Check the ADA independence and thickening lemmas");
  lemmas->add_option("--check", args.check, "b1: ADA column independence, b2: thickening power")->required();
  lemmas->add_option("--matrix", args.matrix)->required();
  lemmas->add_option("--vertex-weights", args.weights);
  add_common(lemmas);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  const auto start = std::chrono::steady_clock::now();
  json report;
  report["schema"] = "homdich.run_report";
  report["schema_version"] = 1;
  report["version"] = HOMDICH_VERSION;
  json command = json::array();
  for (int i = 1; i < argc; ++i) command.push_back(argv[i]);
  report["command"] = command;
  report["threads"] = args.threads > 0 ? args.threads : omp_get_max_threads();
  report["precision"] = args.precision;
  json inputs = json::object();

  int rc = 0;
  std::string summary;
  try {
    Outcome o;
    if (*classify) o = cmd_classify(args, inputs);
    if (*eval) o = cmd_eval(args, inputs);
    if (*transform) o = cmd_transform(args, inputs);
    if (*reduce) o = cmd_reduce(args, inputs);
    if (*lemmas) o = cmd_lemmas(args, inputs);
    report["result"] = o.result;
    rc = o.exit_code;
    summary = o.summary;
  } catch (const Error& e) {
    report["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    rc = exit_code_for(e.kind());
    summary = std::string("error (") + to_string(e.kind()) + "): " + e.what();
  }
  report["inputs"] = inputs;
  report["exit_code"] = rc;
  report["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const std::string text = report.dump(2);
  std::cout << text << '\n';
  std::cerr << summary << '\n';
  if (!args.out.empty()) {
    std::ofstream f(args.out);
    if (!f) {
      std::cerr << "cannot write " << args.out << '\n';
      return kExitParse;
    }
    f << text << '\n';
  }
  return rc;
}
