#include "homdich/interpolate/transcript.hpp"

#include "homdich/error.hpp"

namespace homdich {

namespace {

template <typename E>
E enum_from(const std::string& s, std::initializer_list<E> options) {
  for (E e : options) {
    if (to_string(e) == s) return e;
  }
  fail(ErrorKind::Parse, "unknown enumerator \"" + s + "\" in transcript");
}

}  // namespace

HighPrecReal ReductionTranscript::tolerance(const Rational& direct_value) const {
  HighPrecReal mag = abs(HighPrecReal(direct_value, precision));
  const HighPrecReal one(1L, precision);
  return HighPrecReal::exp2(-static_cast<long>(precision / 4), precision) * max(one, mag);
}

ReductionVerdict ReductionTranscript::verdict() const {
  if (direct.empty()) return ReductionVerdict::Mismatch;
  if (mode == ReductionMode::ExactRecurrence) {
    if (!recovered_exact) return ReductionVerdict::Mismatch;
    for (const auto& c : direct) {
      if (*recovered_exact * c.multiplier != c.value) return ReductionVerdict::Mismatch;
    }
    return ReductionVerdict::Equal;
  }
  if (recovered_decimal.empty()) return ReductionVerdict::Mismatch;
  const HighPrecReal rec = HighPrecReal::parse(recovered_decimal, precision);
  for (const auto& c : direct) {
    const HighPrecReal diff = abs(rec * HighPrecReal(c.multiplier, precision) - HighPrecReal(c.value, precision));
    if (diff > tolerance(c.value)) return ReductionVerdict::Mismatch;
  }
  return ReductionVerdict::WithinTolerance;
}

std::string to_string(ReductionVariant v) { return v == ReductionVariant::Bounded ? "bounded" : "simple"; }
std::string to_string(ReductionMode m) { return m == ReductionMode::ExactRecurrence ? "exact" : "eigen"; }
std::string to_string(ReductionVerdict v) {
  switch (v) {
    case ReductionVerdict::Equal: return "equal";
    case ReductionVerdict::WithinTolerance: return "within_tolerance";
    case ReductionVerdict::Mismatch: return "MISMATCH";
  }
  return "MISMATCH";
}

nlohmann::json to_json(const ReductionTranscript& t) {
  using nlohmann::json;
  json j;
  j["variant"] = to_string(t.variant);
  j["mode"] = to_string(t.mode);
  j["precision"] = t.precision;
  j["working_precision"] = t.working_precision;
  j["inputs"] = {{"A", t.a_digest}, {"D", t.d_digest}, {"G", t.g_digest}};
  j["parameters"] = {{"domain_size", t.domain_size}, {"p", t.p},       {"rank", t.rank},
                     {"isolated", t.isolated},       {"t", t.t},       {"order_bound", t.order_bound},
                     {"target_n", t.target_n}};
  json oracle = json::array();
  for (const auto& q : t.oracle) {
    oracle.push_back({{"n", q.n},
                      {"value", to_fraction_string(q.value)},
                      {"graph", {{"vertices", q.vertices}, {"edges", q.edges}, {"max_degree", q.max_degree},
                                 {"simple", q.simple}}}});
  }
  j["oracle_values"] = oracle;
  json system = json::object();
  if (t.mode == ReductionMode::ExactRecurrence) {
    json rec = json::array();
    for (const auto& c : t.recurrence) rec.push_back(to_fraction_string(c));
    system["recurrence"] = rec;
    j["recovered"] = t.recovered_exact ? json(to_fraction_string(*t.recovered_exact)) : json(nullptr);
  } else {
    system["nodes"] = t.nodes;
    system["coefficients"] = t.coefficients;
    j["recovered"] = t.recovered_decimal;
  }
  j["system"] = system;
  json direct = json::array();
  for (const auto& c : t.direct) {
    direct.push_back({{"name", c.name},
                      {"value", to_fraction_string(c.value)},
                      {"multiplier", to_fraction_string(c.multiplier)}});
  }
  j["direct"] = direct;
  j["verdict"] = to_string(t.verdict());
  return j;
}

ReductionTranscript transcript_from_json(const nlohmann::json& j) {
  try {
    ReductionTranscript t;
    t.variant = enum_from(j.at("variant").get<std::string>(), {ReductionVariant::Bounded, ReductionVariant::Simple});
    t.mode = enum_from(j.at("mode").get<std::string>(),
                       {ReductionMode::ExactRecurrence, ReductionMode::EigenVandermonde});
    t.precision = j.at("precision").get<Precision>();
    t.working_precision = j.value("working_precision", t.precision);
    t.a_digest = j.at("inputs").at("A").get<std::string>();
    t.d_digest = j.at("inputs").at("D").get<std::string>();
    t.g_digest = j.at("inputs").at("G").get<std::string>();
    const auto& par = j.at("parameters");
    t.domain_size = par.at("domain_size").get<std::size_t>();
    t.p = par.at("p").get<std::size_t>();
    t.rank = par.at("rank").get<std::size_t>();
    t.isolated = par.at("isolated").get<std::size_t>();
    t.t = par.at("t").get<std::size_t>();
    t.order_bound = par.at("order_bound").get<std::size_t>();
    t.target_n = par.at("target_n").get<std::size_t>();
    for (const auto& q : j.at("oracle_values")) {
      OracleQuery o;
      o.n = q.at("n").get<std::size_t>();
      o.value = parse_rational(q.at("value").get<std::string>());
      const auto& gr = q.at("graph");
      o.vertices = gr.at("vertices").get<std::size_t>();
      o.edges = gr.at("edges").get<std::size_t>();
      o.max_degree = gr.at("max_degree").get<std::size_t>();
      o.simple = gr.at("simple").get<bool>();
      t.oracle.push_back(o);
    }
    const auto& sys = j.at("system");
    if (t.mode == ReductionMode::ExactRecurrence) {
      for (const auto& c : sys.at("recurrence")) t.recurrence.push_back(parse_rational(c.get<std::string>()));
      if (!j.at("recovered").is_null()) t.recovered_exact = parse_rational(j.at("recovered").get<std::string>());
    } else {
      t.nodes = sys.at("nodes").get<std::vector<std::string>>();
      t.coefficients = sys.at("coefficients").get<std::vector<std::string>>();
      t.recovered_decimal = j.at("recovered").get<std::string>();
    }
    for (const auto& c : j.at("direct")) {
      t.direct.push_back({c.at("name").get<std::string>(), parse_rational(c.at("value").get<std::string>()),
                          parse_rational(c.at("multiplier").get<std::string>())});
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed transcript: ") + e.what());
  }
}

}  // namespace homdich
