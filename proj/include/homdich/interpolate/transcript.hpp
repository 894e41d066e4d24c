#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "homdich/numeric/highprec.hpp"

namespace homdich {

enum class ReductionVariant { Bounded, Simple };
enum class ReductionMode { ExactRecurrence, EigenVandermonde };
enum class ReductionVerdict { Equal, WithinTolerance, Mismatch };

struct OracleQuery {
  std::size_t n = 0;
  Rational value;
  // Structure of the oracle graph that was built and checked.
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t max_degree = 0;
  bool simple = false;
};

// Passes when recovered * multiplier equals value (exactly, or within the
// eigen-mode tolerance).
struct DirectCheck {
  std::string name;
  Rational value;
  Rational multiplier = 1;
};

struct ReductionTranscript {
  ReductionVariant variant = ReductionVariant::Bounded;
  ReductionMode mode = ReductionMode::ExactRecurrence;
  Precision precision = kDefaultPrecision;          // target accuracy in bits
  Precision working_precision = kDefaultPrecision;  // eigen mode: bits actually used
  std::string a_digest;
  std::string d_digest;
  std::string g_digest;

  std::size_t domain_size = 0;  // s (bounded) or m (simple)
  std::size_t p = 0;            // bounded only
  std::size_t rank = 0;         // simple only
  std::size_t isolated = 0;     // h, bounded only
  std::size_t t = 0;
  std::size_t order_bound = 0;  // K
  std::size_t target_n = 0;

  std::vector<OracleQuery> oracle;

  // exact mode
  std::vector<Rational> recurrence;
  std::optional<Rational> recovered_exact;
  // eigen mode, decimal strings at `precision`
  std::vector<std::string> nodes;
  std::vector<std::string> coefficients;
  std::string recovered_decimal;

  std::vector<DirectCheck> direct;

  // Recomputed from the stored values on every call.
  ReductionVerdict verdict() const;
  HighPrecReal tolerance(const Rational& direct_value) const;
};

std::string to_string(ReductionVariant v);
std::string to_string(ReductionMode m);
std::string to_string(ReductionVerdict v);

nlohmann::json to_json(const ReductionTranscript& t);
ReductionTranscript transcript_from_json(const nlohmann::json& j);

}  // namespace homdich
