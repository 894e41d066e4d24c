#include "homdich/partition/enumerate.hpp"

#include <limits>

#include "homdich/error.hpp"

namespace homdich {

WeightedInstance::WeightedInstance(std::size_t vertex_count, std::size_t domain)
    : domain_(domain), weights_(vertex_count, std::vector<Rational>(domain, Rational(1))) {}

void WeightedInstance::scale_vertex(std::size_t v, const std::vector<Rational>& weights) {
  require(weights.size() == domain_, ErrorKind::Shape, "vertex weight vector has wrong length");
  for (std::size_t i = 0; i < domain_; ++i) weights_[v][i] *= weights[i];
}

void WeightedInstance::multiply_factor(std::size_t u, std::size_t v, const std::vector<Rational>& table) {
  require(u != v, ErrorKind::Contract, "factor endpoints must differ; fold loops into vertex weights");
  require(table.size() == domain_ * domain_, ErrorKind::Shape, "factor table has wrong size");
  auto [it, inserted] = factor_index_.emplace(std::make_pair(u, v), factors_.size());
  if (inserted) {
    factors_.push_back({u, v, table});
    return;
  }
  auto& t = factors_[it->second].table;
  for (std::size_t i = 0; i < t.size(); ++i) t[i] *= table[i];
}

std::uint64_t WeightedInstance::term_count_or_budget_error(std::uint64_t budget) const {
  std::uint64_t terms = 1;
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    if (domain_ != 0 && terms > budget / domain_) {
      fail(ErrorKind::Budget, "raw enumeration needs " + std::to_string(domain_) + "^" +
                                  std::to_string(vertex_count()) + " terms, over the budget of " +
                                  std::to_string(budget));
    }
    terms *= domain_;
  }
  if (terms > budget) {
    fail(ErrorKind::Budget, "raw enumeration needs " + std::to_string(terms) + " terms, over the budget of " +
                                std::to_string(budget));
  }
  return terms;
}

PartitionValue enumerate_serial(const WeightedInstance& inst, const EnumerationOptions& opts) {
  PartitionValue out;
  out.term_count = inst.term_count_or_budget_error(opts.budget);
  const std::size_t n = inst.vertex_count();
  const std::size_t m = inst.domain();
  if (m == 0 && n > 0) return out;
  std::vector<std::size_t> xi(n, 0);
  for (std::uint64_t term = 0; term < out.term_count; ++term) {
    Rational prod = 1;
    for (std::size_t v = 0; v < n && sgn(prod) != 0; ++v) prod *= inst.vertex_weight(v)[xi[v]];
    for (const auto& f : inst.factors()) {
      if (sgn(prod) == 0) break;
      prod *= f.table[xi[f.u] * m + xi[f.v]];
    }
    out.value += prod;
    for (std::size_t v = 0; v < n; ++v) {
      if (++xi[v] < m) break;
      xi[v] = 0;
    }
  }
  return out;
}

PartitionValue enumerate(const WeightedInstance& inst, const EnumerationOptions& opts) {
  return opts.serial_reference ? enumerate_serial(inst, opts) : enumerate_parallel(inst, opts);
}

}  // namespace homdich
