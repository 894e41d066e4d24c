#include <omp.h>

#include <algorithm>
#include <queue>

#include "homdich/error.hpp"
#include "homdich/partition/enumerate.hpp"

namespace homdich {

namespace {

struct Link {
  std::size_t factor;
  std::size_t other_depth;
  bool current_is_row;  // current vertex indexes the table row
};

class Plan {
 public:
  explicit Plan(const WeightedInstance& inst) : inst_(inst), m_(inst.domain()) {
    const std::size_t n = inst.vertex_count();
    std::vector<std::vector<std::size_t>> adj(n);
    std::vector<std::size_t> deg(n, 0);
    for (const auto& f : inst.factors()) {
      adj[f.u].push_back(f.v);
      adj[f.v].push_back(f.u);
      ++deg[f.u];
      ++deg[f.v];
    }
    // BFS order seeded at the highest-degree unvisited vertex so every vertex
    // after a component root meets a factor as soon as it is assigned.
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> by_degree(n);
    for (std::size_t v = 0; v < n; ++v) by_degree[v] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    for (std::size_t root : by_degree) {
      if (seen[root]) continue;
      std::queue<std::size_t> q;
      q.push(root);
      seen[root] = true;
      while (!q.empty()) {
        const std::size_t v = q.front();
        q.pop();
        order_.push_back(v);
        for (std::size_t w : adj[v]) {
          if (!seen[w]) {
            seen[w] = true;
            q.push(w);
          }
        }
      }
    }
    std::vector<std::size_t> depth_of(n);
    for (std::size_t k = 0; k < n; ++k) depth_of[order_[k]] = k;
    links_.resize(n);
    const auto& factors = inst.factors();
    for (std::size_t fi = 0; fi < factors.size(); ++fi) {
      const std::size_t du = depth_of[factors[fi].u];
      const std::size_t dv = depth_of[factors[fi].v];
      if (du > dv) {
        links_[du].push_back({fi, dv, true});
      } else {
        links_[dv].push_back({fi, du, false});
      }
    }
  }

  // Multiplies `acc` by everything introduced when depth k takes value x.
  bool extend(std::size_t k, std::size_t x, const std::vector<std::size_t>& values, Rational& acc) const {
    const Rational& w = inst_.vertex_weight(order_[k])[x];
    if (sgn(w) == 0) return false;
    acc *= w;
    for (const auto& link : links_[k]) {
      const auto& table = inst_.factors()[link.factor].table;
      const std::size_t y = values[link.other_depth];
      const Rational& e = link.current_is_row ? table[x * m_ + y] : table[y * m_ + x];
      if (sgn(e) == 0) return false;
      acc *= e;
    }
    return true;
  }

  Rational dfs_from(std::size_t depth, std::vector<std::size_t>& values, std::vector<Rational>& partial) const {
    const std::size_t n = order_.size();
    if (depth == n) return partial[n];
    Rational sum;
    for (std::size_t x = 0; x < m_; ++x) {
      values[depth] = x;
      partial[depth + 1] = partial[depth];
      if (!extend(depth, x, values, partial[depth + 1])) continue;
      sum += dfs_from(depth + 1, values, partial);
    }
    return sum;
  }

  std::size_t vertex_count() const { return order_.size(); }
  std::size_t domain() const { return m_; }

 private:
  const WeightedInstance& inst_;
  std::size_t m_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<Link>> links_;
};

}  // namespace

PartitionValue enumerate_parallel(const WeightedInstance& inst, const EnumerationOptions& opts) {
  PartitionValue out;
  out.term_count = inst.term_count_or_budget_error(opts.budget);
  const std::size_t n = inst.vertex_count();
  const std::size_t m = inst.domain();
  if (n == 0) {
    out.value = 1;
    return out;
  }
  if (m == 0) return out;

  const Plan plan(inst);
  const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
  // Enough prefix blocks for load balance, few enough to keep the partial-sum
  // array small.
  std::size_t prefix = 0;
  std::uint64_t blocks = 1;
  while (prefix < n && blocks < static_cast<std::uint64_t>(64) * static_cast<std::uint64_t>(threads) &&
         blocks * m <= (1U << 16)) {
    blocks *= m;
    ++prefix;
  }

  std::vector<Rational> block_sum(blocks);
  const auto block_count = static_cast<long long>(blocks);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long long b = 0; b < block_count; ++b) {
    std::vector<std::size_t> values(n, 0);
    std::vector<Rational> partial(n + 1);
    partial[0] = 1;
    auto code = static_cast<std::uint64_t>(b);
    bool alive = true;
    for (std::size_t k = 0; k < prefix; ++k) {
      values[k] = static_cast<std::size_t>(code % m);
      code /= m;
    }
    for (std::size_t k = 0; k < prefix && alive; ++k) {
      partial[k + 1] = partial[k];
      alive = plan.extend(k, values[k], values, partial[k + 1]);
    }
    if (alive) block_sum[static_cast<std::size_t>(b)] = plan.dfs_from(prefix, values, partial);
  }
  for (const auto& s : block_sum) out.value += s;
  return out;
}

}  // namespace homdich
