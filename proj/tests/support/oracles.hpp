#pragma once

// Independent reference implementations for tests. Nothing here calls into
// the library's algorithms beyond the plain data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "homdich/graphs/multigraph.hpp"
#include "homdich/numeric/matrix.hpp"

namespace oracle {

using homdich::Multigraph;
using homdich::Rational;
using homdich::RationalMatrix;

// Cofactor expansion along the first row.
inline Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational total;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    const Rational term = m[0][c] * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

inline std::vector<std::vector<Rational>> to_rows(const RationalMatrix& a) {
  std::vector<std::vector<Rational>> rows(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
  }
  return rows;
}

inline Rational cofactor_det(const RationalMatrix& a) { return cofactor_det(to_rows(a)); }

// Largest k with a nonzero k x k minor.
inline std::size_t minor_rank(const RationalMatrix& a) {
  const std::size_t lim = std::min(a.rows(), a.cols());
  for (std::size_t k = lim; k > 0; --k) {
    std::vector<bool> rsel(a.rows(), false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
      std::vector<bool> csel(a.cols(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
      do {
        std::vector<std::vector<Rational>> m;
        for (std::size_t i = 0; i < a.rows(); ++i) {
          if (!rsel[i]) continue;
          std::vector<Rational> row;
          for (std::size_t j = 0; j < a.cols(); ++j) {
            if (csel[j]) row.push_back(a(i, j));
          }
          m.push_back(row);
        }
        if (cofactor_det(m) != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

// Plain recursion over assignments; every parallel copy and loop is a
// separate factor. weights[v][i] is the weight of vertex v at value i.
inline Rational brute_z(const RationalMatrix& a, const Multigraph& g,
                        const std::vector<std::vector<Rational>>& weights) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = a.rows();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [pr, mult] : g.edges()) {
    for (std::size_t c = 0; c < mult; ++c) edges.push_back(pr);
  }
  for (const auto& [v, count] : g.loops()) {
    for (std::size_t c = 0; c < count; ++c) edges.emplace_back(v, v);
  }
  std::vector<std::size_t> xi(n);
  Rational total;
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == n) {
      Rational prod = 1;
      for (std::size_t w = 0; w < n; ++w) prod *= weights[w][xi[w]];
      for (const auto& [x, y] : edges) prod *= a(xi[x], xi[y]);
      total += prod;
      return;
    }
    for (std::size_t i = 0; i < m; ++i) {
      xi[v] = i;
      rec(v + 1);
    }
  };
  rec(0);
  return total;
}

inline Rational brute_z(const RationalMatrix& a, const Multigraph& g) {
  return brute_z(a, g, std::vector<std::vector<Rational>>(g.vertex_count(), std::vector<Rational>(a.rows(), 1)));
}

inline Rational brute_z(const RationalMatrix& a, const RationalMatrix& d, const Multigraph& g) {
  std::vector<Rational> diag(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) diag[i] = d(i, i);
  return brute_z(a, g, std::vector<std::vector<Rational>>(g.vertex_count(), diag));
}

// Multigraph isomorphism by colour refinement plus backtracking.
inline bool isomorphic(const Multigraph& g, const Multigraph& h) {
  const std::size_t n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  auto adjacency = [](const Multigraph& x) {
    std::vector<std::map<std::size_t, std::size_t>> adj(x.vertex_count());
    for (const auto& [pr, mult] : x.edges()) {
      adj[pr.first][pr.second] += mult;
      adj[pr.second][pr.first] += mult;
    }
    return adj;
  };
  const auto ag = adjacency(g);
  const auto ah = adjacency(h);
  // Joint refinement so colours are comparable across the two graphs.
  std::vector<std::size_t> cg(n), ch(n);
  for (std::size_t v = 0; v < n; ++v) {
    cg[v] = g.loop_count(v) * 1000003 + g.degree(v);
    ch[v] = h.loop_count(v) * 1000003 + h.degree(v);
  }
  for (std::size_t round = 0; round <= n; ++round) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    auto sig = [&](const std::vector<std::size_t>& c, const std::vector<std::map<std::size_t, std::size_t>>& adj,
                   std::size_t v) {
      std::vector<std::size_t> s{c[v]};
      std::vector<std::size_t> nb;
      for (const auto& [w, mult] : adj[v]) nb.push_back(c[w] * 64 + mult);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      return s;
    };
    std::vector<std::vector<std::size_t>> sg(n), sh(n);
    for (std::size_t v = 0; v < n; ++v) {
      sg[v] = sig(cg, ag, v);
      sh[v] = sig(ch, ah, v);
      ids.emplace(sg[v], 0);
      ids.emplace(sh[v], 0);
    }
    std::size_t next = 0;
    for (auto& [k, id] : ids) id = next++;
    std::vector<std::size_t> ng(n), nh(n);
    for (std::size_t v = 0; v < n; ++v) {
      ng[v] = ids[sg[v]];
      nh[v] = ids[sh[v]];
    }
    const bool stable = std::set<std::size_t>(ng.begin(), ng.end()).size() ==
                        std::set<std::size_t>(cg.begin(), cg.end()).size();
    cg = ng;
    ch = nh;
    if (stable) break;
  }
  auto sorted_g = cg, sorted_h = ch;
  std::sort(sorted_g.begin(), sorted_g.end());
  std::sort(sorted_h.begin(), sorted_h.end());
  if (sorted_g != sorted_h) return false;

  // Visit g in BFS order so most vertices have a mapped neighbour.
  std::vector<std::size_t> order;
  std::vector<bool> seen(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    if (seen[r]) continue;
    seen[r] = true;
    order.push_back(r);
    for (std::size_t k = order.size() - 1; k < order.size(); ++k) {
      for (const auto& [w, mult] : ag[order[k]]) {
        if (!seen[w]) {
          seen[w] = true;
          order.push_back(w);
        }
      }
    }
  }
  std::vector<long> map_g(n, -1);
  std::vector<bool> used(n, false);
  auto mult_of = [](const std::vector<std::map<std::size_t, std::size_t>>& adj, std::size_t u, std::size_t v) {
    const auto it = adj[u].find(v);
    return it == adj[u].end() ? std::size_t{0} : it->second;
  };
  std::function<bool(std::size_t)> place = [&](std::size_t k) {
    if (k == n) return true;
    const std::size_t v = order[k];
    for (std::size_t x = 0; x < n; ++x) {
      if (used[x] || ch[x] != cg[v] || h.loop_count(x) != g.loop_count(v)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const std::size_t u = order[j];
        ok = mult_of(ag, v, u) == mult_of(ah, x, static_cast<std::size_t>(map_g[u]));
      }
      if (!ok) continue;
      map_g[v] = static_cast<long>(x);
      used[x] = true;
      if (place(k + 1)) return true;
      used[x] = false;
      map_g[v] = -1;
    }
    return false;
  };
  return place(0);
}

// Canonical key by trying every relabelling; intended for <= 6 vertices.
inline std::vector<std::size_t> canonical_key(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> best;
  do {
    std::vector<std::size_t> key(n * n, 0);
    for (const auto& [pr, mult] : g.edges()) {
      const std::size_t a = perm[pr.first], b = perm[pr.second];
      key[a * n + b] = key[b * n + a] = mult;
    }
    for (const auto& [v, count] : g.loops()) key[perm[v] * n + perm[v]] = count;
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Every multigraph on exactly n vertices with at most max_edges edges
// (loops counted as edges when allowed), one per isomorphism class.
inline std::vector<Multigraph> all_multigraphs(std::size_t n, std::size_t max_edges, bool loops) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u; v < n; ++v) {
      if (u != v || loops) slots.emplace_back(u, v);
    }
  }
  std::vector<Multigraph> out;
  std::set<std::vector<std::size_t>> keys;
  std::vector<std::size_t> count(slots.size(), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t slot, std::size_t left) {
    if (slot == slots.size()) {
      Multigraph g(n);
      for (std::size_t k = 0; k < slots.size(); ++k) {
        if (count[k]) g.add_edge(slots[k].first, slots[k].second, count[k]);
      }
      if (keys.insert(canonical_key(g)).second) out.push_back(g);
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      count[slot] = c;
      rec(slot + 1, left - c);
    }
    count[slot] = 0;
  };
  rec(0, max_edges);
  return out;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen); }
  Rational rational(long lo, long hi, long max_den = 1) {
    Rational x(uniform(lo, hi), uniform(1, max_den));
    x.canonicalize();
    return x;
  }
};

inline Rational canon(Rational x) {
  x.canonicalize();
  return x;
}

inline RationalMatrix random_symmetric(Rng& rng, std::size_t m, long lo, long hi, long max_den = 1,
                                       double zero_prob = 0.0) {
  std::vector<Rational> e(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      Rational x = rng.coin(zero_prob) ? Rational(0) : canon(rng.rational(lo, hi, max_den));
      e[i * m + j] = e[j * m + i] = x;
    }
  }
  return RationalMatrix(m, m, e);
}

inline RationalMatrix random_positive_diagonal(Rng& rng, std::size_t m, long hi = 4, long max_den = 3) {
  std::vector<Rational> d(m);
  for (auto& x : d) x = canon(rng.rational(1, hi, max_den));
  return RationalMatrix::diagonal(d);
}

inline Multigraph random_multigraph(Rng& rng, std::size_t n, std::size_t edges, bool loops) {
  Multigraph g(n);
  for (std::size_t e = 0; e < edges && n > 0; ++e) {
    const auto u = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    auto v = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    if (u == v && !loops) {
      if (n == 1) continue;
      v = (u + 1) % n;
    }
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace oracle
