#include "homdich/dichotomy/dichotomy.hpp"

#include <algorithm>
#include <queue>

#include "homdich/error.hpp"

namespace homdich {

namespace {

void check_input(const RationalMatrix& a) {
  require(a.is_square(), ErrorKind::Shape, "matrix must be square");
  require(a.is_symmetric(), ErrorKind::Contract, "matrix must be symmetric");
  require(a.is_nonnegative(), ErrorKind::Contract, "matrix must be nonnegative");
}

bool pos(const RationalMatrix& a, std::size_t i, std::size_t j) { return sgn(a(i, j)) > 0; }

struct SupportComponent {
  std::vector<std::size_t> members;
  std::vector<int> colour;  // indexed like members
  bool bipartite = true;
  bool has_loop = false;
};

std::vector<SupportComponent> support_components(const RationalMatrix& a, std::vector<std::size_t>& residual) {
  const std::size_t m = a.rows();
  std::vector<int> colour(m, -1);
  std::vector<SupportComponent> out;
  for (std::size_t s = 0; s < m; ++s) {
    if (colour[s] != -1) continue;
    bool zero_row = true;
    for (std::size_t j = 0; j < m && zero_row; ++j) zero_row = !pos(a, s, j);
    if (zero_row) {
      colour[s] = 2;
      residual.push_back(s);
      continue;
    }
    SupportComponent c;
    std::queue<std::size_t> q;
    colour[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      c.members.push_back(v);
      if (pos(a, v, v)) c.has_loop = true;
      for (std::size_t w = 0; w < m; ++w) {
        if (w == v || !pos(a, v, w)) continue;
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          q.push(w);
        } else if (colour[w] == colour[v]) {
          c.bipartite = false;
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    for (std::size_t v : c.members) c.colour.push_back(colour[v]);
    out.push_back(std::move(c));
  }
  return out;
}

std::array<std::size_t, 4> four_point_for(const RationalMatrix& a, std::size_t k, std::size_t l) {
  // A_kl = 0 with k, l in one support component; search the closing 4-point.
  const std::size_t m = a.rows();
  for (std::size_t i = 0; i < m; ++i) {
    if (!pos(a, i, l)) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (pos(a, i, j) && pos(a, k, j)) return {i, j, k, l};
    }
  }
  // Not adjacent in two steps; search the whole matrix.
  for (std::size_t kk = 0; kk < m; ++kk) {
    for (std::size_t ll = 0; ll < m; ++ll) {
      if (pos(a, kk, ll)) continue;
      for (std::size_t i = 0; i < m; ++i) {
        if (!pos(a, i, ll)) continue;
        for (std::size_t j = 0; j < m; ++j) {
          if (pos(a, i, j) && pos(a, kk, j)) return {i, j, kk, ll};
        }
      }
    }
  }
  fail(ErrorKind::Internal, "no 4-point certificate found for a non-rectangular support");
}

Verdict map_back(Verdict v, const std::vector<std::size_t>& kept) {
  auto remap = [&](std::vector<std::size_t>& xs) {
    for (auto& x : xs) x = kept[x];
  };
  for (auto& b : v.structure.blocks) {
    remap(b.first);
    remap(b.second);
  }
  remap(v.structure.residual);
  if (v.rectangularity) {
    auto& w = *v.rectangularity;
    w.zero_entry = {kept[w.zero_entry.first], kept[w.zero_entry.second]};
    for (auto& x : w.four_point) x = kept[x];
  }
  if (v.minor) {
    for (auto& x : *v.minor) x = kept[x];
  }
  for (auto& c : v.components) remap(c.first);
  return v;
}

}  // namespace

SupportAnalysis support_blocks(const RationalMatrix& a) {
  check_input(a);
  SupportAnalysis out;
  const auto comps = support_components(a, out.structure.residual);
  for (const auto& c : comps) {
    Block b;
    if (c.bipartite && !c.has_loop) {
      b.kind = BlockKind::Bipartite;
      for (std::size_t t = 0; t < c.members.size(); ++t) (c.colour[t] == 0 ? b.first : b.second).push_back(c.members[t]);
      for (std::size_t i : b.first) {
        for (std::size_t j : b.second) {
          if (!out.witness && !pos(a, i, j)) out.witness = RectangularityWitness{{i, j}, four_point_for(a, i, j)};
        }
      }
    } else {
      b.kind = BlockKind::Loop;
      b.first = c.members;
      for (std::size_t i : b.first) {
        for (std::size_t j : b.first) {
          if (!out.witness && !pos(a, i, j)) out.witness = RectangularityWitness{{i, j}, four_point_for(a, i, j)};
        }
      }
    }
    out.structure.blocks.push_back(std::move(b));
  }
  return out;
}

Verdict is_block_rank1(const RationalMatrix& a) {
  auto sa = support_blocks(a);
  Verdict v;
  v.structure = sa.structure;
  if (!sa.rectangular()) {
    v.tractable = false;
    v.reason = VerdictReason::NotRectangular;
    v.rectangularity = sa.witness;
    return v;
  }
  for (const auto& b : v.structure.blocks) {
    const auto& rows = b.first;
    const auto& cols = b.kind == BlockKind::Loop ? b.first : b.second;
    const std::size_t r0 = rows.front();
    const std::size_t c0 = cols.front();
    for (std::size_t r : rows) {
      for (std::size_t c : cols) {
        if (a(r, c) * a(r0, c0) != a(r0, c) * a(r, c0)) {
          v.tractable = false;
          v.reason = VerdictReason::RankTwoBlock;
          v.minor = std::array<std::size_t, 4>{r0, c0, r, c};
          return v;
        }
      }
    }
  }
  v.tractable = true;
  v.reason = VerdictReason::BlockRankOne;
  return v;
}

Verdict classify_pair(const RationalMatrix& a, const RationalMatrix& d) {
  check_input(a);
  require(d.is_square() && d.rows() == a.rows(), ErrorKind::Shape, "D size differs from A");
  require(d.is_diagonal() && d.is_nonnegative(), ErrorKind::Contract, "D must be nonnegative diagonal");
  std::vector<std::size_t> kept, struck;
  for (std::size_t i = 0; i < a.rows(); ++i) (sgn(d(i, i)) == 0 ? struck : kept).push_back(i);
  Verdict v = map_back(is_block_rank1(principal_submatrix(a, kept)), kept);
  v.struck = std::move(struck);
  return v;
}

Verdict classify_zero_one(const RationalMatrix& a) {
  check_input(a);
  for (const auto& x : a.entries()) {
    require(x == 0 || x == 1, ErrorKind::Contract, "classify_zero_one needs a 0-1 matrix");
  }
  Verdict v;
  v.reason = VerdictReason::ZeroOneComponents;
  v.tractable = true;
  std::vector<std::size_t> residual;
  const auto comps = support_components(a, residual);
  for (std::size_t r : residual) v.components.push_back({{r}, ComponentClass::IsolatedVertex});
  for (const auto& c : comps) {
    ComponentClass cls = ComponentClass::Other;
    bool complete = true;
    for (std::size_t i : c.members) {
      for (std::size_t j : c.members) complete = complete && pos(a, i, j);
    }
    if (complete) {
      cls = ComponentClass::ReflexiveComplete;
    } else if (c.bipartite && !c.has_loop) {
      bool full = true;
      for (std::size_t s = 0; s < c.members.size(); ++s) {
        for (std::size_t t = 0; t < c.members.size(); ++t) {
          if (c.colour[s] != c.colour[t]) full = full && pos(a, c.members[s], c.members[t]);
        }
      }
      if (full) cls = ComponentClass::IrreflexiveCompleteBipartite;
    }
    if (cls == ComponentClass::Other) v.tractable = false;
    v.components.push_back({c.members, cls});
  }
  std::sort(v.components.begin(), v.components.end());
  return v;
}

bool witness_holds(const RationalMatrix& a, const Verdict& v) {
  if (v.rectangularity) {
    const auto& w = *v.rectangularity;
    const auto [i, j, k, l] = w.four_point;
    if (sgn(a(w.zero_entry.first, w.zero_entry.second)) != 0) return false;
    if (!(pos(a, i, j) && pos(a, i, l) && pos(a, k, j) && sgn(a(k, l)) == 0)) return false;
  }
  if (v.minor) {
    const auto [i, j, k, l] = *v.minor;
    if (a(i, j) * a(k, l) == a(i, l) * a(k, j)) return false;
  }
  return true;
}

std::string to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::NotRectangular: return "not_rectangular";
    case VerdictReason::RankTwoBlock: return "rank_two_block";
    case VerdictReason::BlockRankOne: return "block_rank_one";
    case VerdictReason::ZeroOneComponents: return "zero_one_components";
  }
  return "unknown";
}

std::string to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::IsolatedVertex: return "isolated_vertex";
    case ComponentClass::ReflexiveComplete: return "reflexive_complete";
    case ComponentClass::IrreflexiveCompleteBipartite: return "irreflexive_complete_bipartite";
    case ComponentClass::Other: return "other";
  }
  return "unknown";
}

}  // namespace homdich
