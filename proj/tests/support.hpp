#pragma once

// Test-only oracles. Nothing here calls into the library beyond Graph itself.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "tww/graph.hpp"

namespace testing {

using tww::Edge;
using tww::Graph;
using tww::Vertex;

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

/// Graph on n vertices whose edges are the set bits of `mask` over pairs (u<v) in lexicographic order.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1u) edges.push_back({u, v});
  return Graph(n, edges);
}

inline std::uint64_t mask_of(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  std::uint64_t m = 0;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (g.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) m |= std::uint64_t{1} << bit;
  return m;
}

/// Smallest edge mask over all relabellings; equal iff isomorphic.
inline std::uint64_t canonical_mask(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do best = std::min(best, mask_of(g, perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return true;
  std::vector<int> seen(static_cast<std::size_t>(n), 0), stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v)
      if (g.adjacent(u, v) && !seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == n;
}

inline Graph complement_of(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.push_back({u, v});
  return Graph(g.order(), edges);
}

/// One representative per isomorphism class of connected graphs on n vertices (n <= 6).
inline std::vector<Graph> connected_graphs(int n) {
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) {
    const Graph g = graph_from_mask(n, m);
    if (!connected(g)) continue;
    const auto c = canonical_mask(g);
    if (seen.insert(c).second) out.push_back(graph_from_mask(n, c));
  }
  return out;
}

inline bool module_brute(const Graph& g, std::uint32_t s) {
  for (int x = 0; x < g.order(); ++x) {
    if (s >> x & 1u) continue;
    int seen = 0, total = 0;
    for (int y = 0; y < g.order(); ++y)
      if (s >> y & 1u) {
        ++total;
        seen += g.adjacent(x, y);
      }
    if (seen != 0 && seen != total) return false;
  }
  return true;
}

/// True iff g has a module other than singletons and V (any n; exhaustive, n <= 12).
inline bool has_nontrivial_module(const Graph& g) {
  const int n = g.order();
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t s = 1; s < full; ++s)
    if ((s & (s - 1)) && module_brute(g, s)) return true;
  return false;
}

/// Twin-width by literal replay of every contraction sequence (n <= 7).
/// Colours: 0 none, 1 black, 2 red.
class BruteTww {
public:
  explicit BruteTww(const Graph& g) : n_(g.order()), col_(static_cast<std::size_t>(n_ * n_), 0) {
    for (const auto& [u, v] : g.edges()) set(u, v, 1);
  }

  int run() {
    if (n_ <= 1) return 0;
    best_ = n_;
    std::vector<int> live(static_cast<std::size_t>(n_));
    std::iota(live.begin(), live.end(), 0);
    dfs(col_, live, 0);
    return best_;
  }

private:
  void set(int u, int v, int c) {
    col_[static_cast<std::size_t>(u * n_ + v)] = static_cast<std::uint8_t>(c);
    col_[static_cast<std::size_t>(v * n_ + u)] = static_cast<std::uint8_t>(c);
  }

  void dfs(const std::vector<std::uint8_t>& col, const std::vector<int>& live, int width) {
    if (width >= best_) return;
    if (live.size() == 1) {
      best_ = width;
      return;
    }
    for (std::size_t a = 0; a < live.size(); ++a)
      for (std::size_t b = a + 1; b < live.size(); ++b) {
        const int c = live[a], p = live[b];
        auto next = col;
        auto at = [&](int u, int v) -> std::uint8_t& { return next[static_cast<std::size_t>(u * n_ + v)]; };
        for (int x : live) {
          if (x == c || x == p) continue;
          const int cx = col[static_cast<std::size_t>(c * n_ + x)], px = col[static_cast<std::size_t>(p * n_ + x)];
          int nc = 0;
          if (cx == 1 && px == 1) nc = 1;
          else if (cx || px) nc = 2;
          at(p, x) = at(x, p) = static_cast<std::uint8_t>(nc);
          at(c, x) = at(x, c) = 0;
        }
        at(c, p) = at(p, c) = 0;
        std::vector<int> rest;
        for (int x : live)
          if (x != c) rest.push_back(x);
        int w = width;
        for (int x : rest) {
          int deg = 0;
          for (int y : rest) deg += at(x, y) == 2;
          w = std::max(w, deg);
        }
        dfs(next, rest, w);
      }
  }

  int n_;
  int best_ = 0;
  std::vector<std::uint8_t> col_;
};

inline int brute_tww(const Graph& g) { return BruteTww(g).run(); }

/// Plain DPLL for formulas with a few dozen variables. Clauses as literal vectors.
inline bool dpll_sat(int vars, const std::vector<std::vector<int>>& clauses, std::vector<int> assign = {}) {
  if (assign.empty()) assign.assign(static_cast<std::size_t>(vars) + 1, 0);
  for (;;) {
    bool changed = false;
    for (const auto& c : clauses) {
      int unassigned = 0, last = 0;
      bool sat = false;
      for (int l : c) {
        const int v = assign[static_cast<std::size_t>(std::abs(l))];
        if (v == 0) {
          ++unassigned;
          last = l;
        } else if ((v > 0) == (l > 0)) {
          sat = true;
          break;
        }
      }
      if (sat) continue;
      if (unassigned == 0) return false;
      if (unassigned == 1) {
        assign[static_cast<std::size_t>(std::abs(last))] = last > 0 ? 1 : -1;
        changed = true;
      }
    }
    if (!changed) break;
  }
  for (int v = 1; v <= vars; ++v)
    if (assign[static_cast<std::size_t>(v)] == 0) {
      auto a = assign;
      a[static_cast<std::size_t>(v)] = 1;
      if (dpll_sat(vars, clauses, a)) return true;
      a[static_cast<std::size_t>(v)] = -1;
      return dpll_sat(vars, clauses, a);
    }
  return true;
}

}  // namespace testing
