#include "tww/bounds.hpp"

#include <algorithm>
#include <climits>
#include <tuple>

#include "tww/contraction.hpp"
#include "tww/error.hpp"

namespace tww {

int lb1(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw ContractError("lb1: need at least two vertices");
  int best = INT_MAX;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      int count = 0;
      for (Vertex x = 0; x < n; ++x)
        if (x != u && x != v && g.adjacent(u, x) != g.adjacent(v, x)) ++count;
      best = std::min(best, count);
    }
  return best;
}

int sr_lb1(int /*n*/, int k, int lambda, int mu) { return std::min(2 * (k - mu), 2 * (k - lambda - 1)); }

namespace {

bool merged_red(const Trigraph& t, Vertex u, Vertex v, Vertex x) {
  const EdgeColor a = t.color(u, x), b = t.color(v, x);
  return a == EdgeColor::red || b == EdgeColor::red || a != b;
}

/// Red degree of the merged vertex and the largest red degree anywhere after merging u and v.
std::pair<int, int> merge_effect(const Trigraph& t, Vertex u, Vertex v) {
  int merged = 0, others = 0;
  for (Vertex x = 0; x < t.universe(); ++x) {
    if (!t.live(x) || x == u || x == v) continue;
    const bool red = merged_red(t, u, v, x);
    merged += red ? 1 : 0;
    const int deg = t.red_degree(x) - (t.color(u, x) == EdgeColor::red) - (t.color(v, x) == EdgeColor::red) + (red ? 1 : 0);
    others = std::max(others, deg);
  }
  return {merged, std::max(merged, others)};
}

void lbr_search(const Trigraph& t, int depth, int r, int running, int floor, int& best) {
  struct Candidate {
    int value;
    Vertex u, v;
  };
  std::vector<Candidate> cands;
  for (Vertex u = 0; u < t.universe(); ++u) {
    if (!t.live(u)) continue;
    for (Vertex v = u + 1; v < t.universe(); ++v) {
      if (!t.live(v)) continue;
      const int value = std::max(running, merge_effect(t, u, v).second);
      if (value < best) cands.push_back({value, u, v});
    }
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
  for (const auto& c : cands) {
    if (c.value >= best || best <= floor) return;
    if (depth + 1 == r) {
      best = c.value;
      continue;
    }
    lbr_search(t.contract(c.u, c.v), depth + 1, r, c.value, floor, best);
  }
}

}  // namespace

int lbr(const Graph& g, int r) {
  if (r < 1 || r > 3) throw ContractError("lbr: order must be 1, 2 or 3");
  if (g.order() < r + 1) throw ContractError("lbr: graph needs at least r + 1 vertices");
  const int floor = lb1(g);
  int best = INT_MAX;
  lbr_search(Trigraph::from_graph(g), 0, r, 0, floor, best);
  return best;
}

BoundsReport greedy_ub(const Graph& g, GreedyScore score) {
  const int n = g.order();
  BoundsReport report;
  report.lb = n >= 2 ? lb1(g) : 0;
  const auto sz = static_cast<std::size_t>(n);
  Trigraph t = Trigraph::from_graph(g);
  // cost[u * n + v] for u < v: red degree the survivor would have after merging u and v.
  std::vector<int> cost(sz * sz, 0);
  auto at = [&](Vertex u, Vertex v) -> int& {
    if (u > v) std::swap(u, v);
    return cost[static_cast<std::size_t>(u) * sz + static_cast<std::size_t>(v)];
  };
  auto recompute = [&](Vertex u, Vertex v) {
    int c = 0;
    for (Vertex x = 0; x < n; ++x)
      if (t.live(x) && x != u && x != v && merged_red(t, u, v, x)) ++c;
    at(u, v) = c;
  };
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) recompute(u, v);

  ContractionSequence seq;
  std::vector<EdgeColor> old_child(sz), old_parent(sz);
  std::vector<std::uint8_t> dirty(sz);
  for (int step = 0; step + 1 < n; ++step) {
    std::tuple<int, int, Vertex, Vertex> best{INT_MAX, INT_MAX, -1, -1};
    for (Vertex u = 0; u < n; ++u) {
      if (!t.live(u)) continue;
      for (Vertex v = u + 1; v < n; ++v) {
        if (!t.live(v)) continue;
        std::tuple<int, int, Vertex, Vertex> key;
        if (score == GreedyScore::parent_degree) {
          key = {at(u, v), 0, u, v};
        } else {
          const auto [merged, global] = merge_effect(t, u, v);
          key = {global, merged, u, v};
        }
        if (key < best) best = key;
      }
    }
    const Vertex child = std::get<2>(best), parent = std::get<3>(best);
    for (Vertex x = 0; x < n; ++x) {
      old_child[static_cast<std::size_t>(x)] = t.color(child, x);
      old_parent[static_cast<std::size_t>(x)] = t.color(parent, x);
    }
    t.merge(child, parent);
    seq.steps.push_back({child, parent});
    if (score != GreedyScore::parent_degree) continue;

    // Only pairs touching the survivor or a vertex whose edge to it changed need a
    // full recount; every other pair just loses the contribution of the removed child.
    std::fill(dirty.begin(), dirty.end(), 0);
    dirty[static_cast<std::size_t>(parent)] = 1;
    for (Vertex x = 0; x < n; ++x)
      if (t.live(x) && t.color(parent, x) != old_parent[static_cast<std::size_t>(x)]) dirty[static_cast<std::size_t>(x)] = 1;
    for (Vertex u = 0; u < n; ++u) {
      if (!t.live(u)) continue;
      for (Vertex v = u + 1; v < n; ++v) {
        if (!t.live(v)) continue;
        if (dirty[static_cast<std::size_t>(u)] || dirty[static_cast<std::size_t>(v)]) {
          recompute(u, v);
          continue;
        }
        const EdgeColor a = old_child[static_cast<std::size_t>(u)], b = old_child[static_cast<std::size_t>(v)];
        if (a == EdgeColor::red || b == EdgeColor::red || a != b) --at(u, v);
      }
    }
  }
  report.ub_certificate = decomposition_from_contractions(g, seq);
  report.ub = elimination_width(g, report.ub_certificate);
  return report;
}

}  // namespace tww
