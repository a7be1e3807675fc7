#include "tww/graph.hpp"

#include <algorithm>
#include <string>

#include "tww/error.hpp"

namespace tww {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw ContractError("negative vertex count");
  matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ContractError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw ContractError("self-loop at vertex " + std::to_string(u));
    if (matrix_[index(u, v)]) continue;
    matrix_[index(u, v)] = matrix_[index(v, u)] = 1;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (!matrix_[index(u, v)]) continue;
      adj_[static_cast<std::size_t>(u)].push_back(v);
      if (u < v) edges_.emplace_back(u, v);
    }
  }
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(g.order(), edges);
}

std::vector<Vertex> symdiff_neighborhood(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw ContractError("symdiff_neighborhood needs two distinct vertices");
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw ContractError("vertex out of range");
  std::vector<Vertex> out;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (x == u || x == v) continue;
    if (g.adjacent(u, x) != g.adjacent(v, x)) out.push_back(x);
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) throw ContractError("induced_subgraph of an empty vertex set");
  InducedSubgraph out;
  out.original.assign(vertices.begin(), vertices.end());
  std::sort(out.original.begin(), out.original.end());
  if (std::adjacent_find(out.original.begin(), out.original.end()) != out.original.end())
    throw ContractError("induced_subgraph: repeated vertex");
  if (out.original.front() < 0 || out.original.back() >= g.order())
    throw ContractError("induced_subgraph: vertex out of range");
  std::vector<Edge> edges;
  const int k = static_cast<int>(out.original.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(out.original[static_cast<std::size_t>(i)], out.original[static_cast<std::size_t>(j)]))
        edges.emplace_back(i, j);
  out.graph = Graph(k, edges);
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || connected_components(g).size() == 1; }

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), edges);
}

Graph join(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = disjoint_union(a, b).edges();
  for (Vertex u = 0; u < a.order(); ++u)
    for (Vertex v = 0; v < b.order(); ++v) edges.emplace_back(u, a.order() + v);
  return Graph(a.order() + b.order(), edges);
}

Graph substitute(const Graph& host, Vertex v, const Graph& module) {
  if (v < 0 || v >= host.order()) throw ContractError("substitute: vertex out of range");
  const int base = host.order() - 1;
  auto shift = [v](Vertex x) { return x < v ? x : x - 1; };
  std::vector<Edge> edges;
  for (auto [a, b] : host.edges())
    if (a != v && b != v) edges.emplace_back(shift(a), shift(b));
  for (auto [a, b] : module.edges()) edges.emplace_back(base + a, base + b);
  for (Vertex x : host.neighbors(v))
    for (Vertex m = 0; m < module.order(); ++m) edges.emplace_back(shift(x), base + m);
  return Graph(base + module.order(), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw ContractError("relabel: permutation size mismatch");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return Graph(g.order(), edges);
}

}  // namespace tww
