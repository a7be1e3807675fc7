#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace tww {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
///
/// Adjacency is kept both as a dense matrix (O(1) `adjacent`) and as sorted
/// neighbor lists. Graphs here are small (at most a few hundred vertices), so
/// the quadratic matrix is not a concern.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);
  /// Builds from an edge list. Duplicate edges collapse; self-loops and
  /// out-of-range endpoints throw ContractError.
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  bool adjacent(Vertex u, Vertex v) const { return matrix_[index(u, v)] != 0; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  /// Edges as (u, v) with u < v, in ascending order.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

Graph complement(const Graph& g);

/// (N(u) symmetric-difference N(v)) without u and v themselves, ascending.
std::vector<Vertex> symdiff_neighborhood(const Graph& g, Vertex u, Vertex v);

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the id in the parent graph of vertex i of `graph`.
  std::vector<Vertex> original;
};

/// Subgraph induced by `vertices`, relabelled 0..k-1 by ascending original id.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Connected components, each sorted ascending; components ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Disjoint union plus every edge between the two sides.
Graph join(const Graph& a, const Graph& b);

/// Replaces vertex `v` of `host` by a copy of `module`, wired to all of v's neighbors.
/// The module's vertices take ids host.order()-1 .. and v is removed (ids above v shift down).
Graph substitute(const Graph& host, Vertex v, const Graph& module);

/// Same graph with vertex i renamed to perm[i].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace tww
