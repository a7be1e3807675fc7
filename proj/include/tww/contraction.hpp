#pragma once

#include <cstdint>
#include <vector>

#include "tww/graph.hpp"

namespace tww {

enum class EdgeColor : std::uint8_t { none = 0, black = 1, red = 2 };

/// Graph whose edges are black or red, over a shrinking set of live vertices.
class Trigraph {
public:
  /// All edges of `g` black, no red edges, every vertex live.
  static Trigraph from_graph(const Graph& g);

  int universe() const noexcept { return n_; }
  int live_count() const noexcept { return live_count_; }
  bool live(Vertex v) const { return live_[static_cast<std::size_t>(v)] != 0; }
  EdgeColor color(Vertex u, Vertex v) const { return color_[index(u, v)]; }
  int red_degree(Vertex v) const { return red_degree_[static_cast<std::size_t>(v)]; }
  int max_red_degree() const;
  std::size_t black_edge_count() const;
  std::size_t red_edge_count() const;

  /// Merges `child` into `parent`; `child` disappears, `parent` stands for both.
  /// A vertex in the symmetric difference of the two neighbourhoods, or adjacent
  /// to both with at least one red edge, becomes a red neighbour of `parent`.
  /// Throws ContractError if the vertices are equal or not live.
  Trigraph contract(Vertex child, Vertex parent) const;

  /// In-place form of contract().
  void merge(Vertex child, Vertex parent);

private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }
  void set_color(Vertex u, Vertex v, EdgeColor c);

  int n_ = 0;
  int live_count_ = 0;
  std::vector<std::uint8_t> live_;
  std::vector<EdgeColor> color_;
  std::vector<int> red_degree_;
};

struct ContractionStep {
  Vertex child;
  Vertex parent;  ///< survives the step
  bool operator==(const ContractionStep&) const = default;
};

/// n-1 merges taking a graph on n vertices down to a single vertex.
struct ContractionSequence {
  std::vector<ContractionStep> steps;
  bool operator==(const ContractionSequence&) const = default;
};

/// Replays `seq` on `g` and returns the largest red degree seen in any
/// intermediate trigraph. Throws CertificateError naming the first bad step.
int verify_sequence(const Graph& g, const ContractionSequence& seq);

/// Red degrees after each step: entry i is the max red degree after step i.
std::vector<int> red_degree_profile(const Graph& g, const ContractionSequence& seq);

}  // namespace tww
