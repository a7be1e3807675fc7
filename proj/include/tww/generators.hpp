#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tww/graph.hpp"

namespace tww {

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// G(n, p). Pairs (u, v), u < v, are visited in ascending order; each draws one
/// 64-bit output of std::mt19937_64 seeded with `seed`, maps it to
/// u = (x >> 11) * 2^-53 in [0, 1), and keeps the edge iff u < p.
Graph erdos_renyi(int n, double p, std::uint64_t seed);

/// Paley graph on GF(q); q must be a prime power with q = 1 (mod 4).
/// Vertex id of a field element is its coefficient vector read in base p
/// (constant term least significant).
Graph paley(int q);

/// w x h lattice, 4-neighbour adjacency; vertex (x, y) has id y * w + x.
Graph grid_graph(int w, int h);

/// k x k rook's graph: cells adjacent iff they share a row or column.
Graph rook_graph(int k);

/// Generalized Petersen graph GP(n, k).
Graph generalized_petersen(int n, int k);

/// Hamiltonian cycle 0..n-1 plus an edge i -- i + shifts[i mod |shifts|] for every i.
Graph lcf_graph(int n, const std::vector<int>& shifts);

/// If q = p^k for a prime p, returns {p, k}; otherwise {0, 0}.
std::pair<int, int> prime_power(int q);

/// Embedded graph corpus. Names are matched case-insensitively, ignoring
/// accents, spaces and punctuation ("Grötzsch", "grotzsch", "Rook 6x6", "rook6x6").
/// Also understands the parametric families "paley<q>", "grid<w>x<h>", "rook<k>",
/// "path<n>", "cycle<n>", "complete<n>". Throws ContractError for unknown names.
Graph named_graph(std::string_view name);

struct NamedGraphInfo {
  std::string name;
  int vertices;
  int edges;
};
/// Catalogue of the fixed named graphs with their published vertex and edge counts.
const std::vector<NamedGraphInfo>& named_graph_catalogue();

}  // namespace tww
