#pragma once

#include "tww/elimination.hpp"
#include "tww/graph.hpp"

namespace tww {

/// Smallest |N(u) symmetric-difference N(v)| over pairs u != v, endpoints excluded.
/// Throws ContractError if g has fewer than two vertices.
int lb1(const Graph& g);

/// Smallest possible largest red degree over the first r contractions of any
/// sequence. r must be 1, 2 or 3 and g needs at least r + 1 vertices.
int lbr(const Graph& g, int r);

/// Closed form of lb1 for a strongly regular graph with parameters (n, k, lambda, mu).
int sr_lb1(int n, int k, int lambda, int mu);

enum class GreedyScore {
  parent_degree,   ///< degree of the surviving vertex after the merge
  max_red_degree,  ///< largest red degree anywhere after the merge
};

struct BoundsReport {
  int lb = 0;
  int ub = 0;
  TwinWidthDecomposition ub_certificate;
};

/// Greedy elimination: repeatedly merges the pair with the lowest score, ties
/// broken by the lexicographically smallest (child, parent). `lb` is lb1(g)
/// (0 below two vertices); `ub` is the width of the certificate.
BoundsReport greedy_ub(const Graph& g, GreedyScore score = GreedyScore::parent_degree);

}  // namespace tww
