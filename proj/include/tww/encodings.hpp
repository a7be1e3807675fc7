#pragma once

#include <string_view>
#include <vector>

#include "tww/cnf.hpp"
#include "tww/elimination.hpp"
#include "tww/graph.hpp"

namespace tww {

enum class EncodingMode { relative, absolute };

EncodingMode parse_encoding_mode(std::string_view s);  ///< "rel"/"relative" or "abs"/"absolute"
const char* to_string(EncodingMode m);

/// F(g, d): satisfiable iff g has twin-width at most d.
struct EncodedInstance {
  CnfFormula formula;
  VariableMap vars;
  EncodingMode mode = EncodingMode::relative;
  Graph graph;
  int d = 0;
};

/// Relative encoding over vertex pairs. Families, in id order:
///   o i j    (i < j)        i is eliminated before j
///   p i j    (i < j)        j is the parent of i; vertex n-1 is the root
///   a i j    (i < j)        i and j are joined in some red graph
///   r i j k  (j < k, any i) j and k are joined right after i is eliminated
///   tot ...                 totalizer counters
/// Requires n >= 2 and d >= 0.
EncodedInstance encode_relative(const Graph& g, int d);

/// Absolute encoding over positions 0..n-1. Families, in id order:
///   o' q v   (any q, v)      vertex v sits at position q
///   p i j    (i < j)         position j holds the parent of position i; n-1 is the root
///   e i j    (i < j)         the vertices at positions i and j are adjacent in g
///   r i j k  (i < j < k)     positions j and k are joined right after position i is eliminated
///   tot ...
/// Only the first min(n - d, n - 2) eliminations carry red-edge variables.
/// Requires n >= 2 and d >= 0.
EncodedInstance encode_absolute(const Graph& g, int d);

EncodedInstance encode(const Graph& g, int d, EncodingMode mode);

/// Reads a decomposition from a satisfying model (indexed by variable id),
/// validates it and checks that it re-scores to at most d. Throws
/// EncodingSoundnessError if any of that fails.
TwinWidthDecomposition decode(const EncodedInstance& inst, const std::vector<bool>& model);

}  // namespace tww
