#pragma once

#include <iosfwd>
#include <vector>

#include "tww/contraction.hpp"
#include "tww/graph.hpp"

namespace tww {

/// Contraction tree plus elimination order. `order` lists the vertices from
/// first eliminated to the root; `parent[v]` is the tree parent of v, which
/// must come later in `order`, and -1 for the root.
struct TwinWidthDecomposition {
  std::vector<Vertex> order;
  std::vector<Vertex> parent;

  Vertex root() const { return order.empty() ? -1 : order.back(); }
  int size() const { return static_cast<int>(order.size()); }
  bool operator==(const TwinWidthDecomposition&) const = default;
};

/// Throws CertificateError unless `dec` is a well-formed decomposition on n vertices.
void validate_decomposition(const TwinWidthDecomposition& dec, int n);

/// Red graphs H_0, ..., H_{n-1}. H_i lives on the vertices order[i..n-1].
struct EliminationSequence {
  std::vector<std::vector<Edge>> graphs;
  std::vector<int> max_degree;  ///< max vertex degree of each H_i
  int width = 0;
};

/// Builds H_i from H_{i-1} by deleting v_i, moving its edges to p_i and joining
/// p_i to the surviving vertices that distinguish v_i from p_i in `g`.
EliminationSequence eliminate(const Graph& g, const TwinWidthDecomposition& dec);

/// Width of eliminate(g, dec) without materializing the graphs.
int elimination_width(const Graph& g, const TwinWidthDecomposition& dec);

/// Order = children in contraction order followed by the last survivor.
TwinWidthDecomposition decomposition_from_contractions(const Graph& g, const ContractionSequence& seq);

/// Steps (v_i, p_i) in elimination order.
ContractionSequence contractions_from_decomposition(const TwinWidthDecomposition& dec);

struct Certificate {
  int width = 0;
  TwinWidthDecomposition decomposition;
};

/// Text format:
///   tww-cert 1
///   n <n>
///   width <d>
///   order <v1> ... <vn>
///   p <child> <parent>     (n-1 lines, elimination order)
void write_certificate(std::ostream& out, const TwinWidthDecomposition& dec, int width);

/// Parses and validates a certificate. Throws ParseError or CertificateError.
Certificate read_certificate(std::istream& in);

}  // namespace tww
