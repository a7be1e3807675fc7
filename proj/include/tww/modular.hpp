#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tww/contraction.hpp"
#include "tww/graph.hpp"

namespace tww {

/// Disjoint blocks covering V(G), each sorted, ordered by smallest member.
struct ModularPartition {
  std::vector<std::vector<Vertex>> blocks;
};

/// True iff every vertex outside `s` sees all of `s` or none of it.
bool is_module(const Graph& g, std::span<const Vertex> s);

/// Partition into maximal modules. Requires n >= 2 with both g and its
/// complement connected; throws ContractError otherwise.
ModularPartition maximal_modular_partition(const Graph& g);

/// One vertex per block, adjacent iff the blocks are completely joined.
/// Throws ContractError if some block is not a module or the blocks do not partition V(g).
Graph quotient(const Graph& g, const ModularPartition& p);

struct PrimeMember {
  Graph graph;
  /// representatives[i] is an original vertex of the block that quotient vertex i stands for.
  std::vector<Vertex> representatives;
  std::string provenance;
};

/// Prime graphs whose largest twin-width equals that of g. Components and
/// co-components are split off recursively; a graph that is connected and
/// co-connected contributes its quotient by the maximal modules and recurses
/// into each module. A single vertex contributes nothing, so every member has
/// at least four vertices and is prime.
std::vector<PrimeMember> prime_set(const Graph& g);

struct MemberSolution {
  int width = 0;
  ContractionSequence sequence;  ///< on the member's own vertex ids
};

/// Solves one member of prime_set(g); `index` is its position in that list.
using PrimeSolver = std::function<MemberSolution(const Graph& member, std::size_t index)>;

struct ModularResult {
  int width = 0;
  ContractionSequence sequence;  ///< for g itself
  std::vector<int> member_widths;
};

/// Solves every prime member and stitches their sequences into one for g: each
/// module is contracted to a single vertex, then the quotient sequence runs on
/// the survivors. With `parallel`, members are solved concurrently.
ModularResult tww_via_primes(const Graph& g, const PrimeSolver& solver, bool parallel = false);

}  // namespace tww
