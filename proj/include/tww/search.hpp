#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "tww/contraction.hpp"
#include "tww/encodings.hpp"
#include "tww/graph.hpp"
#include "tww/solver.hpp"

namespace tww {

struct SearchOptions {
  EncodingMode encoding = EncodingMode::relative;
  SolverConfig solver;
  int lb_order = 2;              ///< lbr order used next to lb1 (1 disables it)
  int lb_order_max_vertices = 40;  ///< above this size only lb1 is computed
  int oracle_max_vertices = 0;   ///< prime members up to this size skip SAT (at most 9)
  bool parallel = false;         ///< solve prime members concurrently
};

enum class SearchStatus { exact, unknown };

struct Probe {
  std::size_t member;
  int d;
  Verdict verdict;
  double seconds;
  int vars;
  std::size_t clauses;
};

struct MemberReport {
  int vertices = 0;
  std::size_t edges = 0;
  std::string provenance;
  int lb = 0;          ///< proven lower bound before probing
  int greedy_ub = 0;
  int lower = 0;       ///< final bracket
  int upper = 0;
  SearchStatus status = SearchStatus::exact;
};

struct TwwResult {
  SearchStatus status = SearchStatus::exact;
  int width = 0;   ///< width of `certificate`; exact when status is exact
  int lower = 0;   ///< proven lower bound
  ContractionSequence certificate;
  std::vector<MemberReport> members;
  std::vector<Probe> probes;
};

/// Exact twin-width: splits g into prime graphs, brackets each between lb and
/// the greedy bound, binary-searches the bracket with SAT probes, and stitches
/// the verified certificates together. A probe that times out or fails leaves
/// that member UNKNOWN with its current bracket.
TwwResult compute(const Graph& g, const SearchOptions& opts = {});

constexpr int kOracleMaxVertices = 9;

struct OracleResult {
  int width = 0;
  ContractionSequence sequence;
};

/// Exhaustive search over contraction sequences; n must not exceed kOracleMaxVertices.
OracleResult oracle_solve(const Graph& g);
int oracle(const Graph& g);

/// True iff g has at least four vertices, is connected and co-connected, and
/// has no module other than single vertices and V itself.
bool is_prime(const Graph& g);

struct NumbersOptions {
  bool prime_only = true;           ///< skip graphs that are not prime
  bool half_edges_only = false;     ///< skip graphs with more than C(n,2)/2 edges
  SearchOptions search;
};

struct NumbersReport {
  std::size_t graphs = 0;        ///< records read successfully
  std::size_t parse_errors = 0;
  std::size_t considered = 0;    ///< graphs that passed the filters
  std::size_t unknown = 0;
  std::map<std::pair<int, int>, std::size_t> counts;  ///< (n, width) -> graphs
  std::map<std::pair<int, int>, std::string> witness; ///< (n, width) -> first graph6 seen
  int min_order_for_target = -1;  ///< smallest n with a graph of width d_target, -1 if none
  std::string target_witness;
};

/// Twin-width of every graph in a graph6 stream, tallied by order and width.
NumbersReport sweep_numbers(std::istream& in, int d_target, const NumbersOptions& opts = {},
                            const std::function<void(std::size_t, const std::string&)>& on_error = {});

}  // namespace tww
