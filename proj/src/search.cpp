#include "tww/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <istream>
#include <stdexcept>
#include <unordered_set>

#include "tww/bounds.hpp"
#include "tww/elimination.hpp"
#include "tww/error.hpp"
#include "tww/graph_io.hpp"
#include "tww/modular.hpp"

namespace tww {

namespace {

/// Iterative deepening over d; for each d a depth-first search over merges
/// with memoised dead ends. Trigraph state is the live set plus red edges:
/// a non-red pair of live vertices is black iff the surviving labels are
/// adjacent in g, since every pair across their bags agrees.
class OracleSearch {
public:
  explicit OracleSearch(const Graph& g) : n_(g.order()) {
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : g.neighbors(u)) adj_[static_cast<std::size_t>(u)] |= 1u << v;
  }

  bool run(int d, ContractionSequence& out) {
    d_ = d;
    failed_.clear();
    steps_.clear();
    std::array<std::uint32_t, kOracleMaxVertices> red{};
    if (!dfs((1u << n_) - 1, red)) return false;
    out.steps = steps_;
    return true;
  }

private:
  std::uint64_t key(std::uint32_t live, const std::array<std::uint32_t, kOracleMaxVertices>& red) const {
    std::uint64_t k = live;
    int shift = kOracleMaxVertices;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v, ++shift)
        if (red[static_cast<std::size_t>(u)] >> v & 1u) k |= std::uint64_t{1} << shift;
    return k;
  }

  bool dfs(std::uint32_t live, const std::array<std::uint32_t, kOracleMaxVertices>& red) {
    if (std::popcount(live) <= 1) return true;
    const std::uint64_t k = key(live, red);
    if (failed_.count(k)) return false;
    for (int u = 0; u < n_; ++u) {
      if (!(live >> u & 1u)) continue;
      for (int v = u + 1; v < n_; ++v) {
        if (!(live >> v & 1u)) continue;
        const std::uint32_t pair = (1u << u) | (1u << v);
        const std::uint32_t rest = live & ~pair;
        const std::uint32_t merged = (red[static_cast<std::size_t>(u)] | red[static_cast<std::size_t>(v)] |
                                      (adj_[static_cast<std::size_t>(u)] ^ adj_[static_cast<std::size_t>(v)])) & rest;
        if (std::popcount(merged) > d_) continue;
        std::array<std::uint32_t, kOracleMaxVertices> next{};
        bool ok = true;
        for (int x = 0; x < n_ && ok; ++x) {
          if (!(rest >> x & 1u)) continue;
          std::uint32_t row = red[static_cast<std::size_t>(x)] & rest;
          if (merged >> x & 1u) row |= 1u << v;
          next[static_cast<std::size_t>(x)] = row;
          ok = std::popcount(row) <= d_;
        }
        if (!ok) continue;
        next[static_cast<std::size_t>(v)] = merged;
        steps_.push_back({u, v});
        if (dfs(live & ~(1u << u), next)) return true;
        steps_.pop_back();
      }
    }
    failed_.insert(k);
    return false;
  }

  int n_;
  int d_ = 0;
  std::array<std::uint32_t, kOracleMaxVertices> adj_{};
  std::unordered_set<std::uint64_t> failed_;
  std::vector<ContractionStep> steps_;
};

struct MemberOutcome {
  MemberReport report;
  std::vector<Probe> probes;
};

MemberSolution solve_member(const Graph& g, std::size_t index, const SearchOptions& opts, MemberOutcome& outcome) {
  auto& rep = outcome.report;
  const int n = g.order();
  rep.vertices = n;
  rep.edges = g.size();
  if (n <= std::min(opts.oracle_max_vertices, kOracleMaxVertices)) {
    auto res = oracle_solve(g);
    rep.lb = rep.greedy_ub = rep.lower = rep.upper = res.width;
    return {res.width, std::move(res.sequence)};
  }
  int lo = n >= 2 ? lb1(g) : 0;
  if (opts.lb_order >= 2 && n <= opts.lb_order_max_vertices && n >= opts.lb_order + 1)
    lo = std::max(lo, lbr(g, std::min(opts.lb_order, 3)));
  const auto greedy = greedy_ub(g);
  int hi = greedy.ub;
  rep.lb = lo;
  rep.greedy_ub = hi;
  ContractionSequence best = contractions_from_decomposition(greedy.ub_certificate);
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    const auto inst = encode(g, mid, opts.encoding);
    const auto res = solve(inst.formula, opts.solver);
    outcome.probes.push_back({index, mid, res.verdict, res.wall_time, inst.formula.var_count(), inst.formula.clause_count()});
    if (res.verdict == Verdict::sat) {
      const auto dec = decode(inst, res.model);
      hi = elimination_width(g, dec);
      best = contractions_from_decomposition(dec);
    } else if (res.verdict == Verdict::unsat) {
      lo = mid + 1;
    } else {
      rep.status = SearchStatus::unknown;
      break;
    }
  }
  rep.lower = lo;
  rep.upper = hi;
  return {hi, std::move(best)};
}

}  // namespace

OracleResult oracle_solve(const Graph& g) {
  const int n = g.order();
  if (n > kOracleMaxVertices) throw ContractError("oracle: at most " + std::to_string(kOracleMaxVertices) + " vertices");
  OracleResult res;
  if (n <= 1) return res;
  const auto greedy = greedy_ub(g);
  OracleSearch search(g);
  for (int d = lb1(g); d < greedy.ub; ++d) {
    if (search.run(d, res.sequence)) {
      res.width = d;
      return res;
    }
  }
  res.width = greedy.ub;
  res.sequence = contractions_from_decomposition(greedy.ub_certificate);
  return res;
}

int oracle(const Graph& g) { return oracle_solve(g).width; }

bool is_prime(const Graph& g) {
  if (g.order() < 4 || !is_connected(g) || !is_connected(complement(g))) return false;
  return maximal_modular_partition(g).blocks.size() == static_cast<std::size_t>(g.order());
}

TwwResult compute(const Graph& g, const SearchOptions& opts) {
  TwwResult result;
  if (g.order() <= 1) return result;
  const auto members = prime_set(g);
  std::vector<MemberOutcome> outcomes(members.size());
  const auto modular = tww_via_primes(
      g, [&](const Graph& member, std::size_t index) { return solve_member(member, index, opts, outcomes[index]); },
      opts.parallel);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto& rep = outcomes[i].report;
    rep.provenance = members[i].provenance;
    result.lower = std::max(result.lower, rep.lower);
    if (rep.status == SearchStatus::unknown) result.status = SearchStatus::unknown;
    result.members.push_back(rep);
    result.probes.insert(result.probes.end(), outcomes[i].probes.begin(), outcomes[i].probes.end());
  }
  result.certificate = modular.sequence;
  result.width = verify_sequence(g, result.certificate);
  if (result.width != modular.width)
    throw std::logic_error("compute: stitched certificate has width " + std::to_string(result.width) + ", members give " +
                           std::to_string(modular.width));
  return result;
}

NumbersReport sweep_numbers(std::istream& in, int d_target, const NumbersOptions& opts,
                            const std::function<void(std::size_t, const std::string&)>& on_error) {
  NumbersReport report;
  read_graph6_stream(
      in,
      [&](Graph g, std::string_view text) {
        ++report.graphs;
        const int n = g.order();
        if (opts.half_edges_only && 4 * g.size() > static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1)) return;
        if (opts.prime_only && !is_prime(g)) return;
        ++report.considered;
        const auto res = compute(g, opts.search);
        if (res.status != SearchStatus::exact) {
          ++report.unknown;
          return;
        }
        const auto key = std::make_pair(n, res.width);
        ++report.counts[key];
        report.witness.emplace(key, std::string(text));
        if (res.width == d_target && (report.min_order_for_target < 0 || n < report.min_order_for_target)) {
          report.min_order_for_target = n;
          report.target_witness = std::string(text);
        }
      },
      [&](std::size_t line, const std::string& msg) {
        ++report.parse_errors;
        if (on_error) on_error(line, msg);
      });
  return report;
}

}  // namespace tww
