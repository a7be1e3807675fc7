#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "support.hpp"
#include "tww/error.hpp"
#include "tww/generators.hpp"
#include "tww/graph_io.hpp"
#include "tww/search.hpp"

using namespace tww;

namespace {

/// Every probe log must show UNSAT at width - 1 unless the lower bound already matched.
void check_witnessed(const TwwResult& r) {
  for (std::size_t i = 0; i < r.members.size(); ++i) {
    const auto& m = r.members[i];
    if (m.status != SearchStatus::exact || m.upper == m.lb) continue;
    bool unsat_below = false;
    for (const auto& p : r.probes)
      if (p.member == i && p.d == m.upper - 1 && p.verdict == Verdict::unsat) unsat_below = true;
    CHECK(unsat_below);
  }
}

std::string stream_of(int n) {
  std::string s;
  for (const auto& g : testing::connected_graphs(n)) s += emit_graph6(g) + '\n';
  return s;
}

}  // namespace

TEST_CASE("oracle on small graphs") {
  CHECK(oracle(path_graph(4)) == 1);
  CHECK(oracle(cycle_graph(5)) == 2);
  CHECK(oracle(paley(9)) == 4);
  CHECK(oracle(Graph(1)) == 0);
  CHECK(oracle(Graph()) == 0);
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * (n - 1) / 2)); ++m)
      CHECK(oracle(testing::graph_from_mask(n, m)) == 0);
  for (std::uint64_t m = 0; m < 64; ++m) CHECK(oracle(testing::graph_from_mask(4, m)) <= 1);
  CHECK_THROWS_AS(oracle(cycle_graph(10)), ContractError);
}

TEST_CASE("oracle agrees with brute force and is complement invariant") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    const Graph g = testing::random_graph(n, 0.5, rng);
    const auto r = oracle_solve(g);
    CHECK(r.width == testing::brute_tww(g));
    CHECK(r.width == oracle(complement(g)));
    CHECK(verify_sequence(g, r.sequence) == r.width);
  }
}

TEST_CASE("induced subgraphs never have larger twin-width") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(7, 0.5, rng);
    std::vector<Vertex> s;
    for (Vertex v = 0; v < 7; ++v)
      if (rng() & 1u) s.push_back(v);
    if (s.empty()) continue;
    CHECK(oracle(induced_subgraph(g, s).graph) <= oracle(g));
  }
}

TEST_CASE("primality") {
  CHECK(is_prime(path_graph(4)));
  CHECK(is_prime(cycle_graph(5)));
  CHECK(!is_prime(Graph(1)));
  CHECK(!is_prime(complete_graph(4)));
  CHECK(!is_prime(Graph(4, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {0, 3}})));
  CHECK(!is_prime(substitute(cycle_graph(5), 0, empty_graph(2))));
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(3 + trial % 6, 0.5, rng);
    const bool expect = g.order() >= 4 && testing::connected(g) && testing::connected(testing::complement_of(g)) &&
                        !testing::has_nontrivial_module(g);
    CHECK(is_prime(g) == expect);
  }
}

TEST_CASE("compute on named graphs") {
  for (auto [name, width] : std::vector<std::pair<std::string, int>>{{"wagner", 2}, {"grotzsch", 3}, {"paley13", 6}, {"moser", 2}}) {
    CAPTURE(name);
    const Graph g = named_graph(name);
    const auto r = compute(g);
    CHECK(r.status == SearchStatus::exact);
    CHECK(r.width == width);
    CHECK(r.lower == width);
    CHECK(verify_sequence(g, r.certificate) == width);
    check_witnessed(r);
    if (g.order() <= kOracleMaxVertices) CHECK(oracle(g) == width);
  }
}

TEST_CASE("compute needs no SAT call for cographs") {
  for (const Graph& g : {complete_graph(7), empty_graph(5), join(join(empty_graph(2), empty_graph(3)), empty_graph(4)), Graph(1)}) {
    const auto r = compute(g);
    CHECK(r.width == 0);
    CHECK(r.probes.empty());
    CHECK(r.members.empty());
  }
}

TEST_CASE("compute agrees with brute force on random graphs") {
  std::mt19937_64 rng(59);
  SearchOptions abs;
  abs.encoding = EncodingMode::absolute;
  SearchOptions par;
  par.parallel = true;
  SearchOptions small;
  small.oracle_max_vertices = kOracleMaxVertices;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 6;
    const Graph g = testing::random_graph(n, 0.3 + 0.1 * (trial % 5), rng);
    const int expect = testing::brute_tww(g);
    const auto r = compute(g);
    CHECK(r.width == expect);
    CHECK(verify_sequence(g, r.certificate) == expect);
    check_witnessed(r);
    CHECK(compute(complement(g)).width == expect);
    if (trial % 4 == 0) CHECK(compute(g, abs).width == expect);
    if (trial % 4 == 1) CHECK(compute(g, par).certificate == r.certificate);
    if (trial % 4 == 2) CHECK(compute(g, small).width == expect);
  }
}

TEST_CASE("probe timeouts leave a verified bracket") {
  const auto dir = std::filesystem::temp_directory_path() / ("tww-search-test-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto sleeper = dir / "sleeper";
  std::ofstream(sleeper) << "#!/bin/sh\nsleep 30\n";
  std::filesystem::permissions(sleeper, std::filesystem::perms::owner_all);
  SearchOptions opts;
  opts.solver.executable = sleeper.string();
  opts.solver.timeout_seconds = 0.2;
  const Graph g = named_graph("hoffman");
  const auto r = compute(g, opts);
  CHECK(r.status == SearchStatus::unknown);
  CHECK(r.lower < r.width);
  CHECK(verify_sequence(g, r.certificate) == r.width);
  REQUIRE(r.probes.size() == 1);
  CHECK(r.probes[0].verdict == Verdict::timeout);
  std::filesystem::remove_all(dir);
}

TEST_CASE("twin-width numbers of small connected graphs") {
  std::istringstream four(stream_of(4));
  const auto r4 = sweep_numbers(four, 1);
  CHECK(r4.graphs == 6);
  CHECK(r4.considered == 1);
  CHECK(r4.counts == std::map<std::pair<int, int>, std::size_t>{{{4, 1}, 1}});
  CHECK(r4.min_order_for_target == 4);
  CHECK(testing::canonical_mask(parse_graph6(r4.target_witness)) == testing::canonical_mask(path_graph(4)));

  std::istringstream five(stream_of(5));
  const auto r5 = sweep_numbers(five, 2);
  CHECK(r5.graphs == 21);
  CHECK(r5.considered == 4);
  CHECK(r5.counts == std::map<std::pair<int, int>, std::size_t>{{{5, 1}, 3}, {{5, 2}, 1}});
  CHECK(testing::canonical_mask(parse_graph6(r5.target_witness)) == testing::canonical_mask(cycle_graph(5)));

  std::istringstream six(stream_of(6));
  const auto r6 = sweep_numbers(six, 3);
  CHECK(r6.graphs == 112);
  CHECK(r6.considered == 26);
  CHECK(r6.counts == std::map<std::pair<int, int>, std::size_t>{{{6, 1}, 16}, {{6, 2}, 10}});
  CHECK(r6.min_order_for_target == -1);
}

TEST_CASE("sweep filters and parse errors") {
  std::istringstream in("C~\nbad!\nDhc\n");
  std::vector<std::size_t> lines;
  NumbersOptions all;
  all.prime_only = false;
  const auto r = sweep_numbers(in, 0, all, [&](std::size_t line, const std::string&) { lines.push_back(line); });
  CHECK(r.parse_errors == 1);
  CHECK(lines == std::vector<std::size_t>{2});
  CHECK(r.graphs == 2);
  CHECK(r.considered == 2);
  CHECK(r.min_order_for_target == 4);

  std::istringstream dense(stream_of(5));
  NumbersOptions half;
  half.half_edges_only = true;
  const auto h = sweep_numbers(dense, 2, half);
  std::size_t total = 0;
  for (const auto& [key, count] : h.counts) total += count;
  CHECK(total == h.considered);
  CHECK(h.considered < 4);
}
