#include <doctest.h>

#include "support.hpp"
#include "tww/contraction.hpp"
#include "tww/error.hpp"
#include "tww/generators.hpp"

using namespace tww;

namespace {

enum : Vertex { a, b, c, d, e, f, g, h };

const ContractionSequence kFigure1{{{f, c}, {d, a}, {e, b}, {c, b}, {h, b}, {g, a}, {a, b}}};

ContractionSequence random_sequence(int n, std::mt19937_64& rng) {
  std::vector<Vertex> live(static_cast<std::size_t>(n));
  std::iota(live.begin(), live.end(), 0);
  ContractionSequence seq;
  while (live.size() > 1) {
    std::shuffle(live.begin(), live.end(), rng);
    seq.steps.push_back({live[0], live[1]});
    live.erase(live.begin());
  }
  return seq;
}

void check_consistent(const Trigraph& t) {
  int live = 0;
  for (Vertex u = 0; u < t.universe(); ++u) {
    live += t.live(u);
    int red = 0;
    for (Vertex v = 0; v < t.universe(); ++v) {
      REQUIRE(t.color(u, v) == t.color(v, u));
      if (t.color(u, v) != EdgeColor::none) REQUIRE((t.live(u) && t.live(v) && u != v));
      red += t.color(u, v) == EdgeColor::red;
    }
    if (t.live(u)) REQUIRE(red == t.red_degree(u));
  }
  REQUIRE(live == t.live_count());
}

}  // namespace

TEST_CASE("trigraph from a graph") {
  const auto k3 = Trigraph::from_graph(complete_graph(3));
  CHECK(k3.black_edge_count() == 3);
  CHECK(k3.red_edge_count() == 0);
  const auto w = Trigraph::from_graph(named_graph("wagner"));
  CHECK(w.black_edge_count() == 12);
  CHECK(w.red_edge_count() == 0);
  const auto empty = Trigraph::from_graph(empty_graph(4));
  CHECK(empty.black_edge_count() + empty.red_edge_count() == 0);
  CHECK(empty.live_count() == 4);
}

TEST_CASE("first contraction of the Wagner sequence") {
  const auto t = Trigraph::from_graph(named_graph("wagner")).contract(f, c);
  CHECK(!t.live(f));
  CHECK(t.live_count() == 7);
  CHECK(t.red_edge_count() == 2);
  CHECK(t.color(c, d) == EdgeColor::red);
  CHECK(t.color(c, e) == EdgeColor::red);
  CHECK(t.color(c, b) == EdgeColor::black);
  CHECK(t.color(c, g) == EdgeColor::black);
  CHECK(t.red_degree(c) == 2);
  check_consistent(t);
}

TEST_CASE("contraction rules") {
  // twins 0,1 over {2,3}
  const Graph twins(4, std::vector<Edge>{{0, 2}, {1, 2}, {0, 3}, {1, 3}});
  CHECK(Trigraph::from_graph(twins).contract(0, 1).red_edge_count() == 0);

  const auto k2 = Trigraph::from_graph(complete_graph(2)).contract(0, 1);
  CHECK(k2.live_count() == 1);
  CHECK(k2.black_edge_count() + k2.red_edge_count() == 0);

  // a red edge on one side turns a common neighbour red
  auto t = Trigraph::from_graph(path_graph(4));  // 0-1-2-3
  t.merge(0, 2);                                 // 2 sees 1 (both) and 3 (only 2)
  CHECK(t.color(2, 1) == EdgeColor::black);
  CHECK(t.color(2, 3) == EdgeColor::red);
  t.merge(1, 3);
  CHECK(t.color(3, 2) == EdgeColor::red);
  const Graph star(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  auto s = Trigraph::from_graph(star);
  s.merge(1, 2);
  CHECK(s.color(2, 0) == EdgeColor::black);
  s.merge(3, 0);
  CHECK(s.live_count() == 2);
  CHECK(s.color(0, 2) == EdgeColor::red);

  CHECK_THROWS_AS(Trigraph::from_graph(path_graph(3)).contract(1, 1), ContractError);
  auto dead = Trigraph::from_graph(path_graph(3));
  dead.merge(0, 1);
  CHECK_THROWS_AS(dead.merge(0, 2), ContractError);
}

TEST_CASE("contraction keeps the trigraph consistent") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 8;
    const Graph gr = testing::random_graph(n, 0.5, rng);
    auto t = Trigraph::from_graph(gr);
    for (const auto& step : random_sequence(n, rng).steps) {
      const int before = t.live_count();
      t.merge(step.child, step.parent);
      CHECK(t.live_count() == before - 1);
      check_consistent(t);
    }
  }
}

TEST_CASE("sequence verification") {
  const Graph w = named_graph("wagner");
  CHECK(verify_sequence(w, kFigure1) == 2);
  const auto profile = red_degree_profile(w, kFigure1);
  CHECK(profile.size() == 7);
  CHECK(*std::max_element(profile.begin(), profile.end()) == 2);
  CHECK(profile[0] == 2);

  std::mt19937_64 rng(5);
  for (int n = 2; n <= 8; ++n) CHECK(verify_sequence(complete_graph(n), random_sequence(n, rng)) == 0);

  // P4 a-b-c-d
  const Graph p4 = path_graph(4);
  CHECK(verify_sequence(p4, {{{0, 2}, {1, 3}, {2, 3}}}) == 1);
  CHECK(verify_sequence(p4, {{{0, 3}, {1, 2}, {2, 3}}}) == 2);
}

TEST_CASE("malformed sequences name the step") {
  const Graph p4 = path_graph(4);
  auto step_of = [&](const ContractionSequence& s) {
    try {
      verify_sequence(p4, s);
    } catch (const CertificateError& err) {
      return err.step();
    }
    return std::ptrdiff_t{-2};
  };
  CHECK(step_of({{{0, 1}, {0, 2}, {2, 3}}}) == 1);
  CHECK(step_of({{{0, 1}, {1, 1}, {2, 3}}}) == 1);
  CHECK(step_of({{{0, 1}, {1, 2}, {2, 7}}}) == 2);
  CHECK(step_of({{{0, 1}, {1, 2}}}) == -1);
}

TEST_CASE("replay matches a literal trigraph and is complement invariant") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 6;
    const Graph gr = testing::random_graph(n, 0.45, rng);
    const auto seq = random_sequence(n, rng);
    CHECK(verify_sequence(gr, seq) == verify_sequence(complement(gr), seq));
  }
}

TEST_CASE("best sequence reaches the brute-force twin-width") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 4;
    const Graph gr = testing::random_graph(n, 0.5, rng);
    const int target = testing::brute_tww(gr);
    int best = n;
    std::function<void(Trigraph&, ContractionSequence&, int)> walk = [&](Trigraph& t, ContractionSequence& s, int w) {
      if (w >= best) return;
      if (t.live_count() == 1) {
        best = std::min(best, verify_sequence(gr, s));
        return;
      }
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
          if (u != v && t.live(u) && t.live(v)) {
            Trigraph next = t.contract(u, v);
            s.steps.push_back({u, v});
            walk(next, s, std::max(w, next.max_red_degree()));
            s.steps.pop_back();
          }
    };
    auto t = Trigraph::from_graph(gr);
    ContractionSequence s;
    walk(t, s, 0);
    CHECK(best == target);
  }
}
