#include <doctest.h>

#include "support.hpp"
#include "tww/bounds.hpp"
#include "tww/error.hpp"
#include "tww/generators.hpp"

using namespace tww;

namespace {

/// Smallest max red degree over the first r contractions of any sequence.
int brute_lbr(const Trigraph& t, int r, int so_far) {
  if (r == 0) return so_far;
  int best = t.universe() * 2;
  for (Vertex u = 0; u < t.universe(); ++u)
    for (Vertex v = u + 1; v < t.universe(); ++v) {
      if (!t.live(u) || !t.live(v)) continue;
      for (auto [c, p] : {std::pair{u, v}, std::pair{v, u}}) {
        const Trigraph next = t.contract(c, p);
        best = std::min(best, brute_lbr(next, r - 1, std::max(so_far, next.max_red_degree())));
      }
    }
  return best;
}

}  // namespace

TEST_CASE("lb1") {
  CHECK(lb1(named_graph("wagner")) == 2);
  CHECK(lb1(named_graph("petersen")) == 4);
  CHECK(lb1(substitute(cycle_graph(5), 0, empty_graph(2))) == 0);
  CHECK(lb1(complete_graph(5)) == 0);
  CHECK_THROWS_AS(lb1(Graph(1)), ContractError);
}

TEST_CASE("lbr") {
  CHECK(lbr(named_graph("chvatal"), 2) >= 2);
  CHECK(lbr(named_graph("chvatal"), 2) <= 3);
  for (int r = 1; r <= 3; ++r) CHECK(lbr(complete_graph(6), r) == 0);
  CHECK_THROWS_AS(lbr(path_graph(3), 4), ContractError);
  CHECK_THROWS_AS(lbr(path_graph(3), 3), ContractError);

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 4 + trial % 4;
    const Graph g = testing::random_graph(n, 0.5, rng);
    CHECK(lbr(g, 1) == lb1(g));
    const auto t = Trigraph::from_graph(g);
    CHECK(lbr(g, 2) == brute_lbr(t, 2, 0));
    if (trial % 5 == 0) CHECK(lbr(g, 3) == brute_lbr(t, 3, 0));
  }
}

TEST_CASE("strongly regular closed form") {
  CHECK(sr_lb1(10, 3, 0, 1) == 4);
  CHECK(sr_lb1(10, 3, 0, 1) == lb1(named_graph("petersen")));
  CHECK(sr_lb1(16, 6, 2, 2) == 6);
  CHECK(sr_lb1(16, 6, 2, 2) == lb1(named_graph("shrikhande")));
  CHECK(sr_lb1(16, 5, 0, 2) == lb1(named_graph("clebsch")));
  for (int q : {5, 9, 13, 17, 25, 29}) {
    CAPTURE(q);
    const int lb = sr_lb1(q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4);
    CHECK(lb == (q - 1) / 2);
    CHECK(lb == lb1(paley(q)));
  }
}

TEST_CASE("greedy upper bound") {
  const Graph w = named_graph("wagner");
  for (auto score : {GreedyScore::parent_degree, GreedyScore::max_red_degree}) {
    const auto r = greedy_ub(w, score);
    CHECK(r.ub >= 2);
    CHECK(r.ub <= 4);
    CHECK(r.lb == 2);
    CHECK(elimination_width(w, r.ub_certificate) == r.ub);
    CHECK(greedy_ub(complete_graph(7), score).ub == 0);
  }
  CHECK(greedy_ub(Graph(1)).ub == 0);
  CHECK(greedy_ub(Graph()).ub == 0);
  CHECK(greedy_ub(w).ub_certificate == greedy_ub(w).ub_certificate);
}

TEST_CASE("bound chain on random graphs") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 5;
    const Graph g = testing::random_graph(n, 0.2 + 0.1 * (trial % 7), rng);
    const int exact = testing::brute_tww(g);
    const int l1 = lb1(g), l2 = lbr(g, 2);
    CHECK(l1 <= l2);
    CHECK(l2 <= exact);
    for (auto score : {GreedyScore::parent_degree, GreedyScore::max_red_degree}) {
      const auto r = greedy_ub(g, score);
      CHECK(exact <= r.ub);
      CHECK(elimination_width(g, r.ub_certificate) == r.ub);
      CHECK(verify_sequence(g, contractions_from_decomposition(r.ub_certificate)) == r.ub);
    }
  }
}
