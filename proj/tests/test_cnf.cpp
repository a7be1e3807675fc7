#include <doctest.h>

#include <bit>
#include <sstream>

#include "support.hpp"
#include "tww/cnf.hpp"
#include "tww/encodings.hpp"
#include "tww/error.hpp"
#include "tww/generators.hpp"

using namespace tww;

namespace {

std::vector<std::vector<int>> clauses_of(const CnfFormula& f) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < f.clause_count(); ++i) {
    auto c = f.clause(i);
    out.emplace_back(c.begin(), c.end());
  }
  return out;
}

std::string dimacs(const CnfFormula& f) {
  std::ostringstream out;
  emit_dimacs(out, f);
  return out.str();
}

std::multiset<std::vector<int>> clause_multiset(const CnfFormula& f) {
  std::multiset<std::vector<int>> s;
  for (auto c : clauses_of(f)) {
    std::sort(c.begin(), c.end());
    s.insert(c);
  }
  return s;
}

}  // namespace

TEST_CASE("totalizer truth tables for up to 6 literals and d <= 4") {
  for (int k = 1; k <= 6; ++k) {
    for (int d = 0; d <= 4; ++d) {
      for (int polarity = 0; polarity < 2; ++polarity) {
        CnfFormula f;
        VariableMap vars;
        std::vector<Literal> lits;
        for (int i = 0; i < k; ++i) lits.push_back(vars.add("x", {i}) * (polarity && i % 2 ? -1 : 1));
        f.reserve_vars(vars.size());
        at_most(f, vars, lits, d, 0);
        const auto clauses = clauses_of(f);
        for (std::uint32_t row = 0; row < (1u << k); ++row) {
          std::vector<int> assign(static_cast<std::size_t>(f.var_count()) + 1, 0);
          int true_lits = 0;
          for (int i = 0; i < k; ++i) {
            const bool value = row >> i & 1u;
            assign[static_cast<std::size_t>(i + 1)] = value ? 1 : -1;
            true_lits += (lits[static_cast<std::size_t>(i)] > 0) == value;
          }
          const bool sat = testing::dpll_sat(f.var_count(), clauses, assign);
          if (sat != (true_lits <= d)) FAIL("k=" << k << " d=" << d << " row=" << row);
        }
        if (d >= k) CHECK(f.clause_count() == 0);
        if (d == 0) CHECK(f.clause_count() == static_cast<std::size_t>(k));
      }
    }
  }
}

TEST_CASE("totalizer small cases") {
  CnfFormula f;
  VariableMap vars;
  std::vector<Literal> three{vars.add("x", {0}), vars.add("x", {1}), vars.add("x", {2})};
  f.reserve_vars(3);
  at_most(f, vars, three, 0, 0);
  CHECK(clause_multiset(f) == std::multiset<std::vector<int>>{{-1}, {-2}, {-3}});
  CHECK(vars.size() == 3);
  CHECK_THROWS_AS(at_most(f, vars, three, -1, 0), ContractError);

  CnfFormula g;
  VariableMap gv;
  std::vector<Literal> four{gv.add("x", {0}), gv.add("x", {1}), gv.add("x", {2}), gv.add("x", {3})};
  g.reserve_vars(4);
  at_most(g, gv, four, 2, 7);
  CHECK(gv.family_counts().at("tot") > 0);
  for (int id = 5; id <= gv.size(); ++id) {
    CHECK(gv.key(id).family == "tot");
    CHECK(gv.key(id).indices.front() == 7);
  }
  for (std::uint32_t row = 0; row < 16; ++row) {
    std::vector<int> assign(static_cast<std::size_t>(g.var_count()) + 1, 0);
    for (int i = 0; i < 4; ++i) assign[static_cast<std::size_t>(i + 1)] = row >> i & 1u ? 1 : -1;
    CHECK(testing::dpll_sat(g.var_count(), clauses_of(g), assign) == (std::popcount(row) <= 2));
  }
}

TEST_CASE("clause normalisation and errors") {
  CnfFormula f;
  f.reserve_vars(3);
  f.add_clause({1, -2, 1});
  REQUIRE(f.clause_count() == 1);
  CHECK(f.clause(0).size() == 2);
  f.add_clause({2, -2, 3});
  CHECK(f.clause_count() == 1);
  CHECK_THROWS_AS(f.add_clause(std::vector<Literal>{}), ContractError);
  CHECK_THROWS_AS(f.add_clause({0}), ContractError);
  CHECK_THROWS_AS(f.add_clause({4}), ContractError);
  CHECK(f.satisfied_by({false, true, false, false}));
  CHECK(f.satisfied_by({false, false, false, false}));
  CHECK(!f.satisfied_by({false, false, true, false}));
}

TEST_CASE("variable map") {
  VariableMap m;
  CHECK(m.add("o", {0, 1}) == 1);
  CHECK(m.add("o", {0, 2}) == 2);
  CHECK(m.add("p", {0, 1}) == 3);
  CHECK(m.find("o", {0, 2}) == 2);
  CHECK(m.find("o", {1, 2}) == 0);
  CHECK(m.at("p", {0, 1}) == 3);
  CHECK_THROWS_AS(m.at("p", {0, 2}), ContractError);
  CHECK_THROWS_AS(m.add("o", {0, 1}), ContractError);
  CHECK(m.family_counts() == std::map<std::string, int>{{"o", 2}, {"p", 1}});
  std::ostringstream out;
  m.write(out);
  CHECK(out.str() == "o 0 1 1\no 0 2 2\np 0 1 3\n");
}

TEST_CASE("DIMACS output") {
  CHECK(dimacs(CnfFormula{}) == "p cnf 0 0\n");
  CnfFormula f;
  f.reserve_vars(2);
  f.add_clause({1, -2});
  CHECK(dimacs(f) == "p cnf 2 1\n1 -2 0\n");
}

TEST_CASE("DIMACS round trip") {
  const auto inst = encode_relative(named_graph("wagner"), 2);
  std::istringstream in(dimacs(inst.formula));
  const CnfFormula back = parse_dimacs(in);
  CHECK(back.var_count() == inst.formula.var_count());
  CHECK(clause_multiset(back) == clause_multiset(inst.formula));

  std::istringstream multi("c hello\np cnf 3 2\n1 -3\n 2 0 -1 0\n");
  const CnfFormula m = parse_dimacs(multi);
  CHECK(m.clause_count() == 2);
  CHECK(clause_multiset(m) == std::multiset<std::vector<int>>{{-3, 1, 2}, {-1}});
}

TEST_CASE("DIMACS reader errors") {
  auto parse = [](const char* text) {
    std::istringstream in(text);
    return parse_dimacs(in);
  };
  CHECK_THROWS_AS(parse("1 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse("p cnf x 1\n"), ParseError);
  CHECK_THROWS_AS(parse("p cnf 2 1\n1 3 0\n"), ParseError);
  CHECK_THROWS_AS(parse("p cnf 2 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("p cnf 2 1\n1 a 0\n"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
}
