#include "tww/encodings.hpp"

#include <algorithm>
#include <string>

#include "tww/error.hpp"

namespace tww {

EncodingMode parse_encoding_mode(std::string_view s) {
  if (s == "rel" || s == "relative") return EncodingMode::relative;
  if (s == "abs" || s == "absolute") return EncodingMode::absolute;
  throw ContractError("unknown encoding mode '" + std::string(s) + "'");
}

const char* to_string(EncodingMode m) { return m == EncodingMode::relative ? "rel" : "abs"; }

namespace {

/// Dense id table for a family indexed by up to three small integers.
class IdTable {
public:
  IdTable(int n, int dims) : n_(n), ids_(static_cast<std::size_t>(dims == 2 ? n * n : n * n * n), 0) {}
  int& operator()(int i, int j) { return ids_[static_cast<std::size_t>(i * n_ + j)]; }
  int& operator()(int i, int j, int k) { return ids_[static_cast<std::size_t>((i * n_ + j) * n_ + k)]; }
  int operator()(int i, int j) const { return ids_[static_cast<std::size_t>(i * n_ + j)]; }
  int operator()(int i, int j, int k) const { return ids_[static_cast<std::size_t>((i * n_ + j) * n_ + k)]; }

private:
  int n_;
  std::vector<int> ids_;
};

void check_args(const Graph& g, int d) {
  if (g.order() < 2) throw ContractError("encode: need at least two vertices");
  if (d < 0) throw ContractError("encode: d must be non-negative");
}

}  // namespace

EncodedInstance encode_relative(const Graph& g, int d) {
  check_args(g, d);
  EncodedInstance inst;
  inst.mode = EncodingMode::relative;
  inst.graph = g;
  inst.d = d;
  const int n = g.order();
  auto& vars = inst.vars;
  auto& f = inst.formula;

  IdTable o(n, 2), p(n, 2), a(n, 2), r(n, 3);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) o(i, j) = vars.add("o", {i, j});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) p(i, j) = vars.add("p", {i, j});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a(i, j) = vars.add("a", {i, j});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) r(i, j, k) = vars.add("r", {i, j, k});
  f.reserve_vars(vars.size());

  auto os = [&](int i, int j) { return i < j ? o(i, j) : -o(j, i); };
  auto as = [&](int i, int j) { return i < j ? a(i, j) : a(j, i); };
  auto rs = [&](int i, int j, int k) { return j < k ? r(i, j, k) : r(i, k, j); };

  // The order is a transitive tournament: no directed triangle either way round.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        f.add_clause({-o(i, j), -o(j, k), o(i, k)});
        f.add_clause({o(i, j), o(j, k), -o(i, k)});
      }

  // Exactly one parent for every vertex except n-1, and it comes later.
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<Literal> alo;
    for (int j = i + 1; j < n; ++j) alo.push_back(p(i, j));
    f.add_clause(alo);
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) f.add_clause({-p(i, j), -p(i, k)});
    for (int j = i + 1; j < n; ++j) f.add_clause({-p(i, j), o(i, j)});
  }

  // A red edge jk present after eliminating i marks jk in a.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (i == j || i == k) continue;
        f.add_clause({-os(i, j), -os(i, k), -r(i, j, k), a(j, k)});
      }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // New red edges between the parent and the vertices telling i and j apart.
      for (Vertex k : symdiff_neighborhood(g, i, j)) f.add_clause({-p(i, j), -os(i, k), rs(i, j, k)});
      // Red edges of i move to its parent.
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        f.add_clause({-p(i, j), -os(i, k), -as(i, k), rs(i, j, k)});
      }
    }

  // Red edges between surviving vertices persist.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        for (int m = k + 1; m < n; ++m) {
          if (m == i || m == j) continue;
          f.add_clause({-os(i, j), -os(j, k), -os(j, m), -r(i, k, m), r(j, k, m)});
        }
      }
    }

  // Red degree of j right after eliminating i is at most d.
  std::vector<Literal> lits;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      lits.clear();
      for (int k = 0; k < n; ++k)
        if (k != i && k != j) lits.push_back(rs(i, j, k));
      at_most(f, vars, lits, d, i * n + j);
    }
  f.reserve_vars(vars.size());
  return inst;
}

EncodedInstance encode_absolute(const Graph& g, int d) {
  check_args(g, d);
  const int n = g.order();
  EncodedInstance inst;
  inst.mode = EncodingMode::absolute;
  inst.graph = g;
  inst.d = d;
  auto& vars = inst.vars;
  auto& f = inst.formula;
  const int steps = std::max(0, std::min(n - d, n - 2));

  IdTable x(n, 2), p(n, 2), e(n, 2), r(n, 3);
  for (int q = 0; q < n; ++q)
    for (int v = 0; v < n; ++v) x(q, v) = vars.add("o'", {q, v});
  for (int i = 0; i + 1 < n; ++i)
    for (int j = i + 1; j < n; ++j) p(i, j) = vars.add("p", {i, j});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e(i, j) = vars.add("e", {i, j});
  for (int i = 0; i < steps; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) r(i, j, k) = vars.add("r", {i, j, k});
  f.reserve_vars(vars.size());

  auto es = [&](int i, int j) { return i < j ? e(i, j) : e(j, i); };
  auto rs = [&](int i, int j, int k) { return j < k ? r(i, j, k) : r(i, k, j); };

  // Positions and vertices are in bijection.
  std::vector<Literal> clause;
  for (int v = 0; v < n; ++v) {
    clause.clear();
    for (int q = 0; q < n; ++q) clause.push_back(x(q, v));
    f.add_clause(clause);
    for (int q = 0; q < n; ++q)
      for (int q2 = q + 1; q2 < n; ++q2) f.add_clause({-x(q, v), -x(q2, v)});
  }
  for (int q = 0; q < n; ++q) {
    clause.clear();
    for (int v = 0; v < n; ++v) clause.push_back(x(q, v));
    f.add_clause(clause);
    for (int v = 0; v < n; ++v)
      for (int v2 = v + 1; v2 < n; ++v2) f.add_clause({-x(q, v), -x(q, v2)});
  }

  // Every position but the last has exactly one later parent position.
  for (int i = 0; i + 1 < n; ++i) {
    clause.clear();
    for (int j = i + 1; j < n; ++j) clause.push_back(p(i, j));
    f.add_clause(clause);
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) f.add_clause({-p(i, j), -p(i, k)});
  }

  // e(i, j) holds iff the vertices placed at positions i and j are adjacent.
  for (int u = 0; u < n; ++u)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        clause.assign({-x(i, u), -e(i, j)});
        for (Vertex v : g.neighbors(u)) clause.push_back(x(j, v));
        f.add_clause(clause);
        clause.assign({-x(i, u), e(i, j)});
        for (int v = 0; v < n; ++v)
          if (v != u && !g.adjacent(u, v)) clause.push_back(x(j, v));
        f.add_clause(clause);
      }

  for (int i = 0; i < steps; ++i) {
    if (i > 0) {
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) f.add_clause({-r(i - 1, j, k), r(i, j, k)});
    }
    for (int j = i + 1; j < n; ++j)
      for (int k = i + 1; k < n; ++k) {
        if (k == j) continue;
        if (i > 0) f.add_clause({-p(i, j), -r(i - 1, i, k), rs(i, j, k)});
        f.add_clause({-p(i, j), -es(i, k), es(j, k), rs(i, j, k)});
        f.add_clause({-p(i, j), es(i, k), -es(j, k), rs(i, j, k)});
      }
  }

  std::vector<Literal> lits;
  for (int i = 0; i < steps; ++i)
    for (int j = i + 1; j < n; ++j) {
      lits.clear();
      for (int k = i + 1; k < n; ++k)
        if (k != j) lits.push_back(rs(i, j, k));
      at_most(f, vars, lits, d, i * n + j);
    }
  f.reserve_vars(vars.size());
  return inst;
}

EncodedInstance encode(const Graph& g, int d, EncodingMode mode) {
  return mode == EncodingMode::relative ? encode_relative(g, d) : encode_absolute(g, d);
}

namespace {

bool value(const std::vector<bool>& model, int id) {
  return id > 0 && static_cast<std::size_t>(id) < model.size() && model[static_cast<std::size_t>(id)];
}

TwinWidthDecomposition decode_relative(const EncodedInstance& inst, const std::vector<bool>& model) {
  const int n = inst.graph.order();
  const auto& vars = inst.vars;
  auto before = [&](int i, int j) { return i < j ? value(model, vars.at("o", {i, j})) : !value(model, vars.at("o", {j, i})); };
  TwinWidthDecomposition dec;
  dec.order.assign(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    int rank = 0;
    for (int u = 0; u < n; ++u)
      if (u != v && before(u, v)) ++rank;
    if (dec.order[static_cast<std::size_t>(rank)] != -1)
      throw EncodingSoundnessError("decode: order variables do not form a total order");
    dec.order[static_cast<std::size_t>(rank)] = v;
  }
  dec.parent.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!value(model, vars.at("p", {i, j}))) continue;
      if (dec.parent[static_cast<std::size_t>(i)] != -1)
        throw EncodingSoundnessError("decode: vertex " + std::to_string(i) + " has several parents");
      dec.parent[static_cast<std::size_t>(i)] = j;
    }
    if (dec.parent[static_cast<std::size_t>(i)] == -1) throw EncodingSoundnessError("decode: vertex " + std::to_string(i) + " has no parent");
  }
  return dec;
}

TwinWidthDecomposition decode_absolute(const EncodedInstance& inst, const std::vector<bool>& model) {
  const int n = inst.graph.order();
  const auto& vars = inst.vars;
  TwinWidthDecomposition dec;
  dec.order.assign(static_cast<std::size_t>(n), -1);
  for (int q = 0; q < n; ++q)
    for (int v = 0; v < n; ++v) {
      if (!value(model, vars.at("o'", {q, v}))) continue;
      if (dec.order[static_cast<std::size_t>(q)] != -1)
        throw EncodingSoundnessError("decode: position " + std::to_string(q) + " holds several vertices");
      dec.order[static_cast<std::size_t>(q)] = v;
    }
  if (std::find(dec.order.begin(), dec.order.end(), -1) != dec.order.end())
    throw EncodingSoundnessError("decode: some position is empty");
  dec.parent.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i + 1 < n; ++i) {
    int found = -1;
    for (int j = i + 1; j < n; ++j) {
      if (!value(model, vars.at("p", {i, j}))) continue;
      if (found != -1) throw EncodingSoundnessError("decode: position " + std::to_string(i) + " has several parents");
      found = j;
    }
    if (found == -1) throw EncodingSoundnessError("decode: position " + std::to_string(i) + " has no parent");
    dec.parent[static_cast<std::size_t>(dec.order[static_cast<std::size_t>(i)])] = dec.order[static_cast<std::size_t>(found)];
  }
  return dec;
}

}  // namespace

TwinWidthDecomposition decode(const EncodedInstance& inst, const std::vector<bool>& model) {
  TwinWidthDecomposition dec =
      inst.mode == EncodingMode::relative ? decode_relative(inst, model) : decode_absolute(inst, model);
  int width = 0;
  try {
    width = elimination_width(inst.graph, dec);
  } catch (const CertificateError& e) {
    throw EncodingSoundnessError(std::string("decode: invalid decomposition: ") + e.what());
  }
  if (width > inst.d)
    throw EncodingSoundnessError("decode: decomposition has width " + std::to_string(width) + " but the formula bounds it by " +
                                 std::to_string(inst.d));
  return dec;
}

}  // namespace tww
