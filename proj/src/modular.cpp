#include "tww/modular.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "tww/error.hpp"

namespace tww {

bool is_module(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) return true;
  std::vector<std::uint8_t> in(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : s) in[static_cast<std::size_t>(v)] = 1;
  for (Vertex z = 0; z < g.order(); ++z) {
    if (in[static_cast<std::size_t>(z)]) continue;
    const bool first = g.adjacent(z, s.front());
    for (Vertex v : s)
      if (g.adjacent(z, v) != first) return false;
  }
  return true;
}

namespace {

/// Size of the smallest module containing u and v, grown by adding every
/// outside vertex that distinguishes a member from v.
int module_closure_size(const Graph& g, Vertex u, Vertex v) {
  const int n = g.order();
  std::vector<std::uint8_t> in(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> queue{u};
  in[static_cast<std::size_t>(u)] = in[static_cast<std::size_t>(v)] = 1;
  int size = 2;
  while (!queue.empty()) {
    const Vertex w = queue.back();
    queue.pop_back();
    for (Vertex z = 0; z < n; ++z) {
      if (in[static_cast<std::size_t>(z)] || g.adjacent(z, w) == g.adjacent(z, v)) continue;
      in[static_cast<std::size_t>(z)] = 1;
      ++size;
      queue.push_back(z);
    }
  }
  return size;
}

}  // namespace

ModularPartition maximal_modular_partition(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw ContractError("maximal_modular_partition: need at least two vertices");
  if (!is_connected(g) || !is_connected(complement(g)))
    throw ContractError("maximal_modular_partition: graph and complement must both be connected");
  ModularPartition p;
  std::vector<std::uint8_t> assigned(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (assigned[static_cast<std::size_t>(v)]) continue;
    std::vector<Vertex> block{v};
    assigned[static_cast<std::size_t>(v)] = 1;
    for (Vertex u = v + 1; u < n; ++u) {
      if (assigned[static_cast<std::size_t>(u)]) continue;
      if (module_closure_size(g, u, v) < n) {
        block.push_back(u);
        assigned[static_cast<std::size_t>(u)] = 1;
      }
    }
    p.blocks.push_back(std::move(block));
  }
  return p;
}

Graph quotient(const Graph& g, const ModularPartition& p) {
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (p.blocks[b].empty()) throw ContractError("quotient: empty block");
    for (Vertex v : p.blocks[b]) {
      if (v < 0 || v >= g.order() || owner[static_cast<std::size_t>(v)] >= 0)
        throw ContractError("quotient: blocks do not partition the vertex set");
      owner[static_cast<std::size_t>(v)] = static_cast<int>(b);
    }
    if (!is_module(g, p.blocks[b])) throw ContractError("quotient: block " + std::to_string(b) + " is not a module");
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end())
    throw ContractError("quotient: blocks do not cover the vertex set");
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < p.blocks.size(); ++a)
    for (std::size_t b = a + 1; b < p.blocks.size(); ++b)
      if (g.adjacent(p.blocks[a].front(), p.blocks[b].front())) edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  return Graph(static_cast<int>(p.blocks.size()), edges);
}

namespace {

enum class NodeKind { leaf, parallel, series, prime };

struct ModNode {
  NodeKind kind = NodeKind::leaf;
  std::vector<Vertex> vertices;  // original ids, ascending
  std::vector<ModNode> children;
  std::size_t member = 0;        // prime nodes: index into the member list
};

ModNode build(const Graph& g, std::vector<Vertex> vertices, std::vector<PrimeMember>& members, int depth) {
  ModNode node;
  node.vertices = std::move(vertices);
  if (node.vertices.size() == 1) return node;
  const auto sub = induced_subgraph(g, node.vertices);
  auto lift = [&](const std::vector<Vertex>& local) {
    std::vector<Vertex> out;
    for (Vertex v : local) out.push_back(sub.original[static_cast<std::size_t>(v)]);
    return out;
  };
  auto comps = connected_components(sub.graph);
  if (comps.size() > 1) {
    node.kind = NodeKind::parallel;
    for (const auto& c : comps) node.children.push_back(build(g, lift(c), members, depth + 1));
    return node;
  }
  auto cocomps = connected_components(complement(sub.graph));
  if (cocomps.size() > 1) {
    node.kind = NodeKind::series;
    for (const auto& c : cocomps) node.children.push_back(build(g, lift(c), members, depth + 1));
    return node;
  }
  node.kind = NodeKind::prime;
  const auto part = maximal_modular_partition(sub.graph);
  PrimeMember m;
  m.graph = quotient(sub.graph, part);
  for (const auto& b : part.blocks) m.representatives.push_back(sub.original[static_cast<std::size_t>(b.front())]);
  m.provenance = "quotient of a " + std::to_string(node.vertices.size()) + "-vertex induced subgraph by " +
                 std::to_string(part.blocks.size()) + " maximal modules, depth " + std::to_string(depth);
  node.member = members.size();
  members.push_back(std::move(m));
  for (const auto& b : part.blocks) node.children.push_back(build(g, lift(b), members, depth + 1));
  return node;
}

Vertex assemble(const ModNode& node, const std::vector<MemberSolution>& solutions, std::vector<ContractionStep>& steps) {
  if (node.kind == NodeKind::leaf) return node.vertices.front();
  std::vector<Vertex> survivors;
  for (const auto& child : node.children) survivors.push_back(assemble(child, solutions, steps));
  if (node.kind != NodeKind::prime) {
    for (std::size_t i = 1; i < survivors.size(); ++i) steps.push_back({survivors[i], survivors.front()});
    return survivors.front();
  }
  const auto& seq = solutions[node.member].sequence;
  if (seq.steps.size() + 1 != survivors.size())
    throw CertificateError("prime member sequence has the wrong length");
  std::vector<std::uint8_t> alive(survivors.size(), 1);
  for (const auto& s : seq.steps) {
    if (s.child < 0 || s.parent < 0 || static_cast<std::size_t>(s.child) >= survivors.size() ||
        static_cast<std::size_t>(s.parent) >= survivors.size())
      throw CertificateError("prime member sequence references an unknown vertex");
    alive[static_cast<std::size_t>(s.child)] = 0;
    steps.push_back({survivors[static_cast<std::size_t>(s.child)], survivors[static_cast<std::size_t>(s.parent)]});
  }
  for (std::size_t i = 0; i < survivors.size(); ++i)
    if (alive[i]) return survivors[i];
  throw CertificateError("prime member sequence leaves no survivor");
}

ModNode build_root(const Graph& g, std::vector<PrimeMember>& members) {
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  return build(g, std::move(all), members, 0);
}

}  // namespace

std::vector<PrimeMember> prime_set(const Graph& g) {
  std::vector<PrimeMember> members;
  if (g.order() > 0) build_root(g, members);
  return members;
}

ModularResult tww_via_primes(const Graph& g, const PrimeSolver& solver, bool parallel) {
  ModularResult result;
  if (g.order() == 0) return result;
  std::vector<PrimeMember> members;
  const ModNode root = build_root(g, members);
  std::vector<MemberSolution> solutions(members.size());
  if (parallel && members.size() > 1) {
    std::vector<std::future<MemberSolution>> futures;
    for (std::size_t i = 0; i < members.size(); ++i)
      futures.push_back(std::async(std::launch::async, [&, i] { return solver(members[i].graph, i); }));
    for (std::size_t i = 0; i < members.size(); ++i) solutions[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < members.size(); ++i) solutions[i] = solver(members[i].graph, i);
  }
  for (const auto& s : solutions) {
    result.member_widths.push_back(s.width);
    result.width = std::max(result.width, s.width);
  }
  assemble(root, solutions, result.sequence.steps);
  return result;
}

}  // namespace tww
