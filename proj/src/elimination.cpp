#include "tww/elimination.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "tww/error.hpp"

namespace tww {

void validate_decomposition(const TwinWidthDecomposition& dec, int n) {
  if (dec.size() != n) throw CertificateError("order has " + std::to_string(dec.size()) + " vertices, expected " + std::to_string(n));
  if (static_cast<int>(dec.parent.size()) != n) throw CertificateError("parent map has wrong size");
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const Vertex v = dec.order[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n) throw CertificateError("order entry " + std::to_string(v) + " out of range");
    if (pos[static_cast<std::size_t>(v)] >= 0) throw CertificateError("vertex " + std::to_string(v) + " repeated in order");
    pos[static_cast<std::size_t>(v)] = i;
  }
  for (int i = 0; i < n; ++i) {
    const Vertex v = dec.order[static_cast<std::size_t>(i)];
    const Vertex p = dec.parent[static_cast<std::size_t>(v)];
    if (i == n - 1) {
      if (p != -1) throw CertificateError("root " + std::to_string(v) + " has a parent");
      continue;
    }
    if (p < 0 || p >= n) throw CertificateError("vertex " + std::to_string(v) + " has no valid parent", i);
    if (pos[static_cast<std::size_t>(p)] <= i)
      throw CertificateError("parent " + std::to_string(p) + " of " + std::to_string(v) + " does not come later in the order", i);
  }
}

namespace {

template <class OnGraph>
int run_elimination(const Graph& g, const TwinWidthDecomposition& dec, OnGraph&& on_graph) {
  const int n = g.order();
  validate_decomposition(dec, n);
  const auto sz = static_cast<std::size_t>(n);
  std::vector<std::uint8_t> red(sz * sz, 0);
  std::vector<int> degree(sz, 0);
  std::vector<std::uint8_t> alive(sz, 1);
  auto set_edge = [&](Vertex a, Vertex b, bool on) {
    auto& cell = red[static_cast<std::size_t>(a) * sz + static_cast<std::size_t>(b)];
    if ((cell != 0) == on) return;
    cell = red[static_cast<std::size_t>(b) * sz + static_cast<std::size_t>(a)] = on ? 1 : 0;
    const int delta = on ? 1 : -1;
    degree[static_cast<std::size_t>(a)] += delta;
    degree[static_cast<std::size_t>(b)] += delta;
  };
  on_graph(0, red, degree, alive);  // H_0 is edgeless
  int width = 0;
  for (int i = 0; i + 1 < n; ++i) {
    const Vertex v = dec.order[static_cast<std::size_t>(i)];
    const Vertex p = dec.parent[static_cast<std::size_t>(v)];
    alive[static_cast<std::size_t>(v)] = 0;
    for (Vertex u = 0; u < n; ++u) {
      if (u == v) continue;
      const bool was_red = red[static_cast<std::size_t>(v) * sz + static_cast<std::size_t>(u)] != 0;
      if (was_red) set_edge(v, u, false);
      if (u == p || !alive[static_cast<std::size_t>(u)]) continue;
      if (was_red || g.adjacent(v, u) != g.adjacent(p, u)) set_edge(p, u, true);
    }
    on_graph(i + 1, red, degree, alive);
    for (Vertex u = 0; u < n; ++u)
      if (alive[static_cast<std::size_t>(u)]) width = std::max(width, degree[static_cast<std::size_t>(u)]);
  }
  return width;
}

}  // namespace

EliminationSequence eliminate(const Graph& g, const TwinWidthDecomposition& dec) {
  EliminationSequence seq;
  const int n = g.order();
  const auto sz = static_cast<std::size_t>(n);
  seq.width = run_elimination(g, dec, [&](int, const std::vector<std::uint8_t>& red, const std::vector<int>& degree,
                                          const std::vector<std::uint8_t>& alive) {
    std::vector<Edge> edges;
    int best = 0;
    for (Vertex a = 0; a < n; ++a) {
      if (!alive[static_cast<std::size_t>(a)]) continue;
      best = std::max(best, degree[static_cast<std::size_t>(a)]);
      for (Vertex b = a + 1; b < n; ++b)
        if (red[static_cast<std::size_t>(a) * sz + static_cast<std::size_t>(b)]) edges.emplace_back(a, b);
    }
    seq.graphs.push_back(std::move(edges));
    seq.max_degree.push_back(best);
  });
  return seq;
}

int elimination_width(const Graph& g, const TwinWidthDecomposition& dec) {
  return run_elimination(g, dec, [](int, const auto&, const auto&, const auto&) {});
}

TwinWidthDecomposition decomposition_from_contractions(const Graph& g, const ContractionSequence& seq) {
  const int n = g.order();
  const std::size_t expected = n > 0 ? static_cast<std::size_t>(n - 1) : 0;
  if (seq.steps.size() != expected)
    throw CertificateError("sequence has " + std::to_string(seq.steps.size()) + " steps, expected " + std::to_string(expected));
  TwinWidthDecomposition dec;
  dec.parent.assign(static_cast<std::size_t>(n), -1);
  std::vector<std::uint8_t> alive(static_cast<std::size_t>(n), 1);
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const auto [c, p] = seq.steps[i];
    const auto step = static_cast<std::ptrdiff_t>(i);
    if (c < 0 || c >= n || p < 0 || p >= n) throw CertificateError("vertex out of range", step);
    if (c == p) throw CertificateError("child equals parent", step);
    if (!alive[static_cast<std::size_t>(c)] || !alive[static_cast<std::size_t>(p)]) throw CertificateError("vertex already contracted", step);
    alive[static_cast<std::size_t>(c)] = 0;
    dec.order.push_back(c);
    dec.parent[static_cast<std::size_t>(c)] = p;
  }
  for (Vertex v = 0; v < n; ++v)
    if (alive[static_cast<std::size_t>(v)]) dec.order.push_back(v);
  return dec;
}

ContractionSequence contractions_from_decomposition(const TwinWidthDecomposition& dec) {
  validate_decomposition(dec, dec.size());
  ContractionSequence seq;
  for (int i = 0; i + 1 < dec.size(); ++i) {
    const Vertex v = dec.order[static_cast<std::size_t>(i)];
    seq.steps.push_back({v, dec.parent[static_cast<std::size_t>(v)]});
  }
  return seq;
}

void write_certificate(std::ostream& out, const TwinWidthDecomposition& dec, int width) {
  out << "tww-cert 1\n";
  out << "n " << dec.size() << '\n';
  out << "width " << width << '\n';
  out << "order";
  for (Vertex v : dec.order) out << ' ' << v;
  out << '\n';
  for (int i = 0; i + 1 < dec.size(); ++i) {
    const Vertex v = dec.order[static_cast<std::size_t>(i)];
    out << "p " << v << ' ' << dec.parent[static_cast<std::size_t>(v)] << '\n';
  }
}

Certificate read_certificate(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next = [&](const char* what) -> std::istringstream {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return std::istringstream(line);
    }
    throw ParseError(std::string("certificate ended before ") + what, lineno);
  };
  auto expect_word = [&](std::istringstream& s, const char* word) {
    std::string w;
    if (!(s >> w) || w != word) throw ParseError(std::string("expected '") + word + "'", lineno);
  };
  auto read_int = [&](std::istringstream& s) {
    long long v;
    if (!(s >> v)) throw ParseError("expected integer", lineno);
    return v;
  };
  auto expect_end = [&](std::istringstream& s) {
    std::string rest;
    if (s >> rest) throw ParseError("unexpected token '" + rest + "'", lineno);
  };

  auto s = next("header");
  expect_word(s, "tww-cert");
  if (read_int(s) != 1) throw ParseError("unsupported certificate version", lineno);
  s = next("vertex count");
  expect_word(s, "n");
  const long long n = read_int(s);
  if (n < 0 || n > 1'000'000) throw ParseError("bad vertex count", lineno);
  expect_end(s);
  s = next("width");
  expect_word(s, "width");
  Certificate cert;
  cert.width = static_cast<int>(read_int(s));
  expect_end(s);
  s = next("order");
  expect_word(s, "order");
  for (long long i = 0; i < n; ++i) cert.decomposition.order.push_back(static_cast<Vertex>(read_int(s)));
  expect_end(s);
  cert.decomposition.parent.assign(static_cast<std::size_t>(n), -1);
  for (long long i = 0; i + 1 < n; ++i) {
    s = next("parent lines");
    expect_word(s, "p");
    const long long c = read_int(s), p = read_int(s);
    expect_end(s);
    if (c < 0 || c >= n || p < 0 || p >= n) throw CertificateError("vertex id out of range", static_cast<std::ptrdiff_t>(i));
    if (c != cert.decomposition.order[static_cast<std::size_t>(i)])
      throw CertificateError("parent line lists " + std::to_string(c) + " but the order has " +
                                 std::to_string(cert.decomposition.order[static_cast<std::size_t>(i)]),
                             static_cast<std::ptrdiff_t>(i));
    cert.decomposition.parent[static_cast<std::size_t>(c)] = static_cast<Vertex>(p);
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos) throw ParseError("trailing content", lineno);
  }
  validate_decomposition(cert.decomposition, static_cast<int>(n));
  return cert;
}

}  // namespace tww
