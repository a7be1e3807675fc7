#include "tww/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tww/error.hpp"

namespace tww {
namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError("expected integer, got '" + std::string(tok) + "'", line);
  return v;
}

/// Line-oriented DIMACS edge parser. Comments preceding a header are attached
/// to the graph that header opens.
std::vector<AnnotatedGraph> parse_blocks(std::istream& in, bool single) {
  std::vector<AnnotatedGraph> out;
  std::vector<std::string> comments;
  std::vector<Edge> edges;
  int n = -1;
  std::size_t lineno = 0;
  auto finish = [&] {
    if (n < 0) return;
    out.back().graph = Graph(n, edges);
    edges.clear();
  };
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "c") {
      comments.push_back(line.size() > 2 ? line.substr(2) : std::string());
      continue;
    }
    if (toks[0] == "p") {
      if (n >= 0 && single) throw ParseError("second 'p' header", lineno);
      if (toks.size() != 4 || toks[1] != "edge") throw ParseError("malformed header, expected 'p edge <n> <m>'", lineno);
      const long long nv = to_int(toks[2], lineno);
      const long long m = to_int(toks[3], lineno);
      if (nv < 0 || m < 0 || nv > 1'000'000) throw ParseError("malformed header counts", lineno);
      finish();
      n = static_cast<int>(nv);
      out.emplace_back();
      out.back().comments = std::move(comments);
      comments.clear();
      continue;
    }
    if (toks[0] == "e") {
      if (n < 0) throw ParseError("edge line before 'p edge' header", lineno);
      if (toks.size() != 3) throw ParseError("malformed edge line", lineno);
      const long long u = to_int(toks[1], lineno), v = to_int(toks[2], lineno);
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError("vertex id out of range 1.." + std::to_string(n), lineno);
      if (u == v) throw ParseError("self-loop", lineno);
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      continue;
    }
    throw ParseError("unrecognised line '" + line + "'", lineno);
  }
  finish();
  if (single && out.empty()) throw ParseError("missing 'p edge' header", lineno);
  return out;
}

}  // namespace

Graph parse_edge_list(std::istream& in) { return std::move(parse_blocks(in, true).front().graph); }

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::vector<AnnotatedGraph> parse_edge_lists(std::istream& in) { return parse_blocks(in, false); }

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Graph parse_graph6(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.starts_with(header)) line.remove_prefix(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  for (char c : line) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) throw ParseError("graph6: byte " + std::to_string(b) + " outside 63..126");
  }
  if (line.empty()) throw ParseError("graph6: empty record");
  std::size_t pos = 0;
  auto take = [&]() -> unsigned {
    if (pos >= line.size()) throw ParseError("graph6: truncated record");
    return static_cast<unsigned>(static_cast<unsigned char>(line[pos++])) - 63u;
  };
  long long n = 0;
  if (static_cast<unsigned char>(line[0]) != 126) {
    n = take();
  } else {
    ++pos;
    int bytes = 3;
    if (line.size() > 1 && static_cast<unsigned char>(line[1]) == 126) {
      ++pos;
      bytes = 6;
    }
    for (int i = 0; i < bytes; ++i) n = (n << 6) | take();
  }
  if (n > 100000) throw ParseError("graph6: graph too large");
  const long long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos < need) throw ParseError("graph6: truncated bit payload");
  if (line.size() - pos > need) throw ParseError("graph6: trailing bytes after payload");
  std::vector<Edge> edges;
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const unsigned byte = static_cast<unsigned>(static_cast<unsigned char>(line[pos + static_cast<std::size_t>(k / 6)])) - 63u;
      if (byte & (0x20u >> (k % 6))) edges.emplace_back(i, j);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  std::string out;
  const long long n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    out.append(2, static_cast<char>(126));
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  unsigned acc = 0;
  int nbits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

void read_graph6_stream(std::istream& in, const std::function<void(Graph, std::string_view)>& on_graph,
                        const std::function<void(std::size_t, const std::string&)>& on_error) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const ParseError& e) {
      if (on_error) on_error(lineno, e.what());
      continue;
    }
    on_graph(std::move(g), line);
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  if (path.ends_with(".g6") || path.ends_with(".graph6")) {
    std::string line;
    while (std::getline(in, line))
      if (!line.empty() && line != "\r") return parse_graph6(line);
    throw ParseError("no graph6 record in " + path);
  }
  return parse_edge_list(in);
}

}  // namespace tww
