#include "tww/generators.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <random>

#include "tww/error.hpp"

namespace tww {

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw ContractError("cycle_graph needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 0) throw ContractError("erdos_renyi: negative n");
  if (!(p >= 0.0 && p <= 1.0)) throw ContractError("erdos_renyi: p outside [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

std::pair<int, int> prime_power(int q) {
  if (q < 2) return {0, 0};
  int p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  return q == 1 ? std::pair{p, k} : std::pair{0, 0};
}

namespace {

/// GF(p^k) with elements encoded as base-p digit vectors.
class FiniteField {
public:
  FiniteField(int p, int k) : p_(p), k_(k), q_(1) {
    for (int i = 0; i < k; ++i) q_ *= p;
    if (k == 1) {
      modulus_ = {0, 1};
    } else {
      // First monic degree-k polynomial (lowest coefficients least significant) that yields a field.
      for (int t = 0; t < q_; ++t) {
        modulus_ = digits(t);
        modulus_.push_back(1);
        if (is_field()) break;
        modulus_.clear();
      }
      if (modulus_.empty()) throw ContractError("no irreducible polynomial found");
    }
  }

  int size() const { return q_; }

  int add(int a, int b) const {
    auto x = digits(a), y = digits(b);
    for (int i = 0; i < k_; ++i) x[static_cast<std::size_t>(i)] = (x[static_cast<std::size_t>(i)] + y[static_cast<std::size_t>(i)]) % p_;
    return value(x);
  }

  int neg(int a) const {
    auto x = digits(a);
    for (auto& c : x) c = (p_ - c) % p_;
    return value(x);
  }

  int mul(int a, int b) const {
    auto x = digits(a), y = digits(b);
    std::vector<int> prod(static_cast<std::size_t>(2 * k_), 0);
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j)
        prod[static_cast<std::size_t>(i + j)] = (prod[static_cast<std::size_t>(i + j)] + x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)]) % p_;
    // reduce by the monic modulus
    for (int d = 2 * k_ - 1; d >= k_; --d) {
      const int c = prod[static_cast<std::size_t>(d)];
      if (c == 0) continue;
      for (int i = 0; i <= k_; ++i) {
        auto& slot = prod[static_cast<std::size_t>(d - k_ + i)];
        slot = ((slot - c * modulus_[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
      }
    }
    prod.resize(static_cast<std::size_t>(k_));
    return value(prod);
  }

private:
  std::vector<int> digits(int a) const {
    std::vector<int> d(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i, a /= p_) d[static_cast<std::size_t>(i)] = a % p_;
    return d;
  }
  int value(const std::vector<int>& d) const {
    int v = 0;
    for (int i = k_ - 1; i >= 0; --i) v = v * p_ + d[static_cast<std::size_t>(i)];
    return v;
  }
  bool is_field() const {
    for (int a = 1; a < q_; ++a)
      for (int b = 1; b < q_; ++b)
        if (mul(a, b) == 0) return false;
    return true;
  }

  int p_, k_, q_;
  std::vector<int> modulus_;
};

}  // namespace

Graph paley(int q) {
  const auto [p, k] = prime_power(q);
  if (p == 0) throw ContractError("paley: q=" + std::to_string(q) + " is not a prime power");
  if (q % 4 != 1) throw ContractError("paley: q=" + std::to_string(q) + " is not 1 mod 4");
  const FiniteField field(p, k);
  std::vector<char> square(static_cast<std::size_t>(q), 0);
  for (int x = 1; x < q; ++x) square[static_cast<std::size_t>(field.mul(x, x))] = 1;
  std::vector<Edge> edges;
  for (int x = 0; x < q; ++x)
    for (int y = x + 1; y < q; ++y)
      if (square[static_cast<std::size_t>(field.add(x, field.neg(y)))]) edges.emplace_back(x, y);
  return Graph(q, edges);
}

Graph grid_graph(int w, int h) {
  std::vector<Edge> edges;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (x + 1 < w) edges.emplace_back(y * w + x, y * w + x + 1);
      if (y + 1 < h) edges.emplace_back(y * w + x, (y + 1) * w + x);
    }
  }
  return Graph(w * h, edges);
}

Graph rook_graph(int k) {
  std::vector<Edge> edges;
  for (int a = 0; a < k * k; ++a)
    for (int b = a + 1; b < k * k; ++b)
      if (a / k == b / k || a % k == b % k) edges.emplace_back(a, b);
  return Graph(k * k, edges);
}

Graph generalized_petersen(int n, int k) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(i, n + i);
    edges.emplace_back(n + i, n + (i + k) % n);
  }
  return Graph(2 * n, edges);
}

Graph lcf_graph(int n, const std::vector<int>& shifts) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    const int s = shifts[static_cast<std::size_t>(i) % shifts.size()];
    edges.emplace_back(i, ((i + s) % n + n) % n);
  }
  return Graph(n, edges);
}

namespace {

Graph from_adjacency(int n, std::initializer_list<std::pair<int, std::vector<int>>> rows) {
  std::vector<Edge> edges;
  for (const auto& [u, vs] : rows)
    for (int v : vs) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph add_path(Graph g, std::initializer_list<int> walk, std::vector<Edge> extra = {}) {
  std::vector<Edge> edges = g.edges();
  for (auto it = walk.begin(); it + 1 != walk.end(); ++it) edges.emplace_back(*it, *(it + 1));
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph(g.order(), edges);
}

Graph flower_snark() {
  // J5: five claws a_i -> (b_i, c_i, d_i); the b_i form a 5-cycle, the c_i then d_i a 10-cycle.
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, 5 + i);
    edges.emplace_back(i, 10 + i);
    edges.emplace_back(i, 15 + i);
    edges.emplace_back(5 + i, 5 + (i + 1) % 5);
  }
  for (int i = 0; i < 10; ++i) edges.emplace_back(10 + i, 10 + (i + 1) % 10);
  return Graph(20, edges);
}

Graph grotzsch() {
  // Mycielskian of C5: cycle 0..4, shadows 5..9, apex 10.
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, (i + 1) % 5);
    edges.emplace_back(5 + i, (i + 4) % 5);
    edges.emplace_back(10, 5 + i);
  }
  return Graph(11, edges);
}

Graph holt() {
  // Z9 x Z3, (x, y) ~ (4x +- 1, y + 1); vertex id 3x + y.
  std::vector<Edge> edges;
  for (int x = 0; x < 9; ++x)
    for (int y = 0; y < 3; ++y)
      for (int s : {1, -1}) edges.emplace_back(3 * x + y, 3 * (((4 * x + s) % 9 + 9) % 9) + (y + 1) % 3);
  return Graph(27, edges);
}

Graph shrikhande() {
  // Cayley graph of Z4 x Z4 with connection set {+-(0,1), +-(1,0), +-(1,1)}.
  std::vector<Edge> edges;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (auto [da, db] : {std::pair{0, 1}, {1, 0}, {1, 1}}) edges.emplace_back(4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4);
  return Graph(16, edges);
}

Graph clebsch() {
  // Folded 5-cube: 4-bit words adjacent iff they differ in one bit or in all four.
  std::vector<Edge> edges;
  for (int a = 0; a < 16; ++a)
    for (int b = a + 1; b < 16; ++b) {
      const int x = a ^ b;
      if (x == 15 || (x & (x - 1)) == 0) edges.emplace_back(a, b);
    }
  return Graph(16, edges);
}

Graph hoffman() {
  // Bipartite 4-regular graph cospectral with the 4-cube; parts 0..7 and 8..15.
  const std::vector<Edge> edges{{0, 9},  {0, 12}, {0, 13}, {0, 15}, {1, 10}, {1, 12}, {1, 14}, {1, 15},
                                {2, 9},  {2, 11}, {2, 12}, {2, 14}, {3, 9},  {3, 10}, {3, 11}, {3, 15},
                                {4, 8},  {4, 10}, {4, 11}, {4, 14}, {5, 8},  {5, 10}, {5, 13}, {5, 15},
                                {6, 8},  {6, 12}, {6, 13}, {6, 14}, {7, 8},  {7, 9},  {7, 11}, {7, 13}};
  return Graph(16, edges);
}

Graph moser_spindle() {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4},
                                {0, 5}, {4, 5}, {4, 6}, {5, 6}, {3, 6}};
  return Graph(7, edges);
}

Graph tietze() {
  // Petersen graph with one vertex blown up into the triangle 9-10-11.
  Graph base(12, std::vector<Edge>{{0, 9}, {3, 10}, {6, 11}, {1, 5}, {2, 7}, {4, 8}});
  return add_path(add_path(base, {0, 1, 2, 3, 4, 5, 6, 7, 8, 0}), {9, 10, 11, 9});
}

Graph poussin() {
  Graph g = from_adjacency(15, {{2, {7, 8, 3, 4}}, {1, {7, 6}}, {0, {6, 5, 4}}, {3, {5}}});
  g = add_path(g, {0, 1, 2, 0});
  g = add_path(g, {3, 4, 5, 6, 7, 8, 3});
  g = add_path(g, {9, 10, 11, 12, 13, 9});
  g = add_path(g, {8, 12, 7, 11, 6, 10, 5, 9, 3, 13, 8});
  return add_path(g, {14, 9}, {{14, 10}, {14, 11}, {14, 12}, {14, 13}});
}

Graph sousselier() {
  Graph g = add_path(Graph(16), {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 0});
  g = add_path(g, {12, 8, 3, 14});
  g = add_path(g, {9, 5, 0, 11});
  return add_path(g, {6, 2}, {{15, 1}, {15, 4}, {15, 7}, {15, 10}, {15, 13}});
}

Graph robertson() {
  const std::vector<int> chords{8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4};
  std::vector<Edge> edges;
  for (int i = 0; i < 19; ++i) {
    edges.emplace_back(i, (i + 1) % 19);
    edges.emplace_back(i, (i + chords[static_cast<std::size_t>(i)]) % 19);
  }
  return Graph(19, edges);
}

struct CorpusEntry {
  NamedGraphInfo info;
  Graph (*build)();
};

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries{
      {{"Brinkmann", 21, 42},
       [] {
         return from_adjacency(21, {{0, {2, 5, 7, 13}}, {1, {3, 6, 7, 8}}, {2, {4, 8, 9}}, {3, {5, 9, 10}},
                                    {4, {6, 10, 11}}, {5, {11, 12}}, {6, {12, 13}}, {7, {15, 20}}, {8, {14, 16}},
                                    {9, {15, 17}}, {10, {16, 18}}, {11, {17, 19}}, {12, {18, 20}}, {13, {14, 19}},
                                    {14, {17, 18}}, {15, {18, 19}}, {16, {19, 20}}, {17, {20}}});
       }},
      {{"Chvátal", 12, 24},
       [] {
         return from_adjacency(12, {{0, {1, 4, 6, 9}}, {1, {2, 5, 7}}, {2, {3, 6, 8}}, {3, {4, 7, 9}},
                                    {4, {5, 8}}, {5, {10, 11}}, {6, {10, 11}}, {7, {8, 11}}, {8, {10}},
                                    {9, {10, 11}}});
       }},
      {{"Clebsch", 16, 40}, clebsch},
      {{"Desargues", 20, 30}, [] { return generalized_petersen(10, 3); }},
      {{"Dodecahedron", 20, 30}, [] { return generalized_petersen(10, 2); }},
      {{"Dürer", 12, 18}, [] { return generalized_petersen(6, 2); }},
      {{"Errera", 17, 45},
       [] {
         return from_adjacency(17, {{0, {1, 7, 14, 15, 16}}, {1, {2, 9, 14, 15}}, {2, {3, 8, 9, 10, 14}},
                                    {3, {4, 9, 10, 11}}, {4, {5, 10, 11, 12}}, {5, {6, 11, 12, 13}},
                                    {6, {7, 8, 12, 13, 16}}, {7, {13, 15, 16}}, {8, {10, 12, 14, 16}},
                                    {9, {11, 13, 15}}, {10, {12}}, {11, {13}}, {13, {15}}, {14, {16}}});
       }},
      {{"FlowerSnark", 20, 30}, flower_snark},
      {{"Folkman", 20, 40}, [] { return lcf_graph(20, {5, -7, -7, 5}); }},
      {{"Franklin", 12, 18}, [] { return lcf_graph(12, {5, -5}); }},
      {{"Frucht", 12, 18}, [] { return lcf_graph(12, {-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2}); }},
      {{"Goldner", 11, 27},
       [] {
         return from_adjacency(11, {{0, {1, 3, 4}}, {1, {2, 3, 4, 5, 6, 7, 10}}, {2, {3, 7}}, {3, {7, 8, 9, 10}},
                                    {4, {3, 5, 9, 10}}, {5, {10}}, {6, {7, 10}}, {7, {8, 10}}, {8, {10}}, {9, {10}}});
       }},
      {{"Grid 6x8", 48, 82}, [] { return grid_graph(6, 8); }},
      {{"Grötzsch", 11, 20}, grotzsch},
      {{"Herschel", 11, 18},
       [] {
         return from_adjacency(11, {{0, {2, 3, 4, 5}}, {1, {2, 3, 6, 7}}, {2, {10}}, {3, {9}}, {4, {8, 9}},
                                    {5, {8, 10}}, {6, {8, 9}}, {7, {8, 10}}});
       }},
      {{"Hoffman", 16, 32}, hoffman},
      {{"Holt", 27, 54}, holt},
      {{"McGee", 24, 36}, [] { return lcf_graph(24, {12, 7, -7}); }},
      {{"Moser", 7, 11}, moser_spindle},
      {{"Nauru", 24, 36}, [] { return generalized_petersen(12, 5); }},
      {{"Paley73", 73, 1314}, [] { return paley(73); }},
      {{"Pappus", 18, 27}, [] { return lcf_graph(18, {5, 7, -7, 7, -7, -5}); }},
      {{"Peterson", 10, 15}, [] { return generalized_petersen(5, 2); }},
      {{"Poussin", 15, 39}, poussin},
      {{"Robertson", 19, 38}, robertson},
      {{"Rook 6x6", 36, 180}, [] { return rook_graph(6); }},
      {{"Shrikhande", 16, 48}, shrikhande},
      {{"Sousselier", 16, 27}, sousselier},
      {{"Tietze", 12, 18}, tietze},
      {{"Wagner", 8, 12}, [] { return lcf_graph(8, {4}); }},
  };
  return entries;
}

std::string normalize_name(std::string_view name) {
  std::string out;
  for (std::size_t i = 0; i < name.size(); ++i) {
    const auto c = static_cast<unsigned char>(name[i]);
    if (c == 0xC3 && i + 1 < name.size()) {
      // Latin-1 supplement: fold the accented letters used in the corpus names.
      const auto d = static_cast<unsigned char>(name[++i]);
      if (d == 0x97) out.push_back('x');
      else if ((d >= 0xA0 && d <= 0xA5) || (d >= 0x80 && d <= 0x85)) out.push_back('a');
      else if ((d >= 0xB2 && d <= 0xB6) || (d >= 0x92 && d <= 0x96)) out.push_back('o');
      else if ((d >= 0xB9 && d <= 0xBC) || (d >= 0x99 && d <= 0x9C)) out.push_back('u');
      else if ((d >= 0xA8 && d <= 0xAB) || (d >= 0x88 && d <= 0x8B)) out.push_back('e');
      continue;
    }
    if (std::isalnum(c)) out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

bool parse_suffix(std::string_view s, std::string_view prefix, int& value) {
  if (!s.starts_with(prefix)) return false;
  s.remove_prefix(prefix.size());
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc{} && p == s.data() + s.size();
}

}  // namespace

const std::vector<NamedGraphInfo>& named_graph_catalogue() {
  static const std::vector<NamedGraphInfo> infos = [] {
    std::vector<NamedGraphInfo> out;
    for (const auto& e : corpus()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

Graph named_graph(std::string_view name) {
  const std::string key = normalize_name(name);
  for (const auto& e : corpus())
    if (normalize_name(e.info.name) == key) return e.build();
  if (key == "petersen") return generalized_petersen(5, 2);
  if (key == "goldnerharary") return named_graph("Goldner");
  if (key == "moserspindle") return moser_spindle();
  int a = 0;
  if (parse_suffix(key, "paley", a)) return paley(a);
  if (parse_suffix(key, "rook", a)) return rook_graph(a);
  if (parse_suffix(key, "path", a)) return path_graph(a);
  if (parse_suffix(key, "cycle", a)) return cycle_graph(a);
  if (parse_suffix(key, "complete", a)) return complete_graph(a);
  if (key.starts_with("grid")) {
    const auto x = key.find('x', 4);
    int w = 0, h = 0;
    if (x != std::string::npos && parse_suffix(key.substr(0, x), "grid", w) && parse_suffix(key.substr(x), "x", h))
      return grid_graph(w, h);
  }
  if (key.starts_with("rook")) {
    const auto x = key.find('x', 4);
    int w = 0, h = 0;
    if (x != std::string::npos && parse_suffix(key.substr(0, x), "rook", w) && parse_suffix(key.substr(x), "x", h) && w == h)
      return rook_graph(w);
  }
  throw ContractError("unknown graph name '" + std::string(name) + "'");
}

}  // namespace tww
