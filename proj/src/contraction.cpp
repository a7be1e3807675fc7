#include "tww/contraction.hpp"

#include <algorithm>
#include <string>

#include "tww/error.hpp"

namespace tww {

Trigraph Trigraph::from_graph(const Graph& g) {
  Trigraph t;
  t.n_ = g.order();
  t.live_count_ = g.order();
  t.live_.assign(static_cast<std::size_t>(t.n_), 1);
  t.color_.assign(static_cast<std::size_t>(t.n_) * static_cast<std::size_t>(t.n_), EdgeColor::none);
  t.red_degree_.assign(static_cast<std::size_t>(t.n_), 0);
  for (auto [u, v] : g.edges()) t.color_[t.index(u, v)] = t.color_[t.index(v, u)] = EdgeColor::black;
  return t;
}

int Trigraph::max_red_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v)
    if (live(v)) best = std::max(best, red_degree(v));
  return best;
}

std::size_t Trigraph::black_edge_count() const {
  std::size_t count = 0;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (color(u, v) == EdgeColor::black) ++count;
  return count;
}

std::size_t Trigraph::red_edge_count() const {
  std::size_t count = 0;
  for (Vertex v = 0; v < n_; ++v) count += static_cast<std::size_t>(red_degree(v));
  return count / 2;
}

void Trigraph::set_color(Vertex u, Vertex v, EdgeColor c) {
  const EdgeColor old = color_[index(u, v)];
  if (old == c) return;
  if (old == EdgeColor::red) {
    --red_degree_[static_cast<std::size_t>(u)];
    --red_degree_[static_cast<std::size_t>(v)];
  }
  if (c == EdgeColor::red) {
    ++red_degree_[static_cast<std::size_t>(u)];
    ++red_degree_[static_cast<std::size_t>(v)];
  }
  color_[index(u, v)] = color_[index(v, u)] = c;
}

void Trigraph::merge(Vertex child, Vertex parent) {
  if (child < 0 || parent < 0 || child >= n_ || parent >= n_) throw ContractError("contract: vertex out of range");
  if (child == parent) throw ContractError("contract: vertices must be distinct");
  if (!live(child) || !live(parent)) throw ContractError("contract: vertex is not live");
  for (Vertex x = 0; x < n_; ++x) {
    if (!live(x) || x == child || x == parent) continue;
    const EdgeColor a = color(child, x), b = color(parent, x);
    EdgeColor merged = EdgeColor::none;
    if (a == EdgeColor::black && b == EdgeColor::black) merged = EdgeColor::black;
    else if (a != EdgeColor::none || b != EdgeColor::none) merged = EdgeColor::red;
    set_color(parent, x, merged);
    set_color(child, x, EdgeColor::none);
  }
  set_color(child, parent, EdgeColor::none);
  live_[static_cast<std::size_t>(child)] = 0;
  --live_count_;
}

Trigraph Trigraph::contract(Vertex child, Vertex parent) const {
  Trigraph next = *this;
  next.merge(child, parent);
  return next;
}

std::vector<int> red_degree_profile(const Graph& g, const ContractionSequence& seq) {
  const int n = g.order();
  const std::size_t expected = n > 0 ? static_cast<std::size_t>(n - 1) : 0;
  if (seq.steps.size() != expected)
    throw CertificateError("sequence has " + std::to_string(seq.steps.size()) + " steps, expected " +
                           std::to_string(expected));
  Trigraph t = Trigraph::from_graph(g);
  std::vector<int> profile;
  profile.reserve(seq.steps.size());
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const auto [child, parent] = seq.steps[i];
    const auto step = static_cast<std::ptrdiff_t>(i);
    if (child < 0 || child >= n || parent < 0 || parent >= n) throw CertificateError("vertex out of range", step);
    if (child == parent) throw CertificateError("child equals parent", step);
    if (!t.live(child)) throw CertificateError("child " + std::to_string(child) + " already contracted", step);
    if (!t.live(parent)) throw CertificateError("parent " + std::to_string(parent) + " already contracted", step);
    t.merge(child, parent);
    profile.push_back(t.max_red_degree());
  }
  return profile;
}

int verify_sequence(const Graph& g, const ContractionSequence& seq) {
  const auto profile = red_degree_profile(g, seq);
  return profile.empty() ? 0 : *std::max_element(profile.begin(), profile.end());
}

}  // namespace tww
