#include "tww/experiments.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>

#include "tww/bounds.hpp"
#include "tww/encodings.hpp"
#include "tww/generators.hpp"
#include "tww/modular.hpp"

namespace tww {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t base, int n, int p_index, int trial) {
  std::uint64_t h = splitmix64(base);
  h = splitmix64(h ^ static_cast<std::uint64_t>(n));
  h = splitmix64(h ^ static_cast<std::uint64_t>(p_index));
  return splitmix64(h ^ static_cast<std::uint64_t>(trial));
}

std::vector<RandomRow> random_experiment(const RandomExperimentConfig& cfg) {
  std::vector<RandomRow> rows;
  for (int n : cfg.orders) {
    for (std::size_t pi = 0; pi < cfg.probabilities.size(); ++pi) {
      RandomRow row;
      row.n = n;
      row.p = cfg.probabilities[pi];
      long long total = 0;
      for (int t = 0; t < cfg.trials; ++t) {
        const Graph g = erdos_renyi(n, row.p, trial_seed(cfg.seed, n, static_cast<int>(pi), t));
        const auto res = compute(g, cfg.search);
        if (res.status != SearchStatus::exact) {
          ++row.unknown;
          continue;
        }
        total += res.width;
        ++row.trials;
      }
      row.mean_tww = row.trials ? static_cast<double>(total) / row.trials : 0.0;
      rows.push_back(row);
    }
  }
  return rows;
}

TableRow table_row(const std::string& name, const Graph& g, const SearchOptions& opts) {
  TableRow row;
  row.name = name;
  row.vertices = g.order();
  row.edges = g.size();
  row.lb1 = g.order() >= 2 ? lb1(g) : 0;
  row.ub_greedy = greedy_ub(g).ub;
  const auto start = std::chrono::steady_clock::now();
  const auto res = compute(g, opts);
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  row.tww = res.width;
  row.lower = res.lower;
  row.status = res.status;
  const auto members = prime_set(g);
  std::size_t largest = members.size();
  for (std::size_t i = 0; i < members.size(); ++i)
    if (largest == members.size() || members[i].graph.order() > members[largest].graph.order()) largest = i;
  if (largest < members.size()) {
    const auto inst = encode(members[largest].graph, res.members[largest].upper, opts.encoding);
    row.vars = inst.formula.var_count();
    row.clauses = inst.formula.clause_count();
  }
  return row;
}

void write_random_csv(std::ostream& out, const std::vector<RandomRow>& rows) {
  out << "n,p,mean_tww,trials\n";
  for (const auto& r : rows) out << r.n << ',' << fixed(r.p, 2) << ',' << fixed(r.mean_tww, 3) << ',' << r.trials << '\n';
}

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows) {
  out << "name,|V|,|E|,lb1,tww,ub_greedy,vars,clauses,seconds\n";
  for (const auto& r : rows) {
    out << r.name << ',' << r.vertices << ',' << r.edges << ',' << r.lb1 << ',';
    if (r.status == SearchStatus::exact) out << r.tww;
    else out << "UNKNOWN[" << r.lower << ';' << r.tww << ']';
    out << ',' << r.ub_greedy << ',' << r.vars << ',' << r.clauses << ',' << fixed(r.seconds, 2) << '\n';
  }
}

void write_numbers_csv(std::ostream& out, const NumbersReport& report) {
  out << "n,width,count,witness_graph6\n";
  for (const auto& [key, count] : report.counts)
    out << key.first << ',' << key.second << ',' << count << ',' << report.witness.at(key) << '\n';
}

}  // namespace tww
