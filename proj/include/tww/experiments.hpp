#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tww/graph.hpp"
#include "tww/search.hpp"

namespace tww {

/// Seed of trial `trial` at (n, p_index) derived from `base`.
std::uint64_t trial_seed(std::uint64_t base, int n, int p_index, int trial);

struct RandomExperimentConfig {
  std::vector<int> orders{10, 15};
  std::vector<double> probabilities{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  int trials = 20;
  std::uint64_t seed = 1;
  SearchOptions search;
};

struct RandomRow {
  int n = 0;
  double p = 0;
  double mean_tww = 0;
  int trials = 0;   ///< graphs whose width was determined exactly
  int unknown = 0;  ///< graphs left with a bracket only
};

/// Mean twin-width of G(n, p) over the configured orders, probabilities and trials.
std::vector<RandomRow> random_experiment(const RandomExperimentConfig& cfg);

struct TableRow {
  std::string name;
  int vertices = 0;
  std::size_t edges = 0;
  int lb1 = 0;
  int tww = 0;
  int lower = 0;
  SearchStatus status = SearchStatus::exact;
  int ub_greedy = 0;
  int vars = 0;           ///< size of F(P, tww(P)) for the largest prime member P
  std::size_t clauses = 0;
  double seconds = 0;
};

TableRow table_row(const std::string& name, const Graph& g, const SearchOptions& opts);

void write_random_csv(std::ostream& out, const std::vector<RandomRow>& rows);
void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows);
void write_numbers_csv(std::ostream& out, const NumbersReport& report);

}  // namespace tww
