#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tww/cnf.hpp"

namespace tww {

enum class Verdict { sat, unsat, timeout, error };

const char* to_string(Verdict v);

struct SolveOutcome {
  Verdict verdict = Verdict::error;
  std::vector<bool> model;  ///< indexed by variable id, entry 0 unused; empty unless SAT
  double wall_time = 0.0;   ///< seconds
  std::string solver_id;    ///< executable that ran
  std::string message;      ///< diagnostics for ERROR
};

struct SolverConfig {
  /// Executable to run. When empty: $TWW_SAT_SOLVER, then cadical or kissat on
  /// PATH, then the bundled tww-sat next to the running program or on PATH.
  std::string executable;
  std::vector<std::string> extra_args;
  double timeout_seconds = 300.0;
  bool keep_files = false;
  std::string work_dir;  ///< temporary files go here; system temp dir when empty
};

/// Executable solve() would run, or an empty string if none is found.
std::string resolve_solver(const SolverConfig& cfg);

/// Writes `f` to a temporary DIMACS file, runs the solver on it with a
/// wall-clock limit and parses the SAT-competition output. Never throws for
/// solver failures; those become TIMEOUT or ERROR outcomes.
SolveOutcome solve(const CnfFormula& f, const SolverConfig& cfg);

/// Parses `s` and `v` lines. `exit_code` 10/20 must agree with the `s` line
/// when given (pass -1 to skip the check).
SolveOutcome parse_solver_output(std::istream& in, int var_count, int exit_code = -1);

}  // namespace tww
