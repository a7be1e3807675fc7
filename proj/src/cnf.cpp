#include "tww/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "tww/error.hpp"

namespace tww {

void CnfFormula::reserve_vars(int n) { var_count_ = std::max(var_count_, n); }

void CnfFormula::add_clause(std::span<const Literal> clause) {
  if (clause.empty()) throw ContractError("add_clause: empty clause");
  scratch_.assign(clause.begin(), clause.end());
  for (Literal l : scratch_) {
    if (l == 0) throw ContractError("add_clause: zero literal");
    if (std::abs(l) > var_count_) throw ContractError("add_clause: literal " + std::to_string(l) + " exceeds variable count");
  }
  std::sort(scratch_.begin(), scratch_.end(), [](Literal a, Literal b) {
    return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
  });
  std::size_t j = 0;
  for (std::size_t i = 0; i < scratch_.size(); ++i) {
    if (j > 0 && scratch_[j - 1] == scratch_[i]) continue;
    if (j > 0 && scratch_[j - 1] == -scratch_[i]) return;
    scratch_[j++] = scratch_[i];
  }
  scratch_.resize(j);
  // Keep the caller's literal order for readability of the emitted file.
  for (Literal l : clause)
    if (std::find(lits_.begin() + static_cast<std::ptrdiff_t>(offsets_.back()), lits_.end(), l) == lits_.end()) lits_.push_back(l);
  offsets_.push_back(lits_.size());
}

bool CnfFormula::satisfied_by(const std::vector<bool>& model) const {
  for (std::size_t c = 0; c < clause_count(); ++c) {
    bool sat = false;
    for (Literal l : clause(c)) {
      const auto v = static_cast<std::size_t>(std::abs(l));
      const bool value = v < model.size() && model[v];
      if (value == (l > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

int VariableMap::add(const std::string& family, std::vector<int> indices) {
  Key key{family, std::move(indices)};
  const int id = size() + 1;
  if (!ids_.emplace(key, id).second) throw ContractError("VariableMap: duplicate variable " + family);
  keys_.push_back(std::move(key));
  return id;
}

int VariableMap::find(const std::string& family, const std::vector<int>& indices) const {
  const auto it = ids_.find(Key{family, indices});
  return it == ids_.end() ? 0 : it->second;
}

int VariableMap::at(const std::string& family, const std::vector<int>& indices) const {
  const int id = find(family, indices);
  if (id == 0) throw ContractError("VariableMap: unknown variable " + family);
  return id;
}

std::map<std::string, int> VariableMap::family_counts() const {
  std::map<std::string, int> out;
  for (const auto& k : keys_) ++out[k.family];
  return out;
}

void VariableMap::write(std::ostream& out) const {
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    out << keys_[i].family;
    for (int x : keys_[i].indices) out << ' ' << x;
    out << ' ' << i + 1 << '\n';
  }
}

namespace {

/// Returns the unary counter literals of the subtree over lits[lo, hi):
/// out[c - 1] is true whenever at least c inputs are true, for c <= cap.
std::vector<Literal> totalize(CnfFormula& f, VariableMap& vars, std::span<const Literal> lits, std::size_t lo, std::size_t hi,
                              int cap, int tag, int& node) {
  if (hi - lo == 1) return {lits[lo]};
  const std::size_t mid = lo + (hi - lo) / 2;
  const auto left = totalize(f, vars, lits, lo, mid, cap, tag, node);
  const auto right = totalize(f, vars, lits, mid, hi, cap, tag, node);
  const int id = node++;
  const int width = std::min<int>(static_cast<int>(hi - lo), cap);
  std::vector<Literal> out;
  for (int c = 1; c <= width; ++c) out.push_back(vars.add("tot", {tag, id, c}));
  f.reserve_vars(vars.size());
  const int la = static_cast<int>(left.size()), lb = static_cast<int>(right.size());
  for (int i = 0; i <= la; ++i) {
    for (int j = 0; j <= lb; ++j) {
      const int s = i + j;
      if (s == 0 || s > width) continue;
      std::vector<Literal> clause;
      if (i > 0) clause.push_back(-left[static_cast<std::size_t>(i - 1)]);
      if (j > 0) clause.push_back(-right[static_cast<std::size_t>(j - 1)]);
      clause.push_back(out[static_cast<std::size_t>(s - 1)]);
      f.add_clause(clause);
    }
  }
  return out;
}

}  // namespace

void at_most(CnfFormula& f, VariableMap& vars, std::span<const Literal> lits, int d, int tag) {
  if (d < 0) throw ContractError("at_most: negative bound");
  if (static_cast<std::size_t>(d) >= lits.size()) return;
  if (d == 0) {
    for (Literal l : lits) f.add_clause({-l});
    return;
  }
  int node = 0;
  const auto root = totalize(f, vars, lits, 0, lits.size(), d + 1, tag, node);
  f.add_clause({-root[static_cast<std::size_t>(d)]});
}

void emit_dimacs(std::ostream& out, const CnfFormula& f) {
  std::string buf = "p cnf " + std::to_string(f.var_count()) + ' ' + std::to_string(f.clause_count()) + '\n';
  for (std::size_t c = 0; c < f.clause_count(); ++c) {
    for (Literal l : f.clause(c)) {
      buf += std::to_string(l);
      buf += ' ';
    }
    buf += "0\n";
    if (buf.size() > (1u << 16)) {
      out << buf;
      buf.clear();
    }
  }
  out << buf;
  if (!out) throw std::runtime_error("emit_dimacs: write failed");
}

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  long long declared = 0;
  std::vector<Literal> cur;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream s(line);
    std::string tok;
    if (!(s >> tok) || tok == "c") continue;
    if (tok == "p") {
      std::string fmt;
      long long nv = -1;
      if (header || !(s >> fmt >> nv >> declared) || fmt != "cnf" || nv < 0 || declared < 0)
        throw ParseError("malformed 'p cnf' header", lineno);
      f.reserve_vars(static_cast<int>(nv));
      header = true;
      continue;
    }
    if (!header) throw ParseError("clause before 'p cnf' header", lineno);
    do {
      char* end = nullptr;
      const long v = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') throw ParseError("bad literal '" + tok + "'", lineno);
      if (v == 0) {
        try {
          f.add_clause(cur);
        } catch (const ContractError& e) {
          throw ParseError(e.what(), lineno);
        }
        cur.clear();
      } else {
        cur.push_back(static_cast<Literal>(v));
      }
    } while (s >> tok);
  }
  if (!header) throw ParseError("missing 'p cnf' header", lineno);
  if (!cur.empty()) throw ParseError("last clause not terminated by 0", lineno);
  return f;
}

}  // namespace tww
