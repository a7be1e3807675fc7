#pragma once

#include <initializer_list>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace tww {

using Literal = int;  ///< nonzero; negative means negated

/// Clauses over variables 1..var_count. Literals within a clause are distinct.
class CnfFormula {
public:
  int var_count() const noexcept { return var_count_; }
  std::size_t clause_count() const noexcept { return offsets_.size() - 1; }
  std::span<const Literal> clause(std::size_t i) const {
    return {lits_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

  /// Raises the variable count to at least `n`.
  void reserve_vars(int n);

  /// Adds a clause after removing repeated literals. Tautologies are dropped.
  /// Throws ContractError on an empty clause, a zero literal or an unknown variable.
  void add_clause(std::span<const Literal> clause);
  void add_clause(std::initializer_list<Literal> clause) { add_clause(std::span<const Literal>(clause.begin(), clause.size())); }

  /// True iff `model` (indexed by variable, entry 0 unused) satisfies every clause.
  bool satisfied_by(const std::vector<bool>& model) const;

private:
  int var_count_ = 0;
  std::vector<Literal> lits_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Literal> scratch_;
};

/// Bijection between named variables, a family plus an index tuple, and the
/// contiguous ids 1..size() handed out in registration order.
class VariableMap {
public:
  struct Key {
    std::string family;
    std::vector<int> indices;
    auto operator<=>(const Key&) const = default;
  };

  /// Registers a new variable; throws ContractError if the key already exists.
  int add(const std::string& family, std::vector<int> indices);
  /// Id of a registered key, or 0.
  int find(const std::string& family, const std::vector<int>& indices) const;
  /// Id of a registered key; throws ContractError if absent.
  int at(const std::string& family, const std::vector<int>& indices) const;
  const Key& key(int id) const { return keys_.at(static_cast<std::size_t>(id - 1)); }
  int size() const noexcept { return static_cast<int>(keys_.size()); }
  /// Number of variables per family.
  std::map<std::string, int> family_counts() const;

  /// One line per variable: `<family> <indices...> <id>`.
  void write(std::ostream& out) const;

private:
  std::vector<Key> keys_;
  std::map<Key, int> ids_;
};

/// Totalizer encoding of "at most d of `lits` are true". Each tree node keeps
/// unary counters up to d + 1; auxiliary variables are registered in `vars` as
/// family "tot" with indices (tag, node, count). d >= |lits| adds nothing.
void at_most(CnfFormula& f, VariableMap& vars, std::span<const Literal> lits, int d, int tag);

/// `p cnf <vars> <clauses>` followed by one `0`-terminated clause per line.
void emit_dimacs(std::ostream& out, const CnfFormula& f);

/// Reads DIMACS CNF. Throws ParseError.
CnfFormula parse_dimacs(std::istream& in);

}  // namespace tww
