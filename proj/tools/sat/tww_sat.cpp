// Small CDCL SAT solver speaking the SAT-competition protocol.
//
//   tww-sat [options] [file.cnf]
//
// Reads DIMACS CNF from the file (or stdin), prints `s SATISFIABLE` with `v`
// lines, `s UNSATISFIABLE` or `s UNKNOWN`, and exits 10, 20 or 0 respectively.
// Two-watched-literal propagation with blockers, VSIDS, first-UIP learning with
// recursive minimization, phase saving, LBD-driven restarts and clause database
// reduction.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using Lit = std::uint32_t;  // 2 * var + negated
using CRef = std::uint32_t;
constexpr CRef kNoReason = std::numeric_limits<CRef>::max();
constexpr std::int8_t kTrue = 1, kFalse = -1, kUndef = 0;

inline Lit make_lit(int v, bool neg) { return static_cast<Lit>(2 * v + (neg ? 1 : 0)); }
inline int var_of(Lit l) { return static_cast<int>(l >> 1); }

struct Watcher {
  CRef cref;
  Lit blocker;
};

// Clause layout in the arena: [size][flags: learnt | removed<<1 | lbd<<2][activity][lits...]
class Arena {
public:
  CRef alloc(const std::vector<Lit>& lits, bool learnt, std::uint32_t lbd) {
    const auto c = static_cast<CRef>(mem_.size());
    mem_.push_back(static_cast<std::uint32_t>(lits.size()));
    mem_.push_back((learnt ? 1u : 0u) | (lbd << 2));
    mem_.push_back(0);
    mem_.insert(mem_.end(), lits.begin(), lits.end());
    return c;
  }
  std::uint32_t size(CRef c) const { return mem_[c]; }
  Lit* lits(CRef c) { return &mem_[c + 3]; }
  bool learnt(CRef c) const { return (mem_[c + 1] & 1u) != 0; }
  bool removed(CRef c) const { return (mem_[c + 1] & 2u) != 0; }
  void mark_removed(CRef c) {
    mem_[c + 1] |= 2u;
    wasted_ += mem_[c] + 3;
  }
  std::uint32_t lbd(CRef c) const { return mem_[c + 1] >> 2; }
  void set_lbd(CRef c, std::uint32_t lbd) { mem_[c + 1] = (mem_[c + 1] & 3u) | (lbd << 2); }
  float activity(CRef c) const {
    float f;
    std::memcpy(&f, &mem_[c + 2], sizeof f);
    return f;
  }
  void set_activity(CRef c, float f) { std::memcpy(&mem_[c + 2], &f, sizeof f); }
  std::size_t total() const { return mem_.size(); }
  std::size_t wasted() const { return wasted_; }

  // Copies live clause `c` into `to`, returning its new reference.
  CRef move_to(CRef c, Arena& to) const {
    const auto n = static_cast<CRef>(to.mem_.size());
    to.mem_.insert(to.mem_.end(), mem_.begin() + c, mem_.begin() + c + 3 + mem_[c]);
    return n;
  }

private:
  std::vector<std::uint32_t> mem_;
  std::size_t wasted_ = 0;
};

class VarHeap {
public:
  explicit VarHeap(const std::vector<double>& act) : act_(act) {}
  void grow(int n) { index_.assign(static_cast<std::size_t>(n), -1); }
  bool contains(int v) const { return index_[static_cast<std::size_t>(v)] >= 0; }
  bool empty() const { return heap_.empty(); }
  void insert(int v) {
    if (contains(v)) return;
    index_[static_cast<std::size_t>(v)] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    up(heap_.size() - 1);
  }
  void increased(int v) {
    if (contains(v)) up(static_cast<std::size_t>(index_[static_cast<std::size_t>(v)]));
  }
  int pop() {
    const int top = heap_.front();
    heap_.front() = heap_.back();
    index_[static_cast<std::size_t>(heap_.front())] = 0;
    heap_.pop_back();
    index_[static_cast<std::size_t>(top)] = -1;
    if (!heap_.empty()) down(0);
    return top;
  }

private:
  bool better(int a, int b) const { return act_[static_cast<std::size_t>(a)] > act_[static_cast<std::size_t>(b)]; }
  void up(std::size_t i) {
    const int v = heap_[i];
    while (i > 0) {
      const std::size_t parent = (i - 1) / 2;
      if (!better(v, heap_[parent])) break;
      heap_[i] = heap_[parent];
      index_[static_cast<std::size_t>(heap_[i])] = static_cast<int>(i);
      i = parent;
    }
    heap_[i] = v;
    index_[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  void down(std::size_t i) {
    const int v = heap_[i];
    for (;;) {
      std::size_t child = 2 * i + 1;
      if (child >= heap_.size()) break;
      if (child + 1 < heap_.size() && better(heap_[child + 1], heap_[child])) ++child;
      if (!better(heap_[child], v)) break;
      heap_[i] = heap_[child];
      index_[static_cast<std::size_t>(heap_[i])] = static_cast<int>(i);
      i = child;
    }
    heap_[i] = v;
    index_[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }

  const std::vector<double>& act_;
  std::vector<int> heap_;
  std::vector<int> index_;
};

struct Ema {
  double value = 0, alpha;
  explicit Ema(double a) : alpha(a) {}
  void update(double x) { value += alpha * (x - value); }
};

enum class Result { sat, unsat, unknown };

class Solver {
public:
  Solver() : heap_(activity_) {}

  void reserve(int nvars) {
    nvars_ = nvars;
    const auto n = static_cast<std::size_t>(nvars);
    vals_.assign(2 * n, kUndef);
    level_.assign(n, 0);
    reason_.assign(n, kNoReason);
    activity_.assign(n, 0.0);
    phase_.assign(n, 1);
    seen_.assign(n, 0);
    watches_.assign(2 * n, {});
    level_stamp_.assign(n + 1, 0);
    heap_.grow(nvars);
    for (int v = 0; v < nvars; ++v) heap_.insert(v);
  }

  // Returns false if the formula is already unsatisfiable.
  bool add_clause(std::vector<Lit> lits) {
    if (!ok_) return false;
    std::sort(lits.begin(), lits.end());
    std::vector<Lit> out;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (i + 1 < lits.size() && lits[i + 1] == (lits[i] ^ 1u)) return true;  // tautology
      if (!out.empty() && out.back() == lits[i]) continue;
      if (value(lits[i]) == kTrue) return true;
      if (value(lits[i]) == kFalse) continue;
      out.push_back(lits[i]);
    }
    if (out.empty()) return ok_ = false;
    if (out.size() == 1) {
      enqueue(out[0], kNoReason);
      if (propagate() != kNoReason) ok_ = false;
      return ok_;
    }
    const CRef c = arena_.alloc(out, false, 0);
    clauses_.push_back(c);
    attach(c);
    return true;
  }

  Result solve() {
    if (!ok_) return Result::unsat;
    for (;;) {
      const CRef confl = propagate();
      if (confl != kNoReason) {
        ++conflicts_;
        ++conflicts_since_restart_;
        if (decision_level() == 0) return Result::unsat;
        int bt = 0;
        std::uint32_t lbd = 0;
        analyze(confl, bt, lbd);
        lbd_fast_.update(lbd);
        lbd_slow_.update(lbd);
        trail_ema_.update(static_cast<double>(trail_.size()));
        // Postpone a restart if the assignment is unusually large (likely near a model).
        if (conflicts_ > 10000 && conflicts_since_restart_ >= 50 &&
            static_cast<double>(trail_.size()) > 1.4 * trail_ema_.value)
          conflicts_since_restart_ = 0;
        cancel_until(bt);
        if (learnt_.size() == 1) {
          enqueue(learnt_[0], kNoReason);
        } else {
          const CRef c = arena_.alloc(learnt_, true, lbd);
          learnts_.push_back(c);
          attach(c);
          bump_clause(c);
          enqueue(learnt_[0], c);
        }
        var_inc_ /= var_decay_;
        cla_inc_ /= 0.999;
        if (conflicts_ % 5000 == 0 && var_decay_ < 0.95) var_decay_ += 0.01;
      } else {
        if (conflicts_since_restart_ >= 50 && lbd_fast_.value > 1.25 * lbd_slow_.value) {
          conflicts_since_restart_ = 0;
          ++restarts_;
          cancel_until(0);
        }
        if (conflicts_ >= next_reduce_) {
          next_reduce_ = conflicts_ + 2000 + 300 * ++reductions_;
          reduce_db();
        }
        const int v = pick_branch();
        if (v < 0) return Result::sat;
        trail_lim_.push_back(trail_.size());
        ++decisions_;
        enqueue(make_lit(v, phase_[static_cast<std::size_t>(v)] != 0), kNoReason);
      }
    }
  }

  bool model_value(int v) const { return vals_[2 * static_cast<std::size_t>(v)] == kTrue; }
  std::uint64_t conflicts() const { return conflicts_; }
  std::uint64_t decisions() const { return decisions_; }
  std::uint64_t propagations() const { return propagations_; }
  std::uint64_t restarts() const { return restarts_; }

private:
  std::int8_t value(Lit l) const { return vals_[l]; }
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  void enqueue(Lit l, CRef reason) {
    const auto v = static_cast<std::size_t>(var_of(l));
    vals_[l] = kTrue;
    vals_[l ^ 1u] = kFalse;
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(l);
  }

  void attach(CRef c) {
    Lit* lits = arena_.lits(c);
    watches_[lits[0] ^ 1u].push_back({c, lits[1]});
    watches_[lits[1] ^ 1u].push_back({c, lits[0]});
  }

  CRef propagate() {
    CRef confl = kNoReason;
    while (qhead_ < trail_.size()) {
      const Lit p = trail_[qhead_++];
      const Lit false_lit = p ^ 1u;
      auto& ws = watches_[p];
      ++propagations_;
      std::size_t i = 0, j = 0;
      const std::size_t end = ws.size();
      while (i < end) {
        const Watcher w = ws[i];
        if (value(w.blocker) == kTrue) {
          ws[j++] = ws[i++];
          continue;
        }
        const CRef c = w.cref;
        Lit* lits = arena_.lits(c);
        if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
        ++i;
        const Lit first = lits[0];
        const Watcher nw{c, first};
        if (first != w.blocker && value(first) == kTrue) {
          ws[j++] = nw;
          continue;
        }
        const std::uint32_t size = arena_.size(c);
        bool moved = false;
        for (std::uint32_t k = 2; k < size; ++k) {
          if (value(lits[k]) != kFalse) {
            lits[1] = lits[k];
            lits[k] = false_lit;
            watches_[lits[1] ^ 1u].push_back(nw);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = nw;
        if (value(first) == kFalse) {
          confl = c;
          qhead_ = trail_.size();
          while (i < end) ws[j++] = ws[i++];
        } else {
          enqueue(first, c);
        }
      }
      ws.resize(j);
      if (confl != kNoReason) break;
    }
    return confl;
  }

  std::uint32_t abstract_level(int v) const { return 1u << (level_[static_cast<std::size_t>(v)] & 31); }

  void bump_var(int v) {
    auto& a = activity_[static_cast<std::size_t>(v)];
    if ((a += var_inc_) > 1e100) {
      for (auto& x : activity_) x *= 1e-100;
      var_inc_ *= 1e-100;
    }
    heap_.increased(v);
  }

  void bump_clause(CRef c) {
    const float a = arena_.activity(c) + static_cast<float>(cla_inc_);
    arena_.set_activity(c, a);
    if (a > 1e20f) {
      for (CRef l : learnts_) arena_.set_activity(l, arena_.activity(l) * 1e-20f);
      cla_inc_ *= 1e-20;
    }
  }

  std::uint32_t compute_lbd(const Lit* lits, std::uint32_t n) {
    ++stamp_;
    std::uint32_t count = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      const auto lv = static_cast<std::size_t>(level_[static_cast<std::size_t>(var_of(lits[i]))]);
      if (level_stamp_[lv] != stamp_) {
        level_stamp_[lv] = stamp_;
        ++count;
      }
    }
    return count;
  }

  void analyze(CRef confl, int& out_bt, std::uint32_t& out_lbd) {
    learnt_.clear();
    learnt_.push_back(0);
    int path = 0;
    Lit p = 0;
    bool have_p = false;
    std::size_t index = trail_.size();
    do {
      if (arena_.learnt(confl)) {
        bump_clause(confl);
        const std::uint32_t lbd = arena_.lbd(confl);
        if (lbd > 2) {
          const std::uint32_t now = compute_lbd(arena_.lits(confl), arena_.size(confl));
          if (now + 1 < lbd) arena_.set_lbd(confl, now);
        }
      }
      Lit* lits = arena_.lits(confl);
      const std::uint32_t size = arena_.size(confl);
      for (std::uint32_t k = have_p ? 1 : 0; k < size; ++k) {
        const Lit q = lits[k];
        const int v = var_of(q);
        if (!seen_[static_cast<std::size_t>(v)] && level_[static_cast<std::size_t>(v)] > 0) {
          bump_var(v);
          seen_[static_cast<std::size_t>(v)] = 1;
          if (level_[static_cast<std::size_t>(v)] >= decision_level()) ++path;
          else learnt_.push_back(q);
        }
      }
      while (!seen_[static_cast<std::size_t>(var_of(trail_[--index]))]) {
      }
      p = trail_[index];
      have_p = true;
      confl = reason_[static_cast<std::size_t>(var_of(p))];
      seen_[static_cast<std::size_t>(var_of(p))] = 0;
      --path;
    } while (path > 0);
    learnt_[0] = p ^ 1u;

    to_clear_.assign(learnt_.begin(), learnt_.end());
    std::uint32_t levels = 0;
    for (std::size_t k = 1; k < learnt_.size(); ++k) levels |= abstract_level(var_of(learnt_[k]));
    std::size_t j = 1;
    for (std::size_t k = 1; k < learnt_.size(); ++k) {
      const int v = var_of(learnt_[k]);
      if (reason_[static_cast<std::size_t>(v)] == kNoReason || !redundant(learnt_[k], levels)) learnt_[j++] = learnt_[k];
    }
    learnt_.resize(j);

    out_bt = 0;
    if (learnt_.size() > 1) {
      std::size_t max_i = 1;
      for (std::size_t k = 2; k < learnt_.size(); ++k)
        if (level_[static_cast<std::size_t>(var_of(learnt_[k]))] > level_[static_cast<std::size_t>(var_of(learnt_[max_i]))])
          max_i = k;
      std::swap(learnt_[1], learnt_[max_i]);
      out_bt = level_[static_cast<std::size_t>(var_of(learnt_[1]))];
    }
    out_lbd = compute_lbd(learnt_.data(), static_cast<std::uint32_t>(learnt_.size()));
    for (Lit l : to_clear_) seen_[static_cast<std::size_t>(var_of(l))] = 0;
  }

  bool redundant(Lit p, std::uint32_t levels) {
    stack_.clear();
    stack_.push_back(p);
    const std::size_t top = to_clear_.size();
    while (!stack_.empty()) {
      const CRef c = reason_[static_cast<std::size_t>(var_of(stack_.back()))];
      stack_.pop_back();
      Lit* lits = arena_.lits(c);
      const std::uint32_t size = arena_.size(c);
      for (std::uint32_t k = 1; k < size; ++k) {
        const Lit q = lits[k];
        const auto v = static_cast<std::size_t>(var_of(q));
        if (seen_[v] || level_[v] == 0) continue;
        if (reason_[v] != kNoReason && (abstract_level(var_of(q)) & levels) != 0) {
          seen_[v] = 1;
          stack_.push_back(q);
          to_clear_.push_back(q);
        } else {
          for (std::size_t t = top; t < to_clear_.size(); ++t) seen_[static_cast<std::size_t>(var_of(to_clear_[t]))] = 0;
          to_clear_.resize(top);
          return false;
        }
      }
    }
    return true;
  }

  void cancel_until(int lvl) {
    if (decision_level() <= lvl) return;
    const std::size_t lim = trail_lim_[static_cast<std::size_t>(lvl)];
    for (std::size_t k = trail_.size(); k-- > lim;) {
      const Lit l = trail_[k];
      const int v = var_of(l);
      vals_[l] = vals_[l ^ 1u] = kUndef;
      reason_[static_cast<std::size_t>(v)] = kNoReason;
      phase_[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(l & 1u);
      heap_.insert(v);
    }
    trail_.resize(lim);
    trail_lim_.resize(static_cast<std::size_t>(lvl));
    qhead_ = trail_.size();
  }

  int pick_branch() {
    while (!heap_.empty()) {
      const int v = heap_.pop();
      if (vals_[2 * static_cast<std::size_t>(v)] == kUndef) return v;
    }
    return -1;
  }

  bool locked(CRef c) {
    const Lit l = arena_.lits(c)[0];
    return value(l) == kTrue && reason_[static_cast<std::size_t>(var_of(l))] == c;
  }

  bool satisfied_at_root(CRef c) {
    Lit* lits = arena_.lits(c);
    for (std::uint32_t k = 0; k < arena_.size(c); ++k)
      if (value(lits[k]) == kTrue && level_[static_cast<std::size_t>(var_of(lits[k]))] == 0) return true;
    return false;
  }

  void reduce_db() {
    std::vector<CRef> candidates;
    std::vector<CRef> keep;
    for (CRef c : learnts_) {
      if (arena_.lbd(c) <= 2 || locked(c)) keep.push_back(c);
      else candidates.push_back(c);
    }
    std::sort(candidates.begin(), candidates.end(), [&](CRef a, CRef b) {
      if (arena_.lbd(a) != arena_.lbd(b)) return arena_.lbd(a) > arena_.lbd(b);
      return arena_.activity(a) < arena_.activity(b);
    });
    const std::size_t drop = candidates.size() / 2;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (k < drop) arena_.mark_removed(candidates[k]);
      else keep.push_back(candidates[k]);
    }
    learnts_ = std::move(keep);
    remove_root_satisfied();
    collect_garbage();
  }

  void remove_root_satisfied() {
    for (auto* list : {&clauses_, &learnts_}) {
      std::size_t j = 0;
      for (CRef c : *list) {
        if (!locked(c) && satisfied_at_root(c)) arena_.mark_removed(c);
        else (*list)[j++] = c;
      }
      list->resize(j);
    }
  }

  void collect_garbage() {
    Arena fresh;
    std::vector<std::pair<CRef, CRef>> moves;
    for (auto* list : {&clauses_, &learnts_})
      for (CRef& c : *list) {
        const CRef n = arena_.move_to(c, fresh);
        moves.emplace_back(c, n);
        c = n;
      }
    std::sort(moves.begin(), moves.end());
    for (const Lit l : trail_) {
      auto& r = reason_[static_cast<std::size_t>(var_of(l))];
      if (r == kNoReason) continue;
      if (level_[static_cast<std::size_t>(var_of(l))] == 0) {
        r = kNoReason;
        continue;
      }
      const auto it = std::lower_bound(moves.begin(), moves.end(), std::make_pair(r, CRef{0}));
      r = it->second;
    }
    arena_ = std::move(fresh);
    for (auto& ws : watches_) ws.clear();
    for (auto* list : {&clauses_, &learnts_})
      for (CRef c : *list) attach(c);
  }

  int nvars_ = 0;
  bool ok_ = true;
  Arena arena_;
  std::vector<CRef> clauses_, learnts_;
  std::vector<std::vector<Watcher>> watches_;
  std::vector<std::int8_t> vals_;
  std::vector<int> level_;
  std::vector<CRef> reason_;
  std::vector<double> activity_;
  std::vector<std::uint8_t> phase_;
  std::vector<std::uint8_t> seen_;
  std::vector<std::uint64_t> level_stamp_;
  std::uint64_t stamp_ = 0;
  VarHeap heap_;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<Lit> learnt_, to_clear_, stack_;
  double var_inc_ = 1.0, var_decay_ = 0.8, cla_inc_ = 1.0;
  Ema lbd_fast_{1.0 / 32}, lbd_slow_{1.0 / 4096}, trail_ema_{1.0 / 4096};
  std::uint64_t conflicts_ = 0, conflicts_since_restart_ = 0, decisions_ = 0, propagations_ = 0, restarts_ = 0;
  std::uint64_t next_reduce_ = 2000, reductions_ = 0;
};

struct Dimacs {
  int nvars = 0;
  std::vector<std::vector<Lit>> clauses;
};

Dimacs read_dimacs(std::istream& in) {
  Dimacs d;
  std::string line;
  bool header = false;
  std::vector<Lit> cur;
  while (std::getline(in, line)) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size() || line[i] == 'c' || line[i] == '%') continue;
    if (line[i] == 'p') {
      std::istringstream hs(line.substr(i + 1));
      std::string fmt;
      long long nv = 0, nc = 0;
      if (!(hs >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0) throw std::runtime_error("bad header: " + line);
      d.nvars = static_cast<int>(nv);
      header = true;
      continue;
    }
    if (!header) throw std::runtime_error("clause before header");
    const char* s = line.c_str() + i;
    char* endp = nullptr;
    for (;;) {
      while (*s == ' ' || *s == '\t' || *s == '\r') ++s;
      if (*s == '\0') break;
      const long v = std::strtol(s, &endp, 10);
      if (endp == s) throw std::runtime_error("bad token in: " + line);
      s = endp;
      if (v == 0) {
        d.clauses.push_back(cur);
        cur.clear();
        continue;
      }
      const long a = v < 0 ? -v : v;
      if (a > d.nvars) throw std::runtime_error("literal exceeds declared variable count");
      cur.push_back(make_lit(static_cast<int>(a - 1), v < 0));
    }
  }
  if (!header) throw std::runtime_error("missing 'p cnf' header");
  if (!cur.empty()) d.clauses.push_back(cur);
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  std::string path;
  bool quiet = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "-q" || a == "--quiet") quiet = true;
    else if (a == "-h" || a == "--help") {
      std::cout << "usage: tww-sat [-q] [file.cnf]\n";
      return 0;
    } else path = a;
  }
  const auto t0 = std::chrono::steady_clock::now();
  Dimacs d;
  try {
    if (path.empty()) d = read_dimacs(std::cin);
    else {
      std::ifstream in(path);
      if (!in) {
        std::cerr << "tww-sat: cannot open " << path << '\n';
        return 1;
      }
      d = read_dimacs(in);
    }
  } catch (const std::exception& e) {
    std::cerr << "tww-sat: " << e.what() << '\n';
    return 1;
  }
  Solver s;
  s.reserve(d.nvars);
  for (auto& c : d.clauses) s.add_clause(std::move(c));
  d.clauses.clear();
  const Result r = s.solve();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!quiet)
    std::printf("c conflicts %llu decisions %llu propagations %llu restarts %llu seconds %.2f\n",
                static_cast<unsigned long long>(s.conflicts()), static_cast<unsigned long long>(s.decisions()),
                static_cast<unsigned long long>(s.propagations()), static_cast<unsigned long long>(s.restarts()), secs);
  if (r == Result::unsat) {
    std::printf("s UNSATISFIABLE\n");
    return 20;
  }
  if (r == Result::unknown) {
    std::printf("s UNKNOWN\n");
    return 0;
  }
  std::printf("s SATISFIABLE\n");
  std::string line = "v";
  for (int v = 0; v < d.nvars; ++v) {
    const std::string tok = " " + std::string(s.model_value(v) ? "" : "-") + std::to_string(v + 1);
    if (line.size() + tok.size() > 78) {
      std::printf("%s\n", line.c_str());
      line = "v";
    }
    line += tok;
  }
  std::printf("%s 0\n", line.c_str());
  return 10;
}
