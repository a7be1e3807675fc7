#include "tww/solver.hpp"

#include <fcntl.h>
#include <signal.h>
#include <sys/stat.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace tww {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::sat: return "SAT";
    case Verdict::unsat: return "UNSAT";
    case Verdict::timeout: return "TIMEOUT";
    case Verdict::error: return "ERROR";
  }
  return "ERROR";
}

namespace {

bool executable(const std::filesystem::path& p) { return ::access(p.c_str(), X_OK) == 0 && !std::filesystem::is_directory(p); }

std::string search_path(const std::string& name) {
  if (name.find('/') != std::string::npos) return executable(name) ? name : std::string();
  const char* path = std::getenv("PATH");
  if (!path) return {};
  std::stringstream ss(path);
  std::string dir;
  while (std::getline(ss, dir, ':')) {
    if (dir.empty()) continue;
    const auto candidate = std::filesystem::path(dir) / name;
    if (executable(candidate)) return candidate.string();
  }
  return {};
}

std::filesystem::path self_dir() {
  std::error_code ec;
  const auto exe = std::filesystem::read_symlink("/proc/self/exe", ec);
  return ec ? std::filesystem::path() : exe.parent_path();
}

std::atomic<unsigned> temp_counter{0};

std::filesystem::path temp_path(const SolverConfig& cfg, const char* suffix) {
  const std::filesystem::path dir = cfg.work_dir.empty() ? std::filesystem::temp_directory_path() : std::filesystem::path(cfg.work_dir);
  return dir / ("tww-" + std::to_string(::getpid()) + "-" + std::to_string(temp_counter++) + suffix);
}

}  // namespace

std::string resolve_solver(const SolverConfig& cfg) {
  if (!cfg.executable.empty()) return search_path(cfg.executable);
  if (const char* env = std::getenv("TWW_SAT_SOLVER"); env && *env) return search_path(env);
  for (const char* name : {"cadical", "kissat"})
    if (auto p = search_path(name); !p.empty()) return p;
  const auto dir = self_dir();
  for (const auto& rel : {std::filesystem::path("tww-sat"), std::filesystem::path("sat") / "tww-sat",
                          std::filesystem::path("..") / "tools" / "sat" / "tww-sat"}) {
    const auto candidate = dir / rel;
    if (!dir.empty() && executable(candidate)) return std::filesystem::weakly_canonical(candidate).string();
  }
  return search_path("tww-sat");
}

SolveOutcome parse_solver_output(std::istream& in, int var_count, int exit_code) {
  SolveOutcome out;
  std::string line;
  std::string status;
  std::vector<bool> model(static_cast<std::size_t>(var_count) + 1, false);
  bool terminated = false;
  while (std::getline(in, line)) {
    if (line.rfind("s ", 0) == 0) {
      status = line.substr(2);
      while (!status.empty() && (status.back() == '\r' || status.back() == ' ')) status.pop_back();
    } else if (line.rfind("v", 0) == 0 && (line.size() == 1 || line[1] == ' ' || line[1] == '\t')) {
      std::istringstream s(line.substr(1));
      long long lit;
      while (s >> lit) {
        if (lit == 0) {
          terminated = true;
          continue;
        }
        const long long v = lit < 0 ? -lit : lit;
        if (v > var_count) continue;
        model[static_cast<std::size_t>(v)] = lit > 0;
      }
    }
  }
  if (status == "SATISFIABLE") {
    out.verdict = Verdict::sat;
    if (!terminated) {
      out.verdict = Verdict::error;
      out.message = "model not terminated by 0";
      return out;
    }
    out.model = std::move(model);
  } else if (status == "UNSATISFIABLE") {
    out.verdict = Verdict::unsat;
  } else {
    out.verdict = Verdict::error;
    out.message = status.empty() ? "no status line in solver output" : "solver reported '" + status + "'";
    return out;
  }
  if (exit_code >= 0 && exit_code != (out.verdict == Verdict::sat ? 10 : 20)) {
    out.message = "exit code " + std::to_string(exit_code) + " disagrees with status line";
    out.verdict = Verdict::error;
    out.model.clear();
  }
  return out;
}

SolveOutcome solve(const CnfFormula& f, const SolverConfig& cfg) {
  SolveOutcome out;
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
  out.solver_id = resolve_solver(cfg);
  if (out.solver_id.empty()) {
    out.message = "no SAT solver found (set TWW_SAT_SOLVER)";
    return out;
  }
  const auto cnf_path = temp_path(cfg, ".cnf");
  const auto out_path = temp_path(cfg, ".out");
  struct Cleanup {
    const std::filesystem::path& a;
    const std::filesystem::path& b;
    bool keep;
    ~Cleanup() {
      if (keep) return;
      std::error_code ec;
      std::filesystem::remove(a, ec);
      std::filesystem::remove(b, ec);
    }
  } cleanup{cnf_path, out_path, cfg.keep_files};
  {
    std::ofstream cnf(cnf_path);
    if (!cnf) {
      out.message = "cannot write " + cnf_path.string();
      return out;
    }
    try {
      emit_dimacs(cnf, f);
    } catch (const std::exception& e) {
      out.message = e.what();
      return out;
    }
  }

  // Everything the child needs is prepared before fork.
  std::vector<std::string> args{out.solver_id};
  args.insert(args.end(), cfg.extra_args.begin(), cfg.extra_args.end());
  args.push_back(cnf_path.string());
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  argv.push_back(nullptr);
  const int out_fd = ::open(out_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0600);
  if (out_fd < 0) {
    out.message = "cannot create " + out_path.string();
    return out;
  }
  const pid_t pid = ::fork();
  if (pid < 0) {
    ::close(out_fd);
    out.message = "fork failed";
    return out;
  }
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(out_fd, STDOUT_FILENO);
    const int null_fd = ::open("/dev/null", O_RDWR);
    if (null_fd >= 0) {
      ::dup2(null_fd, STDIN_FILENO);
      ::dup2(null_fd, STDERR_FILENO);
    }
    ::execv(argv[0], argv.data());
    ::_exit(127);
  }
  ::close(out_fd);
  ::setpgid(pid, pid);

  int status = 0;
  bool timed_out = false;
  auto pause = std::chrono::microseconds(200);
  for (;;) {
    const pid_t r = ::waitpid(pid, &status, WNOHANG);
    if (r == pid) break;
    if (r < 0) {
      out.message = "waitpid failed";
      out.wall_time = elapsed();
      return out;
    }
    if (elapsed() > cfg.timeout_seconds) {
      ::kill(-pid, SIGKILL);
      ::kill(pid, SIGKILL);
      ::waitpid(pid, &status, 0);
      timed_out = true;
      break;
    }
    std::this_thread::sleep_for(pause);
    pause = std::min(pause * 2, std::chrono::microseconds(20000));
  }
  out.wall_time = elapsed();
  if (timed_out) {
    out.verdict = Verdict::timeout;
    out.message = "killed after " + std::to_string(cfg.timeout_seconds) + " s";
    return out;
  }
  if (!WIFEXITED(status)) {
    out.message = "solver terminated by signal";
    return out;
  }
  const int code = WEXITSTATUS(status);
  if (code == 127) {
    out.message = "cannot execute " + out.solver_id;
    return out;
  }
  std::ifstream result(out_path);
  auto parsed = parse_solver_output(result, f.var_count(), code == 10 || code == 20 ? code : -1);
  parsed.wall_time = out.wall_time;
  parsed.solver_id = out.solver_id;
  if (parsed.verdict == Verdict::error && code != 0 && code != 10 && code != 20)
    parsed.message += " (exit code " + std::to_string(code) + ")";
  return parsed;
}

}  // namespace tww
