#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
};

/// Runs the CLI with `args` through the shell; stdout is captured, stderr dropped.
Result tww(const std::string& args) {
  const char* exe = std::getenv("TWW_CLI");
  REQUIRE_MESSAGE(exe, "TWW_CLI must point at the tww executable");
  const std::string cmd = std::string(exe) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct Dir {
  fs::path path;
  Dir() : path(fs::temp_directory_path() / ("tww-cli-test-" + std::to_string(::getpid()))) { fs::create_directories(path); }
  ~Dir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name, const std::string& text = {}) const {
    const auto p = path / name;
    if (!text.empty()) std::ofstream(p) << text;
    return p.string();
  }
};

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* kFigure2Cert =
    "tww-cert 1\nn 8\nwidth 2\norder 5 3 4 2 7 6 0 1\n"
    "p 5 2\np 3 0\np 4 1\np 2 1\np 7 1\np 6 0\np 0 1\n";

}  // namespace

TEST_CASE("compute") {
  Dir dir;
  const auto cert = dir.file("w.cert");
  auto r = tww("compute --named wagner --cert " + cert);
  CHECK(r.code == 0);
  CHECK(r.out == "tww 2\n");
  r = tww("verify --named wagner --cert " + cert);
  CHECK(r.code == 0);
  CHECK(r.out == "width 2\n");

  CHECK(tww("compute --named paley9").out == "tww 4\n");

  const auto k1 = dir.file("k1.edge", "p edge 1 0\n");
  r = tww("compute " + k1);
  CHECK(r.code == 0);
  CHECK(r.out == "tww 0\n");

  const auto g6 = dir.file("c5.g6", "Dhc\n");
  CHECK(tww("compute " + g6).out == "tww 2\n");

  r = tww("compute --named wagner --breakdown --probes --mode abs");
  CHECK(r.code == 0);
  CHECK(r.out.find("member 0 n=8") != std::string::npos);
}

TEST_CASE("input errors") {
  CHECK(tww("compute --named nosuch").code == 2);
  CHECK(tww("compute /nonexistent/file").code == 2);
  CHECK(tww("compute").code == 2);
  CHECK(tww("compute x.edge --named wagner").code == 2);
  CHECK(tww("frobnicate").code == 2);
  CHECK(tww("compute --named wagner --timeout 0").code == 2);
  Dir dir;
  CHECK(tww("compute " + dir.file("bad.edge", "p edge 2 1\ne 1 3\n")).code == 2);
}

TEST_CASE("unknown results use their own exit code") {
  Dir dir;
  const auto sleeper = dir.file("sleeper", "#!/bin/sh\nsleep 30\n");
  fs::permissions(sleeper, fs::perms::owner_all);
  const auto r = tww("compute --named hoffman --timeout 0.2 --solver " + sleeper);
  CHECK(r.code == 3);
  CHECK(r.out.rfind("tww UNKNOWN [", 0) == 0);
}

TEST_CASE("verify") {
  Dir dir;
  const auto good = dir.file("good.cert", kFigure2Cert);
  auto r = tww("verify --named wagner --cert " + good);
  CHECK(r.code == 0);
  CHECK(r.out == "width 2\n");

  std::string tampered = kFigure2Cert;
  tampered.replace(tampered.find("p 2 1"), 5, "p 2 4");
  r = tww("verify --named wagner --cert " + dir.file("bad.cert", tampered));
  CHECK(r.code == 1);
  CHECK(r.out.find("step 3") != std::string::npos);

  std::string wrong_width = kFigure2Cert;
  wrong_width.replace(wrong_width.find("width 2"), 7, "width 1");
  r = tww("verify --named wagner --cert " + dir.file("w1.cert", wrong_width));
  CHECK(r.code == 1);
  CHECK(r.out.find("step 0") != std::string::npos);

  std::string reparent = kFigure2Cert;
  reparent.replace(reparent.find("p 5 2"), 5, "p 5 0");
  r = tww("verify --named wagner --cert " + dir.file("rp.cert", reparent));
  CHECK(r.code == 1);
  CHECK(r.out.find("step") != std::string::npos);

  const auto k5 = dir.file("k5.cert", "tww-cert 1\nn 5\nwidth 0\norder 3 1 4 0 2\np 3 0\np 1 2\np 4 0\np 0 2\n");
  r = tww("verify --named complete5 --cert " + k5);
  CHECK(r.code == 0);
  CHECK(r.out == "width 0\n");
}

TEST_CASE("encode, external solve, decode") {
  Dir dir;
  const auto cnf = dir.file("w.cnf");
  CHECK(tww("encode --named wagner -d 2 -o " + cnf).code == 0);
  CHECK(read(cnf).rfind("p cnf ", 0) == 0);
  CHECK(read(cnf + ".map").rfind("o 0 1 1\n", 0) == 0);
  const char* solver = std::getenv("TWW_SAT_SOLVER");
  REQUIRE(solver);
  const auto model = dir.file("w.out");
  CHECK(WEXITSTATUS(std::system((std::string(solver) + " " + cnf + " > " + model).c_str())) == 10);
  const auto cert = dir.file("w.cert");
  auto r = tww("decode --named wagner -d 2 --model " + model + " --cert " + cert);
  CHECK(r.code == 0);
  CHECK(tww("verify --named wagner --cert " + cert).code == 0);

  CHECK(tww("encode --named wagner -d 1 --mode abs -o " + cnf).code == 0);
  CHECK(WEXITSTATUS(std::system((std::string(solver) + " " + cnf + " > " + model).c_str())) == 20);
  r = tww("decode --named wagner -d 1 --mode abs --model " + model);
  CHECK(r.code == 0);
  CHECK(r.out == "UNSAT\n");
}

TEST_CASE("bounds and prime") {
  auto r = tww("bounds --named petersen");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("lb1 4\nlb2 4\nub_greedy ", 0) == 0);

  Dir dir;
  const auto two_p4 = dir.file("pp.edge", "p edge 8 6\ne 1 2\ne 2 3\ne 3 4\ne 5 6\ne 6 7\ne 7 8\n");
  r = tww("prime " + two_p4);
  CHECK(r.code == 0);
  std::size_t headers = 0, provenance = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) {
    headers += line.rfind("p edge 4 3", 0) == 0;
    provenance += line.rfind("c provenance: ", 0) == 0;
  }
  CHECK(headers == 2);
  CHECK(provenance == 2);
}

TEST_CASE("experiments") {
  auto r = tww("experiment random --n 6 --trials 3 --seed 4");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,p,mean_tww,trials\n6,0.10,", 0) == 0);
  CHECK(r.out == tww("experiment random --n 6 --trials 3 --seed 4").out);

  r = tww("experiment named --graphs Wagner Moser");
  CHECK(r.code == 0);
  CHECK(r.out.find("\nWagner,8,12,2,2,") != std::string::npos);
  CHECK(r.out.find("\nMoser,7,11,") != std::string::npos);

  r = tww("experiment paley --q 9");
  CHECK(r.code == 0);
  CHECK(r.out.find("\nPaley9,9,18,4,4,") != std::string::npos);

  Dir dir;
  const auto stream = dir.file("five.g6", "Dhc\nD`{\nbad!\n");
  r = tww("experiment numbers --input " + stream + " --target 2");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,width,count,witness_graph6\n", 0) == 0);
  CHECK(r.out.find("5,2,1,Dhc") != std::string::npos);
  CHECK(tww("experiment numbers").code == 2);
}
