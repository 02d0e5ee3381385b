#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "bimc/bimc.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
};

Result bimc_run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + BIMC_EXE + std::string(" ") + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const char* name) { return std::string(BIMC_TEST_DATA) + "/" + name; }

struct TempDir {
  fs::path path = fs::temp_directory_path() / ("bimc_cli_" + std::to_string(::getpid()));
  TempDir() { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const char* name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("fixtures match the generator", "[cli]") {
  CHECK(bimc::read_transducer(data("tn2.fst")) == bimc::make_tn(2));
  CHECK(bimc::read_transducer(data("tn3.fst")) == bimc::make_tn(3));
}

TEST_CASE("check", "[cli]") {
  auto r = bimc_run("check " + data("tn3.fst"));
  CHECK(r.code == 0);
  CHECK(r.out == "functional\n");
  r = bimc_run("check " + data("parallel.fst"));
  CHECK(r.code == 1);
  CHECK(r.out.rfind("not functional: ", 0) == 0);
  CHECK(bimc_run("check " + data("eps_start.fst")).code == 0);
  CHECK(bimc_run("check " + data("cost.fst")).code == 0);
  CHECK(bimc_run("check " + data("bad_rational.fst")).code == 65);
  CHECK(bimc_run("check " + data("missing.fst")).code == 74);
}

TEST_CASE("compile and run", "[cli]") {
  TempDir dir;
  auto bim = dir.file("tn2.bim");
  auto r = bimc_run("compile " + data("tn2.fst") + " -o " + bim + " --stats");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("left_states 3\n") != std::string::npos);
  CHECK(r.out.find("right_states 6\n") != std::string::npos);
  CHECK(r.out.find("well_defined_violations 0\n") != std::string::npos);

  r = bimc_run("run " + bim + " --input a1a1");
  CHECK(r.code == 0);
  CHECK(r.out == "\"1111\"\n");
  CHECK(bimc_run("run " + bim + " --input 'a2 a1 a1'").out == "\"111111\"\n");
  r = bimc_run("run " + bim + " --input a1");
  CHECK(r.code == 2);
  CHECK(r.out == "UNDEFINED\n");
  CHECK(bimc_run("run " + bim + " --input a3").code == 65);

  auto classical = dir.file("tn2c.bim");
  r = bimc_run("compile " + data("tn2.fst") + " -o " + classical + " --method classical --stats");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("intermediate_states") != std::string::npos);
  CHECK(bimc_run("run " + classical + " --input a1a2a1").out == "\"111111\"\n");

  auto eps = dir.file("eps.bim");
  REQUIRE(bimc_run("compile " + data("eps_start.fst") + " -o " + eps).code == 0);
  CHECK(bimc_run("run " + eps + " --input xxy").out == "\"abb\"\n");
  CHECK(bimc_run("run " + eps + " --input y").out == "\"a\"\n");

  auto cost = dir.file("cost.bim");
  REQUIRE(bimc_run("compile " + data("cost.fst") + " -o " + cost).code == 0);
  CHECK(bimc_run("run " + cost + " --input xxxy").out == "3\n");

  CHECK(bimc_run("compile " + data("parallel.fst") + " -o " + dir.file("p.bim")).code == 1);
  CHECK_FALSE(fs::exists(dir.file("p.bim")));
  CHECK(bimc_run("compile " + data("cost.fst") + " -o " + dir.file("c.bim") + " --method classical").code == 1);
  CHECK(bimc_run("compile " + data("tn3.fst") + " -o " + dir.file("cap.bim"), "BIMC_MAX_STATES=5").code == 1);
  CHECK(bimc_run("compile " + data("tn3.fst") + " -o " + dir.file("cap.bim"), "BIMC_MAX_STATES=11").code == 0);
  CHECK(bimc_run("compile " + data("tn3.fst") + " -o " + dir.file("cap.bim"), "BIMC_MAX_STATES=lots").code == 64);
  CHECK(bimc_run("compile " + data("tn3.fst") + " -o /nonexistent/dir/x.bim").code == 74);
  CHECK(bimc_run("run " + data("tn3.fst") + " --input a1").code == 65);
}

TEST_CASE("bench-tn", "[cli]") {
  auto r = bimc_run("bench-tn --max-n 3 --method mge --format csv");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("n,method,left_states,right_states,intermediate_states,psi_entries,build_ms\n", 0) == 0);
  CHECK(r.out.find("\n3,mge,3,11,,") != std::string::npos);
  CHECK(r.out.find("classical") == std::string::npos);

  r = bimc_run("bench-tn --max-n 3 --format csv");
  CHECK(r.out.find("\n3,classical,") != std::string::npos);
  r = bimc_run("bench-tn --max-n 3 --method classical --classical-limit 2 --format csv");
  CHECK(r.out.find("\n3,classical,skipped") != std::string::npos);
  r = bimc_run("bench-tn --max-n 2 --method both");
  CHECK(r.out.find("intermediate") != std::string::npos);
  CHECK(r.out.find("mge") != std::string::npos);
}

TEST_CASE("compare", "[cli]") {
  auto r = bimc_run("compare " + data("tn3.fst") + " --max-len 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("mge 121/121 agree") != std::string::npos);
  CHECK(r.out.find("classical 121/121 agree") != std::string::npos);
  r = bimc_run("compare " + data("eps_start.fst") + " --max-len 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("classical skipped") != std::string::npos);
  CHECK(bimc_run("compare " + data("parallel.fst")).code == 1);
}

TEST_CASE("usage errors", "[cli]") {
  CHECK(bimc_run("").code == 64);
  CHECK(bimc_run("frobnicate").code == 64);
  CHECK(bimc_run("compile " + data("tn2.fst")).code == 64);
  CHECK(bimc_run("compile " + data("tn2.fst") + " -o x --method fancy").code == 64);
  CHECK(bimc_run("bench-tn --format xml").code == 64);
  CHECK(bimc_run("run x.bim").code == 64);
  CHECK(bimc_run("--help").code == 0);
}
