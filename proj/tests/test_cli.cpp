#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("immlift-cli-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Result run(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt";
  const fs::path err = scratch() / "stderr.txt";
  const std::string cmd = std::string(IMMLIFT_CLI) + " " + args + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  Result r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("imm") {
  const auto a = write_file("A.json", "[[1,2],[3,4]]");
  const auto i3 = write_file("I3.json", "[[1,0,0],[0,1,0],[0,0,1]]");
  const auto ones3 = write_file("ones3.json", "[[1,1,1],[1,1,1],[1,1,1]]");
  Result r = run("imm --partition 1,1 --matrix " + a);
  CHECK(r.code == 0);
  CHECK(r.out == "[-2, 0]\n");
  r = run("imm --det --matrix " + i3);
  CHECK(r.out == "[1, 0]\n");
  r = run("imm --per --matrix " + ones3);
  CHECK(r.out == "[6, 0]\n");
  r = run("imm --partition 2,1 --matrix " + ones3);
  CHECK(r.out == "[0, 0]\n");
}

TEST_CASE("imm errors exit 2 with one line") {
  const auto a = write_file("A2.json", "[[1,2],[3,4]]");
  const auto bad = write_file("bad.json", "[[1,2],[3]]");
  const auto junk = write_file("junk.json", "{not json");
  for (const std::string& args : std::vector<std::string>{"imm --partition 2,1 --matrix " + a, "imm --det --matrix " + bad,
                                 "imm --det --matrix " + junk, "imm --det --matrix /nonexistent.json",
                                 "imm --det --per --matrix " + a, "imm --partition 1,2 --matrix " + a, "imm"}) {
    CAPTURE(args);
    const Result r = run(args);
    CHECK(r.code == 2);
    CHECK(count_lines(r.err) == 1);
  }
}

TEST_CASE("lift") {
  Result r = run("lift --fn det --n 2 --emit text");
  CHECK(r.code == 0);
  CHECK(r.out == "tr(X1)·1 − X1\n");

  r = run("lift --fn a4:chi1 --n 4 --emit text");
  CHECK(r.out == "3𝟙 − L\n");
  r = run("lift --fn a4:chi1 --n 4 --emit text --full-traces");
  CHECK(r.out.find("tr(X1)") != std::string::npos);

  r = run("lift --fn per --n 3 --emit json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 3);
  CHECK(j["terms"].size() == 6);

  r = run("lift --fn lambda:1,1 --emit latex");
  CHECK(r.out == "\\operatorname{tr}(X_{1})\\,\\mathbb{1} - X_{1}\n");
  CHECK(run("lift --fn 2,1 --n 3").code == 0);
  CHECK(run("lift --fn idem:2,1").code == 0);

  const auto f = write_file("f.json", R"({"n":2,"elements":[[1,2],[2,1]],"values":[[1,0],[-1,0]]})");
  r = run("lift --fn file:" + f);
  CHECK(r.out == "tr(X1)·1 − X1\n");
}

TEST_CASE("lift errors") {
  for (const std::string& args : std::vector<std::string>{"lift --fn bogus --n 3", "lift --fn a4:chi9", "lift --fn 2,1 --n 4",
                                 "lift --fn det", "lift --fn det --n 2 --emit pdf", "lift --fn a4:chi1 --n 3"}) {
    CAPTURE(args);
    const Result r = run(args);
    CHECK(r.code == 2);
    CHECK(count_lines(r.err) == 1);
  }
}

TEST_CASE("verify") {
  CHECK(run("verify --suite a4-examples --trials 1000 --m 3 --seed 7").code == 0);
  CHECK(run("verify --suite lew-identity").code == 0);
  const Result r = run("verify --suite appendix-scalar --n 4 --trials 200");
  CHECK(r.code == 0);
  CHECK(r.out.find("checks passed") != std::string::npos);

  const Result unknown = run("verify --suite nope");
  CHECK(unknown.code == 2);
  CHECK(count_lines(unknown.err) == 1);
  CHECK(run("verify --suite a4-examples --trials 0").code == 2);
  CHECK(run("verify --suite a4-examples --tol -1").code == 2);
}

TEST_CASE("verify json is byte-identical across runs and thread counts") {
  const Result a = run("verify --suite anticommutator --trials 300 --seed 11 --format json --threads 1");
  const Result b = run("verify --suite anticommutator --trials 300 --seed 11 --format json --threads 7");
  const Result c = run("verify --suite anticommutator --trials 300 --seed 11 --format json --threads 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(b.out == c.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["suite"] == "anticommutator");
  CHECK(j["reports"].size() == 4);

  const auto path = (scratch() / "report.json").string();
  CHECK(run("verify --suite anticommutator --trials 300 --seed 11 --format json --threads 3 --out " + path).code == 0);
  CHECK(slurp(path) == a.out);
}

TEST_CASE("falsify") {
  Result r = run("falsify --conjecture perm-dominance --n 4 --trials 10000");
  CHECK(r.code == 0);
  CHECK(r.out.find("no counterexample") != std::string::npos);
  CHECK(r.out.find("worst margin -") == std::string::npos);

  r = run("falsify --conjecture perm-dominance --n 2 --trials 2000 --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["reports"].size() == 1);
  CHECK(j["reports"][0]["min_statistic"].get<double>() >= 0.0);
  CHECK(j["reports"][0]["status"] == "no counterexample found");

  CHECK(run("falsify --conjecture perm-dominance-lifted --n 3 --trials 500").code == 0);
  r = run("falsify --conjecture riemann");
  CHECK(r.code == 2);
  CHECK(count_lines(r.err) == 1);
}
