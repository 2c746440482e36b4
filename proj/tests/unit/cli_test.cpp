#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include <json.hpp>

#include "zerosum/cli.hpp"
#include "zerosum/errors.hpp"

using namespace zerosum;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "zerosum");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("zerosum_cli_" + std::to_string(::getpid()))) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("range, grid and complex parsing") {
  CHECK(cli::parse_range("1..10") == std::pair{1, 10});
  CHECK(cli::parse_range("4") == std::pair{4, 4});
  CHECK_THROWS_AS(cli::parse_range("5..1"), UsageError);
  CHECK_THROWS_AS(cli::parse_range("1..x"), UsageError);
  CHECK_THROWS_AS(cli::parse_range(""), UsageError);
  CHECK(cli::parse_grid("-0.5,0,2.7") == std::vector<double>{-0.5, 0.0, 2.7});
  CHECK_THROWS_AS(cli::parse_grid("1,,2"), UsageError);
  CHECK(cli::parse_complex("2,1") == Complex(2.0, 1.0));
  CHECK(cli::parse_complex("-3") == Complex(-3.0, 0.0));
  CHECK_THROWS_AS(cli::parse_complex("a,b"), UsageError);
}

TEST_CASE("verify emits one JSON record per k") {
  const Run r = invoke({"verify", "--id", "calogero", "--nu", "0.5", "--k", "1..10", "--tol", "1e-9", "--format", "json",
                     "--no-cache"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 10);
  for (int k = 1; k <= 10; ++k) {
    const auto j = nlohmann::json::parse(ls[k - 1]);
    CHECK(j["identity_id"] == "CALOGERO_P2");
    CHECK(j["params"]["k"] == k);
    CHECK(j["params"]["nu"] == 0.5);
    CHECK(j["passed"] == true);
    CHECK(j["tool_version"] == cli::kToolVersion);
    for (const char* key : {"lhs", "rhs", "abs_residual", "rel_residual", "truncation_N", "tail_bound"}) {
      CHECK(j.contains(key));
    }
  }
}

TEST_CASE("zeros prints a text table") {
  const Run r = invoke({"zeros", "--family", "bessel-j", "--nu", "0", "--count", "5", "--format", "text", "--no-cache"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0] == "2.404825557695773");
  const Run k = invoke({"zeros", "--family", "bessel-k", "--n", "3", "--format", "csv", "--no-cache"});
  CHECK(k.code == 0);
  CHECK(lines(k.out).size() == 4);
}

TEST_CASE("K identity from the command line") {
  const Run r = invoke({"verify", "--id", "k-p4", "--n", "7", "--j", "1..7", "--no-cache"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 7);
  for (const auto& l : ls) CHECK(nlohmann::json::parse(l)["abs_residual"].get<double>() <= 1e-11);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"verify"}).code == 2);
  CHECK(invoke({"verify", "--id", "unknown", "--k", "1"}).code == 2);
  CHECK(invoke({"verify", "--id", "quartic-int", "--nu", "1", "--k", "1", "--no-cache"}).code == 2);
  CHECK(invoke({"verify", "--id", "quartic-odd", "--k", "2", "--no-cache"}).code == 2);
  CHECK(invoke({"verify", "--id", "calogero", "--nu", "0", "--k", "1", "--tol", "-1"}).code == 2);
  CHECK(invoke({"sweep", "--ids", "calogero", "--nu", "1", "--k", "5..1", "--no-cache"}).code == 2);
  CHECK(invoke({"sweep", "--no-cache"}).code == 2);
  CHECK(invoke({"verify", "--id", "known-p2", "--k", "1", "--format", "xml", "--no-cache"}).code == 2);
  // A tolerance no double computation can meet is a residual failure.
  CHECK(invoke({"verify", "--id", "calogero", "--nu", "0", "--k", "1", "--tol", "1e-300", "--truncation", "200",
                 "--no-cache"}).code == 1);
  // Evaluating the K ratio on top of a zero is a numerical failure.
  CHECK(invoke({"verify", "--id", "k-ml", "--n", "1", "--z", "-1,0", "--no-cache"}).code == 3);
}

TEST_CASE("sum with closed-form comparison") {
  const Run r = invoke({"sum", "--family", "bessel-j", "--nu", "0", "--x", "1.3", "--closed", "--no-cache"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["agrees"] == true);
  CHECK(j["method"] == "direct_tail");
  const Run s = invoke({"sum", "--family", "struve-h", "--nu", "0.2", "--x", "2.0", "--closed", "--tol", "1e-8",
                      "--no-cache"});
  CHECK(s.code == 0);
  CHECK(invoke({"sum", "--family", "bessel-j", "--nu", "0", "--x", "1", "--k", "1", "--no-cache"}).code == 2);
}

TEST_CASE("sweep summary and warm-cache determinism") {
  TempDir dir;
  const std::vector<std::string> args{"sweep",   "--ids", "calogero,known-p2,k-p2", "--nu", "0,-0.5", "--k",
                                      "1..3",    "--n",   "1..4",
                                      "--cache-dir", dir.path.string()};
  const Run first = invoke(args);
  CHECK(first.code == 0);
  const auto ls = lines(first.out);
  // 2 orders x 3 k + 3 k + (1+2+3+4) j + summary line
  REQUIRE(ls.size() == 6 + 3 + 10 + 1);
  const auto summary = nlohmann::json::parse(ls.back())["summary"];
  CHECK(summary["records"] == 19);
  CHECK(summary["max_residual"].contains("CALOGERO_P2"));
  // Deterministic order: identity, then nu ascending, then k ascending.
  CHECK(nlohmann::json::parse(ls[0])["params"]["nu"] == -0.5);
  CHECK(nlohmann::json::parse(ls[3])["params"]["nu"] == 0.0);
  CHECK(nlohmann::json::parse(ls[6])["identity_id"] == "KNOWN_P2");
  const Run second = invoke(args);
  const Run third = invoke(args);
  CHECK(second.out == third.out);
  CHECK(first.out == second.out);
}

TEST_CASE("output file is written whole") {
  TempDir dir;
  const fs::path out = dir.path / "report.csv";
  const Run r = invoke({"verify", "--id", "known-p2", "--k", "1..3", "--format", "csv", "--output", out.string(),
                     "--no-cache"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("tool_version,identity_id,nu,k,n,j", 0) == 0);
  int rows = 0;
  for (std::string l; std::getline(in, l);) ++rows;
  CHECK(rows == 3);
}

TEST_CASE("cache subcommands") {
  TempDir dir;
  const std::string d = dir.path.string();
  CHECK(invoke({"cache", "warm", "--family", "bessel-j", "--nu", "0,1", "--count", "8", "--cache-dir", d}).code == 0);
  CHECK(invoke({"cache", "warm", "--family", "bessel-k", "--n", "2..3", "--cache-dir", d}).code == 0);
  const Run list = invoke({"cache", "list", "--cache-dir", d});
  CHECK(lines(list.out).size() == 4);
  CHECK(invoke({"cache", "clear", "--cache-dir", d}).code == 0);
  CHECK(invoke({"cache", "list", "--cache-dir", d}).out.empty());
  CHECK(invoke({"cache", "list", "--no-cache"}).code == 2);
  CHECK(invoke({"cache", "explode", "--cache-dir", d}).code == 2);
}

TEST_CASE("cache directory comes from the environment") {
  TempDir dir;
  ::setenv(cli::kCacheEnv, dir.path.string().c_str(), 1);
  const Run r = invoke({"cache", "path"});
  ::unsetenv(cli::kCacheEnv);
  CHECK(r.code == 0);
  CHECK(r.out == dir.path.string() + "\n");
}
