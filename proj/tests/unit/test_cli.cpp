#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "betaorbit/oracle.hpp"
#include "cli.hpp"

using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::vector<json> lines;
  std::string text;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "betaorbit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = betaorbit::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  Run r{code, {}, out.str()};
  std::istringstream in(r.text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] == '{') r.lines.push_back(json::parse(line));
  }
  return r;
}

const json& record(const Run& r) { return r.lines.at(1); }

}  // namespace

TEST_CASE("freq golden outputs") {
  Run r = run({"freq", "--beta", "quad:(1+1*sqrt(5))/2"});
  CHECK(r.code == 0);
  REQUIRE(r.lines.size() == 2);
  CHECK(r.lines[0]["header"]["tool"] == "betaorbit");
  CHECK(record(r)["freq"] == "1/2");
  CHECK(record(r)["case"] == "M.c");

  r = run({"freq", "--beta", "rat:3/2"});
  CHECK(record(r)["freq"] == "1/3");
  CHECK(record(r)["case"] == "G.3b");
  CHECK(record(r)["certificate"].is_array());
}

TEST_CASE("word commands") {
  Run r = run({"christoffel", "2", "5"});
  CHECK(record(r)["lower"] == "00101");
  CHECK(record(r)["upper"] == "10100");
  CHECK(record(r)["central"] == "010");
  r = run({"classify", "1|10"});
  CHECK(r.code == 0);
  CHECK(r.text.find("Skew") != std::string::npos);
  r = run({"pal", "01"});
  CHECK(r.text.find("010") != std::string::npos);
  r = run({"expand", "--beta", "rat:3/2", "--x", "1", "-n", "13"});
  CHECK(r.text.find("1010000010010") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"xi", "--alpha", "1/2", "--beta", "rat:3/2"}).code == betaorbit::cli::kExitDomain);
  CHECK(run({"freq", "--beta", "rat:1/2"}).code == betaorbit::cli::kExitDomain);
  Run r = run({"freq", "--beta", betaorbit::oracle::kSturmianLikeBeta, "--max-depth", "64"});
  CHECK(r.code == betaorbit::cli::kExitUndetermined);
  CHECK(record(r)["error"] == "undetermined");
  r = run({"--max-digits", "1", "--start-digits", "1", "freq", "--beta", "pi"});
  CHECK(r.code == betaorbit::cli::kExitPrecision);
  CHECK(record(r)["error"] == "precision");
  CHECK(run({"nonsense"}).code != 0);
}

TEST_CASE("plain output") {
  Run r = run({"--plain", "delta", "--alpha", "1/2"});
  CHECK(r.code == 0);
  CHECK(r.text.rfind("# betaorbit", 0) == 0);
  CHECK(r.text.find("quadratic") != std::string::npos);
}

TEST_CASE("config file and environment") {
  const auto path = std::filesystem::temp_directory_path() / "betaorbit_test.ini";
  {
    std::ofstream f(path);
    f << "max-depth=77\n";
  }
  Run r = run({"--config", path.string(), "freq", "--beta", "int:2"});
  CHECK(r.lines.at(0)["header"]["max_depth"] == 77);
  std::filesystem::remove(path);

  ::setenv("BETA_ORBIT_MAX_PREC", "300", 1);
  r = run({"freq", "--beta", "int:2"});
  ::unsetenv("BETA_ORBIT_MAX_PREC");
  CHECK(r.lines.at(0)["header"]["max_digits"] == 300);
}

TEST_CASE("staircase csv is deterministic") {
  Run a = run({"staircase", "--delta", "--from", "1/4", "--to", "3/4", "--samples", "5", "--out", "-"});
  Run b = run({"staircase", "--delta", "--from", "1/4", "--to", "3/4", "--samples", "5", "--out", "-",
               "--jobs", "3"});
  CHECK(a.code == 0);
  CHECK(a.text == b.text);
  CHECK(a.text.rfind("arg,value,status\n", 0) == 0);
  CHECK(std::count(a.text.begin(), a.text.end(), '\n') == 6);
}
