#include <doctest.h>

#include <fstream>
#include <sstream>

#include "dq/cli.hpp"
#include "json.hpp"

using namespace dq;

namespace {

struct Run {
  int rc;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int rc = run_cli(args, out, err);
  return {rc, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("exact sums at 10") {
  const Run r = run({"sums", "--x", "10", "--exact"});
  CHECK(r.rc == kExitOk);
  CHECK(has(r.out, "== exact =="));
  CHECK(has(r.out, "10  23"));
}

TEST_CASE("dbound for case D") {
  const Run r = run({"dbound", "--case", "D"});
  CHECK(r.rc == kExitOk);
  CHECK(has(r.out, "51.4153"));
}

TEST_CASE("records are deterministic and one object per line") {
  const std::vector<std::string> args{"--format", "records", "counts", "--case", "all"};
  const Run a = run(args), b = run(args);
  CHECK(a.rc == kExitOk);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  int n = 0;
  for (std::string line; std::getline(lines, line); ++n) {
    INFO(line);
    REQUIRE(line.front() == '{');
    REQUIRE(line.back() == '}');
    CHECK(has(line, "\"section\":"));
  }
  CHECK(n > 10);
}

TEST_CASE("certify-all reports the case C mismatch") {
  const Run r = run({"certify-all"});
  CHECK(r.rc == kExitCertification);
  CHECK(has(r.err, "counts.C"));
  CHECK(has(r.out, "FAILED: counts.C"));
  CHECK(has(r.out, "1.18e27"));
}

TEST_CASE("prime-swap leaves no survivors") {
  const Run r = run({"--format", "records", "prime-swap"});
  CHECK(r.rc == kExitOk);
  std::istringstream lines(r.out);
  long candidates = 0, survivors = 0;
  for (std::string line; std::getline(lines, line);) {
    const auto j = nlohmann::json::parse(line);
    if (j["section"] != "prime_swap") continue;
    candidates += std::stol(j["candidates"].get<std::string>());
    survivors += std::stol(j["survivors"].get<std::string>());
  }
  CHECK(candidates == 522);
  CHECK(survivors == 0);
}

TEST_CASE("oracle subcommands") {
  const Run t = run({"oracle", "triple", "1", "3", "8"});
  CHECK(t.rc == kExitOk);
  CHECK(has(t.out, "120"));
  const Run s = run({"--format", "records", "oracle", "search", "--limit", "10", "--size", "2"});
  CHECK(s.rc == kExitOk);
  CHECK(has(s.out, "\"tuple\":\"{1,3}\""));
  CHECK(has(s.out, "\"tuple\":\"{8,10}\""));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).rc == kExitUsage);
  CHECK(run({"frobnicate"}).rc == kExitUsage);
  CHECK(run({"--format", "yaml", "sums", "--x", "10", "--exact"}).rc == kExitUsage);
  CHECK(run({"--precision", "16", "alpha"}).rc == kExitUsage);
  CHECK(run({"dbound", "--case", "E"}).rc == kExitUsage);
  CHECK(run({"sums", "--x", "10", "--exact", "--both"}).rc == kExitUsage);
  CHECK(run({"--help"}).rc == kExitOk);
}

TEST_CASE("config overrides appear in the header") {
  const std::string path = "cli_override_test.ini";
  {
    std::ofstream f(path);
    f << "[case.D]\nB0 = 300000\n";
  }
  const Run r = run({"--config", path, "dbound", "--case", "D"});
  CHECK(r.rc == kExitOk);
  CHECK(has(r.out, "case.D.B0=300000"));
  CHECK(has(r.out, "--config=" + path));
  std::remove(path.c_str());
}

TEST_CASE("precision flag is honoured") {
  const Run r = run({"--precision", "256", "alpha", "--row", "AI"});
  CHECK(r.rc == kExitOk);
  CHECK(has(r.out, "precision      256"));
}
