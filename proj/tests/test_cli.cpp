#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

// Golden tests against the installed command-line binary.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(GSEQ_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.stdout_text.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("closure command emits the exact golden document") {
  const auto r = run_cli("closure --method kernel:1/2,1/2 --set 0,1 --output json");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text == "{\"closure\":[\"0\",\"1/2\",\"1\"],\"complete\":true}\n");
}

TEST_CASE("iterate command reproduces the second closure step") {
  const auto r = run_cli("iterate --method kernel:1/2,1/2 --set 0,1 --k 2 --output json");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.stdout_text);
  REQUIRE(doc.at("iterates").size() == 2);
  CHECK(doc.at("iterates")[0] == nlohmann::json::parse(R"(["0","1/2","1"])"));
  CHECK(doc.at("iterates")[1] == nlohmann::json::parse(R"(["0","1/4","1/2","3/4","1"])"));
  CHECK(doc.at("complete") == true);
}

TEST_CASE("regular command") {
  CHECK(run_cli("regular --method kernel:1,1 --output json").stdout_text == "{\"regular\":false}\n");
  CHECK(run_cli("regular --method kernel:1/2,1/2 --output json").stdout_text == "{\"regular\":true}\n");
}

TEST_CASE("eval command distinguishes undefined from errors") {
  const auto defined = run_cli("eval --method lim --seq 'pre:[9];cyc:[3]' --output json");
  CHECK(defined.exit_code == 0);
  CHECK(defined.stdout_text == "{\"defined\":true,\"value\":\"3\"}\n");

  const auto undefined = run_cli("eval --method lim --seq 'pre:[];cyc:[0,1]' --output json");
  CHECK(undefined.exit_code == 0);
  CHECK(undefined.stdout_text == "{\"defined\":false}\n");

  const auto mismatch = run_cli("eval --method cesaro --universe z3 --seq 'pre:[];cyc:[1]' --output json");
  CHECK(mismatch.exit_code == 2);
}

TEST_CASE("predicates on cyclic universes") {
  const auto open0 = run_cli("check-open --method kernel:1,1 --universe z2 --set 0 --output json");
  CHECK(open0.stdout_text == "{\"open\":false}\n");
  const auto closed = run_cli("check-closed --method kernel:1/2,1/2 --set 0,1 --output json");
  CHECK(closed.stdout_text == "{\"closed\":false}\n");
  const auto interior = run_cli("interior --method kernel:1,1 --universe z2 --set 0 --output json");
  CHECK(interior.stdout_text == "{\"interior\":[]}\n");
  const auto boundary = run_cli("boundary --method kernel:1,1 --universe z2 --set 1 --output json");
  CHECK(boundary.stdout_text == "{\"boundary\":[\"0\"]}\n");
  const auto dense = run_cli("dense --method kernel:2,-1 --universe z3 --set 0,1 --output json");
  const auto doc = nlohmann::json::parse(dense.stdout_text);
  CHECK(doc.at("dense").is_boolean());
  // open sets need a finite complement
  CHECK(run_cli("check-open --method kernel:1/2,1/2 --universe q --set 0").exit_code == 2);
}

TEST_CASE("density commands") {
  const auto stat = run_cli("stat-density --terms 0,1,0,1 --point 0 --radius 1/2 --output json");
  CHECK(stat.stdout_text == "{\"density\":\"1/2\"}\n");
  const auto lac = run_cli(
      "lacunary-density --terms 1,1,0,0 --point 0 --radius 1/2 --breakpoints 2,4 --r 2 --output json");
  CHECK(lac.stdout_text == "{\"density\":\"0\"}\n");
  const auto seq = run_cli("stat-density --seq 'pre:[];cyc:[0,1]' --n 4 --point 0 --radius 1/2 --output json");
  CHECK(seq.stdout_text == "{\"density\":\"1/2\"}\n");
}

TEST_CASE("continuity command") {
  const auto good = run_cli("continuity --method kernel:2,-1 --universe z3 --function 0,1,2 --output json");
  CHECK(good.exit_code == 0);
  CHECK(nlohmann::json::parse(good.stdout_text).at("continuous") == true);
  const auto bad = run_cli("continuity --method kernel:1,1 --universe z2 --function 1,0 --output json");
  const auto doc = nlohmann::json::parse(bad.stdout_text);
  CHECK(doc.at("continuous") == false);
  CHECK(doc.contains("witness"));
}

TEST_CASE("continuity with an explicit period bound") {
  const auto r = run_cli(
      "continuity --method kernel:1,1 --universe z2 --function 1,0 --period-bound 4 --output json");
  const auto doc = nlohmann::json::parse(r.stdout_text);
  CHECK(doc.at("continuous") == false);
  CHECK(doc.at("verified_up_to_period") == 4);
  // oversized budgets are refused, not truncated
  CHECK(run_cli("continuity --method kernel:2,-1 --universe z3 --function 0,1,2 --period-bound 50")
            .exit_code == 2);
}

TEST_CASE("exact rational literals are required everywhere") {
  CHECK(run_cli("closure --method kernel:0.5,0.5 --set 0,1").exit_code == 2);
  CHECK(run_cli("closure --method kernel:1/2,1/2 --set 0.25").exit_code == 2);
  CHECK(run_cli("nonsense-command").exit_code == 2);
}

TEST_CASE("input files can supply the method and set") {
  const std::string path = "gseq_cli_input_test.json";
  {
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    fputs(R"({"method":{"kind":"kernel","coefficients":["1/2","1/2"]},"set":["0","1"]})", f);
    fclose(f);
  }
  const auto r = run_cli("closure --input " + path + " --output json");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text == "{\"closure\":[\"0\",\"1/2\",\"1\"],\"complete\":true}\n");
  std::remove(path.c_str());
}

TEST_CASE("demo replays the pinned walkthrough") {
  const auto r = run_cli("demo");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("closure of {0, 1}") != std::string::npos);
  CHECK(r.stdout_text.find("FAIL") == std::string::npos);

  const auto j = run_cli("demo --output json");
  CHECK(nlohmann::json::parse(j.stdout_text).at("ok") == true);
}

TEST_CASE("a narrow method list can leave falsifiable checks unwitnessed") {
  // kernel:2,-1 and lim alone never break closure idempotence on z2, so the
  // suite gate reports failure (exit 1) while no holds-check is violated
  const auto r = run_cli("verify --universe z2 --methods 'kernel:2,-1;lim' --trials 5 --output json");
  CHECK(r.exit_code == 1);
  std::size_t start = 0;
  while (start < r.stdout_text.size()) {
    const auto end = r.stdout_text.find('\n', start);
    REQUIRE(end != std::string::npos);
    const auto doc = nlohmann::json::parse(r.stdout_text.substr(start, end - start));
    if (doc.at("expectation") == "holds") CHECK(doc.at("status") != "counterexample");
    start = end + 1;
  }
}

TEST_CASE("verify runs deterministically end to end on the default configuration") {
  const std::string args = "verify --output json";
  const auto first = run_cli(args);
  const auto second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.stdout_text == second.stdout_text);
  CHECK(!first.stdout_text.empty());
  // each line is one JSON record
  std::size_t start = 0, lines = 0;
  while (start < first.stdout_text.size()) {
    const auto end = first.stdout_text.find('\n', start);
    REQUIRE(end != std::string::npos);
    const auto doc = nlohmann::json::parse(first.stdout_text.substr(start, end - start));
    CHECK(doc.contains("check"));
    CHECK(doc.contains("status"));
    start = end + 1;
    ++lines;
  }
  CHECK(lines > 0);
}
