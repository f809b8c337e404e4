#include <doctest.h>

#include "support/run_command.hpp"

#include <json.hpp>

using testrun::quoted;
using testrun::run;

namespace {

const std::string cli = quoted(SUSYGRAPH_CLI);
const std::string data = std::string(SUSYGRAPH_DATA_DIR) + "/";

}  // namespace

TEST_CASE("report on C3 as JSON") {
  const auto r = run(cli + " report " + quoted(data + "c3.txt") + " --format json");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["kernel"]["dim_ker_d_star"] == 1);
  CHECK(doc["meta"]["all_pass"] == true);
}

TEST_CASE("check on K2 prints the relation table") {
  const auto r = run(cli + " check " + quoted(data + "k2.txt"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS  {Q+,Q-} = H_S") != std::string::npos);
  CHECK(r.out.find("[grading]") != std::string::npos);
  CHECK(r.out.find("[kernel]") == std::string::npos);
}

TEST_CASE("each subcommand runs") {
  for (const char* cmd : {"spectrum", "kernel", "cycles"}) {
    CAPTURE(cmd);
    const auto r = run(cli + " " + cmd + " " + quoted(data + "reciprocal.txt") + " --format json");
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.out).contains("meta"));
  }
}

TEST_CASE("flags") {
  const auto sym = run(cli + " cycles " + quoted(data + "c3.txt") + " --format json --mode-override symmetric");
  CHECK(sym.exit_code == 0);
  CHECK(nlohmann::json::parse(sym.out)["cycles"]["cycle_count"] == 4);
  const auto seeded = run(cli + " kernel " + quoted(data + "c3.txt") + " --format json --seed 9 --tol 1e-6");
  const auto doc = nlohmann::json::parse(seeded.out);
  CHECK(doc["meta"]["seed"] == 9);
  CHECK(doc["meta"]["tol"] == 1e-6);
}

TEST_CASE("input and usage errors exit with 2") {
  CHECK(run(cli + " report " + quoted(data + "missing.txt") + " 2>/dev/null").exit_code == 2);
  CHECK(run("printf 'n=2\\n0 1\\n0 1\\n' > /tmp/susygraph_dup.txt && " + cli +
            " report /tmp/susygraph_dup.txt 2>/dev/null")
            .exit_code == 2);
  CHECK(run(cli + " frobnicate 2>/dev/null").exit_code == 2);
  CHECK(run(cli + " report " + quoted(data + "c3.txt") + " --format yaml 2>/dev/null").exit_code == 2);
  CHECK(run(cli + " report " + quoted(data + "c3.txt") + " --tol -1 2>/dev/null").exit_code == 2);
}
