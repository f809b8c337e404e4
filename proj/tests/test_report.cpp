#include <doctest.h>

#include "susygraph/report.hpp"

using namespace susygraph;

namespace {

FullReport full(std::string_view text) {
  return analyze(parse_edge_list(text), all_sections(), input_digest(text));
}

}  // namespace

TEST_CASE("digest is FNV-1a") {
  CHECK(input_digest("") == "cbf29ce484222325");
  CHECK(input_digest("a") == "af63dc4c8601ec8c");
}

TEST_CASE("C3 report") {
  const auto r = full("n=3\n0 1\n1 2\n2 0\n");
  CHECK(r.all_pass());
  const auto doc = to_json(r);
  for (const char* key : {"graph", "algebra", "grading", "kernel", "spectra", "pairing", "polar", "cycles", "meta"}) {
    CHECK(doc.contains(key));
  }
  CHECK(doc.size() == 9);
  CHECK(serialize_json(r).find("\"dim_ker_d_star\": 1") != std::string::npos);
  CHECK(doc["spectra"]["L"] == nlohmann::json::array({0.0, 3.0, 3.0}));
  CHECK(doc["meta"]["consistency"]["zero_count"] == true);
  CHECK(doc["meta"]["consistency"]["cycle_count"] == true);
}

TEST_CASE("tree report") {
  const auto r = full("n=4\n0 1\n0 2\n0 3\n");
  CHECK(serialize_json(r).find("\"cycle_count\": 0") != std::string::npos);
  CHECK(r.all_pass());
}

TEST_CASE("JSON is deterministic and key-sorted") {
  const std::string text = "n=5\n0 1\n1 2\n2 0\n3 4\n4 3\n";
  const auto a = serialize_json(full(text));
  CHECK(a == serialize_json(full(text)));
  const auto doc = nlohmann::json::parse(a);
  CHECK(doc.dump(2) + "\n" == a);
}

TEST_CASE("partial reports omit sections") {
  const auto g = parse_edge_list("n=2\n0 1\n");
  const auto doc = to_json(analyze(g, {Section::kernel}, "x"));
  CHECK(doc.contains("kernel"));
  CHECK_FALSE(doc.contains("spectra"));
  CHECK(doc["meta"]["consistency"].empty());
}

TEST_CASE("text mirrors the JSON sections") {
  const auto text = serialize_text(full("n=2\n0 1\n"));
  for (const char* header : {"[graph]", "[algebra]", "[kernel]", "[cycles]", "[meta]"}) {
    CHECK(text.find(header) != std::string::npos);
  }
  CHECK(text.find("PASS  Q1^2 = H_S") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("failures propagate to all_pass") {
  auto r = full("n=2\n0 1\n");
  REQUIRE(r.all_pass());
  r.cycle_count_consistent = false;
  CHECK_FALSE(r.all_pass());
  CHECK(to_json(r)["meta"]["all_pass"] == false);
}
