#include "qtcat/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

using qtcat::Report;

TEST_CASE("report serialization", "[verify]") {
  Report rep;
  rep.suite = "demo";
  rep.params = "n<=3";
  rep.elapsed_ms = 12;
  CHECK(rep.json() ==
        "{\"suite\":\"demo\",\"params\":\"n<=3\",\"status\":\"pass\","
        "\"counterexample\":null,\"elapsed_ms\":12}");
  rep.fail("first");
  rep.fail("second \"quoted\"");
  CHECK_FALSE(rep.pass);
  CHECK(rep.json() ==
        "{\"suite\":\"demo\",\"params\":\"n<=3\",\"status\":\"fail\","
        "\"counterexample\":{\"detail\":\"first; second \\\"quoted\\\"\"},"
        "\"elapsed_ms\":12}");
}

TEST_CASE("suite registry", "[verify]") {
  const std::vector<std::string> want = {
      "ten-interpretations", "gamma-theorems", "minus-one-exc",
      "minus-one-des",       "equidistributions", "wex-variant",
      "propositions",        "recurrences",       "ballot",
      "mfs",                 "section6",          "mansour-alt",
      "conjecture",          "properties"};
  const auto& all = qtcat::verify::suites();
  REQUIRE(all.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(all[i].id == want[i]);
  CHECK_THROWS_AS(qtcat::verify::run_suite("nosuch"), qtcat::Error);
}

TEST_CASE("single suites pass at reduced depth", "[verify]") {
  for (const char* id : {"ten-interpretations", "gamma-theorems", "ballot",
                         "recurrences", "mansour-alt"}) {
    Report rep = qtcat::verify::run_suite(id, 5);
    INFO(rep.suite << ": " << rep.counterexample);
    CHECK(rep.pass);
    CHECK(rep.suite == id);
    CHECK(rep.counterexample.empty());
  }
}

TEST_CASE("full run honors a global bound", "[verify]") {
  std::vector<Report> reports = qtcat::verify::run_all(4);
  REQUIRE(reports.size() == qtcat::verify::suites().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    INFO(reports[i].suite << ": " << reports[i].counterexample);
    CHECK(reports[i].pass);
    CHECK(reports[i].suite == qtcat::verify::suites()[i].id);
  }
}
