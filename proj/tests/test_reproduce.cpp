#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include <json.hpp>

#include "prodgraph/corpus.hpp"
#include "prodgraph/reproduce.hpp"

using namespace prodgraph;

TEST_CASE("corpus enumeration counts isomorphism classes") {
  // connected graphs on 1..5 vertices: 1, 1, 2, 6, 21
  std::vector<Graph> graphs = connected_graphs_up_to(5);
  std::map<int, int> per_order;
  for (const Graph& g : graphs) ++per_order[g.order()];
  CHECK(per_order[1] == 1);
  CHECK(per_order[2] == 1);
  CHECK(per_order[3] == 2);
  CHECK(per_order[4] == 6);
  CHECK(per_order[5] == 21);
  CHECK(cart_kron_sweep_corpus().size() == 31 + 4);
}

TEST_CASE("report examples at small caps") {
  Report r5 = run_claims(5, kDefaultSpectralTol, "remark3.4");
  REQUIRE(r5.claims.size() == 1);
  CHECK(r5.claims[0].id == "remark3.4-n5");
  CHECK(r5.claims[0].pass);
  CHECK(r5.claims[0].computed.find("distinct=4, diam=4") != std::string::npos);

  Report r3 = run_claims(3, kDefaultSpectralTol, "thm3.3");
  REQUIRE(r3.claims.size() == 1);
  CHECK(r3.claims[0].id == "thm3.3-n3");
  CHECK(r3.claims[0].pass);
  CHECK(r3.claims[0].computed.find("zero-mult=4") != std::string::npos);
}

TEST_CASE("claim ids are unique, sorted, and criterion-complete") {
  Report report = run_claims(13, kDefaultSpectralTol, "drg");
  CHECK(report.claims.size() == 6);

  // cheap families only, but covering the registry shape
  Report shape = run_claims(3, kDefaultSpectralTol, "thm3.1-odd");
  REQUIRE(shape.claims.size() == 1);
  CHECK(shape.claims[0].id == "thm3.1-odd-n3");
  CHECK(shape.claims[0].criterion == "A1");
}

TEST_CASE("reports are deterministic apart from elapsed times") {
  Report a = run_claims(5, kDefaultSpectralTol, "thm3.3");
  Report b = run_claims(5, kDefaultSpectralTol, "thm3.3");
  REQUIRE(a.claims.size() == b.claims.size());
  for (std::size_t i = 0; i < a.claims.size(); ++i) {
    CHECK(a.claims[i].id == b.claims[i].id);
    CHECK(a.claims[i].computed == b.claims[i].computed);
    CHECK(a.claims[i].expected == b.claims[i].expected);
    CHECK(a.claims[i].pass == b.claims[i].pass);
  }
}

TEST_CASE("json report shape") {
  Report report = run_claims(5, kDefaultSpectralTol, "drg-cycle-n5");
  const auto doc = nlohmann::json::parse(report_to_json(report));
  CHECK(doc["max_n"] == 5);
  CHECK(doc["all_pass"].is_boolean());
  REQUIRE(doc["claims"].is_array());
  REQUIRE(doc["claims"].size() == 1);
  const auto& claim = doc["claims"][0];
  for (const char* key :
       {"id", "anchor", "criterion", "rule", "computed", "expected", "pass",
        "elapsed_ms"})
    CHECK(claim.contains(key));
}

TEST_CASE("acceptance criteria registry") {
  const auto& criteria = acceptance_criteria();
  REQUIRE(criteria.size() == 11);
  CHECK(criteria.front().id == "A1");
  CHECK(criteria.back().id == "A11");

  // every criterion is exercised by at least one claim at full cap
  Report report = run_claims(13);
  std::set<std::string> covered;
  std::set<std::string> ids;
  for (const ClaimResult& r : report.claims) {
    covered.insert(r.criterion);
    CHECK(ids.insert(r.id).second);  // unique ids
  }
  for (const Criterion& criterion : criteria)
    CHECK(covered.contains(criterion.id));
  CHECK(std::is_sorted(report.claims.begin(), report.claims.end(),
                       [](const ClaimResult& a, const ClaimResult& b) {
                         return a.id < b.id;
                       }));
}

TEST_CASE("max_n bounds") {
  CHECK_THROWS_AS(run_claims(2), std::invalid_argument);
  CHECK_THROWS_AS(run_claims(15), std::invalid_argument);
}
