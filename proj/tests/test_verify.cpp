#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "buckleopt/raster.hpp"
#include "buckleopt/verify.hpp"

using namespace buckleopt;

namespace {

bool all_pass(const std::vector<Check>& checks) {
  bool ok = true;
  for (const auto& c : checks) {
    if (!c.passed) {
      MESSAGE("failed: " << c.name);
      ok = false;
    }
  }
  return ok;
}

std::vector<CorpusEntry> small_corpus() {
  auto corpus = standard_corpus(1);
  return {corpus[1], corpus[3], corpus[5]};
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("corpus is seeded and deterministic") {
    const auto a = standard_corpus(1);
    const auto b = standard_corpus(1);
    const auto c = standard_corpus(2);
    REQUIRE(a.size() == 8);
    CHECK(a[0].label == "disk");
    CHECK(a[4].label == "L-shape");
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].domain == b[i].domain);
    CHECK(!(a[5].domain == c[5].domain));

    const double u = seeded_uniform(7, 3);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(u == seeded_uniform(7, 3));
    CHECK(u != seeded_uniform(7, 4));
  }

  TEST_CASE("nested pairs produce nested masks") {
    const auto pairs = nested_pairs(1, 20);
    CHECK(pairs.size() == 23);
    for (const auto& p : pairs) CHECK(mask_subset(rasterize(p.inner, 1.0 / 32.0), rasterize(p.outer, 1.0 / 32.0)));
  }

  TEST_CASE("monotonicity checks and their control") {
    const auto checks = check_monotonicity(nested_pairs(3, 2));
    CHECK(all_pass(checks));
    CHECK(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.control; }) == 1);
    const auto identical = std::find_if(checks.begin(), checks.end(), [](const Check& c) { return c.name == "monotonicity/identical"; });
    REQUIRE(identical != checks.end());
    CHECK(identical->quantities[2].second == 0.0);
  }

  TEST_CASE("scaling law on a small corpus") {
    const auto checks = check_scaling_law({standard_corpus(1)[1]}, {1.0, 2.0});
    CHECK(all_pass(checks));
    for (const auto& c : checks) {
      if (c.name == "scaling/matrix/unit-square/t=1") CHECK(c.quantities.back().second == 0.0);
    }
  }

  TEST_CASE("penalized stationarity, geometry and energy identity") {
    CHECK(all_pass(check_penalized_stationarity(small_corpus())));
    CHECK(all_pass(check_geometry_bounds(standard_corpus(1))));
    CHECK(all_pass(check_energy_identity(small_corpus())));
    CHECK(all_pass(check_dense_equivalence(small_corpus())));
  }

  TEST_CASE("payne on the square and convexification fixtures") {
    CHECK(all_pass(check_payne({standard_corpus(1)[1]}, {1.0 / 64.0})));
    const auto conv = check_convexification(nonconvex_fixtures());
    CHECK(conv.size() == 8);
    CHECK(all_pass(conv));
  }

  TEST_CASE("connectedness and the disjoint union") {
    const auto checks = check_connectedness({{"disk", Disk{{0, 0}, 1}}, {"L", nonconvex_fixtures()[0].domain}});
    CHECK(all_pass(checks));
    CHECK(checks.back().control);
    CHECK(checks.back().quantities[0].second == 2.0);
    CHECK(all_pass(check_disjoint_union()));
  }

  TEST_CASE("report accounting and serialization") {
    VerificationReport r;
    r.seed = 5;
    Check ok;
    ok.name = "b";
    ok.passed = true;
    ok.quantities = {{"x", 1.5}};
    Check bad;
    bad.name = "a";
    bad.passed = false;
    Check control;
    control.name = "c";
    control.control = true;
    control.passed = false;
    r.checks = {bad, ok, control};
    CHECK(r.passed() == 1);
    CHECK(r.failed() == 1);
    CHECK(r.controls() == 1);
    CHECK(r.controls_failed() == 1);
    CHECK(!r.ok());
    r.checks.erase(r.checks.begin());
    CHECK(r.ok());

    const auto doc = nlohmann::json::parse(r.to_json());
    CHECK(doc["seed"] == 5);
    CHECK(doc["checks"].size() == 2);
    CHECK(doc["checks"][0]["quantities"]["x"] == 1.5);
    CHECK(doc["summary"]["ok"] == true);
    CHECK(r.to_json() == r.to_json());

    const std::string table = r.to_table();
    CHECK(std::count(table.begin(), table.end(), '\n') == 3);
    CHECK(table.find("PASS") != std::string::npos);
  }
}
