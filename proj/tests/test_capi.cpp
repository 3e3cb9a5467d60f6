#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ogkit/ogkit.h"

#include <fstream>
#include <sstream>
#include <string>

#ifndef OGKIT_TEST_DATA
#error "OGKIT_TEST_DATA must name the example directory"
#endif

namespace {

std::string data(const std::string& name) {
  std::ifstream in(std::string(OGKIT_TEST_DATA) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ogk_groupoid* groupoid(const std::string& name) {
  ogk_groupoid* g = nullptr;
  REQUIRE(ogk_groupoid_from_json(data(name).c_str(), &g) == OGK_OK);
  return g;
}

ogk_module* module(const ogk_groupoid* g, const std::string& name) {
  ogk_module* m = nullptr;
  REQUIRE(ogk_module_from_json(g, data(name).c_str(), &m) == OGK_OK);
  return m;
}

bool contains(const char* hay, const std::string& needle) { return std::string(hay).find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(ogk_version()) == "1.0.0");
  CHECK(std::string(ogk_status_name(OGK_OK)) == "ok");
  CHECK(std::string(ogk_status_name(OGK_BUDGET_EXCEEDED)) == "budget exceeded");
  CHECK(std::string(ogk_status_name(static_cast<ogk_status>(42))) == "unknown");
}

TEST_CASE("null arguments") {
  ogk_groupoid* g = nullptr;
  CHECK(ogk_groupoid_from_json(nullptr, &g) == OGK_INVALID_ARGUMENT);
  CHECK(std::string(ogk_last_error()) == "null argument");
  CHECK(ogk_groupoid_from_json("{}", nullptr) == OGK_INVALID_ARGUMENT);
  ogk_report* r = nullptr;
  CHECK(ogk_validate(nullptr, &r) == OGK_INVALID_ARGUMENT);
  CHECK(r == nullptr);
  CHECK(ogk_cohomology(nullptr, nullptr, 1, 0, &r) == OGK_INVALID_ARGUMENT);
  CHECK(ogk_five_term(nullptr, nullptr, &r) == OGK_INVALID_ARGUMENT);
  CHECK(ogk_groupoid_size(nullptr) == 0);
  CHECK(ogk_extension_quotient(nullptr) == nullptr);
  CHECK(std::string(ogk_report_text(nullptr)).empty());
  CHECK(ogk_report_passed(nullptr) == 0);
  ogk_groupoid_free(nullptr);
  ogk_module_free(nullptr);
  ogk_extension_free(nullptr);
  ogk_report_free(nullptr);
}

TEST_CASE("parse errors carry a location") {
  ogk_groupoid* g = nullptr;
  CHECK(ogk_groupoid_from_json(data("malformed.json").c_str(), &g) == OGK_PARSE_ERROR);
  CHECK(g == nullptr);
  CHECK(contains(ogk_last_error(), "line"));
  const char* bad_ref = R"({"objects":["e"],"morphisms":[{"id":"a","d":"x","r":"e","inv":"a"}]})";
  CHECK(ogk_groupoid_from_json(bad_ref, &g) == OGK_PARSE_ERROR);
  CHECK(contains(ogk_last_error(), "morphisms[0].d"));
}

TEST_CASE("validate reports") {
  ogk_groupoid* g = groupoid("groupoid_C2.json");
  CHECK(ogk_groupoid_size(g) == 2);
  ogk_report* r = nullptr;
  CHECK(ogk_validate(g, &r) == OGK_OK);
  REQUIRE(r != nullptr);
  CHECK(ogk_report_passed(r) == 1);
  CHECK(contains(ogk_report_text(r), "OG1"));
  CHECK(contains(ogk_report_json(r), "\"passed\": true"));
  ogk_report_free(r);
  ogk_groupoid_free(g);

  g = groupoid("groupoid_broken_OG3.json");
  r = nullptr;
  CHECK(ogk_validate(g, &r) == OGK_VIOLATION);
  REQUIRE(r != nullptr);
  CHECK(ogk_report_passed(r) == 0);
  CHECK(contains(ogk_report_text(r), "OG3"));
  ogk_report_free(r);
  ogk_module* m = nullptr;
  CHECK(ogk_module_from_json(g, data("module_clifford_c2_Z2.json").c_str(), &m) == OGK_VIOLATION);
  CHECK(m == nullptr);
  ogk_groupoid_free(g);

  g = groupoid("groupoid_Z4_not_subgroupoid.json");
  CHECK(ogk_validate(g, &r) == OGK_VIOLATION);
  CHECK(contains(ogk_report_text(r), "SUBGROUPOID"));
  ogk_report_free(r);
  ogk_groupoid_free(g);
}

TEST_CASE("cohomology through the C interface") {
  ogk_groupoid* g = groupoid("groupoid_C2.json");
  ogk_module* m = module(g, "module_C2_Z2.json");
  ogk_report* r = nullptr;
  CHECK(ogk_cohomology(g, m, 2, 1, &r) == OGK_OK);
  CHECK(contains(ogk_report_text(r), "H^2 = Z/2"));
  ogk_report_free(r);

  ogk_groupoid* other = groupoid("groupoid_C2.json");
  CHECK(ogk_cohomology(other, m, 2, 1, &r) == OGK_INVALID_ARGUMENT);
  CHECK(r == nullptr);
  ogk_groupoid_free(other);

  ogk_module* bad = nullptr;
  CHECK(ogk_module_from_json(g, data("module_C2_not_functor.json").c_str(), &bad) == OGK_OK);
  CHECK(ogk_cohomology(g, bad, 1, 0, &r) == OGK_VIOLATION);
  REQUIRE(r != nullptr);
  CHECK(contains(ogk_report_text(r), "FUNCTOR"));
  ogk_report_free(r);
  ogk_module_free(bad);
  ogk_module_free(m);
  ogk_groupoid_free(g);
}

TEST_CASE("classify and budget") {
  ogk_groupoid* g = groupoid("groupoid_C3.json");
  ogk_module* m = module(g, "module_C3_Z3.json");
  ogk_report* r = nullptr;
  CHECK(ogk_classify(g, m, 0, &r) == OGK_OK);
  CHECK(contains(ogk_report_text(r), "#classes = 3, |H^2| = 3"));
  ogk_report_free(r);
  r = nullptr;
  CHECK(ogk_classify(g, m, 10, &r) == OGK_BUDGET_EXCEEDED);
  CHECK(r == nullptr);
  CHECK(contains(ogk_last_error(), "budget"));
  ogk_module_free(m);
  ogk_groupoid_free(g);
}

TEST_CASE("five-term through the C interface") {
  ogk_extension* e = nullptr;
  REQUIRE(ogk_extension_from_json(data("extension_Z4_over_C2.json").c_str(), &e) == OGK_OK);
  const ogk_groupoid* q = ogk_extension_quotient(e);
  REQUIRE(q != nullptr);
  ogk_module* m = module(q, "module_C2_Z2.json");
  ogk_report* r = nullptr;
  CHECK(ogk_five_term(e, m, &r) == OGK_OK);
  CHECK(contains(ogk_report_text(r), "verdict: PASS"));
  ogk_report_free(r);
  ogk_groupoid* unrelated = groupoid("groupoid_C2.json");
  ogk_module* m2 = module(unrelated, "module_C2_Z2.json");
  CHECK(ogk_five_term(e, m2, &r) == OGK_INVALID_ARGUMENT);
  ogk_module_free(m2);
  ogk_groupoid_free(unrelated);
  ogk_module_free(m);
  ogk_extension_free(e);
}

TEST_CASE("structure report with and without a module") {
  ogk_groupoid* g = groupoid("groupoid_clifford.json");
  ogk_report* r = nullptr;
  CHECK(ogk_structure_report(g, nullptr, &r) == OGK_OK);
  CHECK(contains(ogk_report_text(r), "left cancellative: PASS"));
  ogk_report_free(r);
  ogk_module* m = module(g, "module_clifford_c2_ZG.json");
  CHECK(ogk_structure_report(g, m, &r) == OGK_OK);
  CHECK(contains(ogk_report_text(r), "Z + Z"));
  ogk_report_free(r);
  ogk_module_free(m);
  ogk_groupoid_free(g);
}
