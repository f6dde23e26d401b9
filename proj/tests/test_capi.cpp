// Exercises the C interface through the shared library alone: handles, status
// codes, error records, and the JSON pipelines. This binary deliberately
// avoids the C++ core headers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <string>

#include "otd/otd.h"

using Json = nlohmann::json;

namespace {

std::string take(char* p) {
  std::string s = p ? p : "";
  otd_string_free(p);
  return s;
}

Json last_error() { return Json::parse(std::string(otd_last_error())); }

}  // namespace

TEST_CASE("version and error bookkeeping") {
  CHECK(std::string(otd_version()) == "1.0.0");
  otd_string_free(nullptr);  // must be a no-op

  otd_graph* g = nullptr;
  CHECK(otd_graph_parse("not json", &g) == OTD_E_INVALID_INPUT);
  Json err = last_error();
  CHECK(err["code"] == 1);
  CHECK(err["error"] == "invalid-input");
  CHECK(otd_graph_parse(nullptr, &g) == OTD_E_INVALID_INPUT);
  CHECK(otd_graph_emit(nullptr, nullptr) == OTD_E_INVALID_INPUT);
}

TEST_CASE("graph handles: generate, count, emit, parse") {
  otd_graph* g = nullptr;
  REQUIRE(otd_graph_gen(R"({"family":"grid","n":3})", &g) == OTD_OK);
  int n = 0;
  long long m = 0;
  CHECK(otd_graph_counts(g, &n, &m) == OTD_OK);
  CHECK(n == 9);
  CHECK(m == 12);

  char* json = nullptr;
  REQUIRE(otd_graph_emit(g, &json) == OTD_OK);
  std::string text = take(json);
  otd_graph* g2 = nullptr;
  REQUIRE(otd_graph_parse(text.c_str(), &g2) == OTD_OK);
  char* json2 = nullptr;
  REQUIRE(otd_graph_emit(g2, &json2) == OTD_OK);
  CHECK(take(json2) == text);

  char* dot = nullptr;
  REQUIRE(otd_graph_dot(g, &dot) == OTD_OK);
  CHECK(take(dot).rfind("graph {", 0) == 0);

  otd_graph_free(g);
  otd_graph_free(g2);

  otd_graph* bad = nullptr;
  CHECK(otd_graph_gen(R"({"family":"nope","n":3})", &bad) == OTD_E_INVALID_INPUT);
}

TEST_CASE("decomposition handles and validation codes") {
  otd_graph* g = nullptr;
  REQUIRE(otd_graph_gen(R"({"family":"grid","n":2})", &g) == OTD_OK);

  otd_decomp* d = nullptr;
  REQUIRE(otd_decomp_parse(R"({"kind":"path","bags":[[0,1,2],[1,2,3]]})", &d) == OTD_OK);
  char* report = nullptr;
  CHECK(otd_decomp_validate(d, g, &report) == OTD_OK);
  Json rep = Json::parse(take(report));
  CHECK(rep["valid"] == true);
  CHECK(rep["width"] == 2);

  otd_decomp* broken = nullptr;
  REQUIRE(otd_decomp_parse(R"({"kind":"path","bags":[[0,1],[2,3]]})", &broken) == OTD_OK);
  char* report2 = nullptr;
  CHECK(otd_decomp_validate(broken, g, &report2) == OTD_E_VALIDATION);
  Json rep2 = Json::parse(take(report2));
  CHECK(rep2["valid"] == false);
  CHECK(last_error()["code"] == 2);

  char* measures = nullptr;
  REQUIRE(otd_decomp_measures(d, &measures) == OTD_OK);
  CHECK(Json::parse(take(measures))["magnitude"] == 6);

  otd_decomp_free(d);
  otd_decomp_free(broken);
  otd_graph_free(g);
}

TEST_CASE("construct pipeline feeds the orthogonality query") {
  char* reply = nullptr;
  REQUIRE(otd_construct(R"({"kind":"grid-pair","n":3})", &reply) == OTD_OK);
  Json pair = Json::parse(take(reply));
  otd_decomp* d1 = nullptr;
  otd_decomp* d2 = nullptr;
  REQUIRE(otd_decomp_parse(pair["first"].dump().c_str(), &d1) == OTD_OK);
  REQUIRE(otd_decomp_parse(pair["second"].dump().c_str(), &d2) == OTD_OK);
  int value = 0;
  CHECK(otd_orthogonality(d1, d2, &value) == OTD_OK);
  CHECK(value == 4);
  otd_decomp_free(d1);
  otd_decomp_free(d2);
}

TEST_CASE("rect pipeline: adversarial oracle through the C surface") {
  char* reply = nullptr;
  REQUIRE(otd_rect(R"({"op":"clique","k":4,"oracle":"stall-h"})", &reply) == OTD_OK);
  Json j = Json::parse(take(reply));
  CHECK(j["exit"] == "nesting");
  CHECK(j["levels"] == 5);
  CHECK(j["rects"].size() == 4);

  char* bad = nullptr;
  CHECK(otd_rect(R"({"op":"clique","k":0,"oracle":"random"})", &bad) == OTD_E_INVALID_INPUT);
}

TEST_CASE("oracle pipeline reports exact values") {
  char* reply = nullptr;
  REQUIRE(otd_oracle(R"({"op":"tw","graph":{"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}})",
                     &reply) == OTD_OK);
  Json j = Json::parse(take(reply));
  CHECK(j["value"] == 3);

  char* capped = nullptr;
  std::string big = R"({"op":"tw","cap":2,"graph":{"n":4,"edges":[[0,1],[1,2],[2,3]]}})";
  CHECK(otd_oracle(big.c_str(), &capped) == OTD_E_CAP_EXCEEDED);
  CHECK(last_error()["code"] == 3);
}
