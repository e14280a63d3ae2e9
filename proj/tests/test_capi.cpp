// Exercises the extern "C" surface of the shared library: handle lifecycle,
// error codes, and determinism of the serialized outputs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <string>

#include "ietlab/ietlab.h"

namespace {

struct StringOut {
  char* ptr = nullptr;
  ~StringOut() { ietlab_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct IetHandle {
  ietlab_iet* ptr = nullptr;
  ~IetHandle() { ietlab_iet_free(ptr); }
};

struct CatalogHandle {
  ietlab_catalog* ptr = nullptr;
  ~CatalogHandle() { ietlab_catalog_free(ptr); }
};

}  // namespace

TEST_CASE("version and null handling") {
  CHECK_FALSE(std::string(ietlab_version()).empty());
  CHECK(ietlab_iet_create(nullptr, "1/2, 1/2", 0, nullptr) == IETLAB_ERR_NULL);
  StringOut out;
  CHECK(ietlab_perm_report_json(nullptr, &out.ptr) == IETLAB_ERR_NULL);
}

TEST_CASE("iet creation and validation errors") {
  IetHandle t;
  CHECK(ietlab_iet_create("2 1", "2/3, 1/3", 0, &t.ptr) == IETLAB_OK);
  REQUIRE(t.ptr != nullptr);

  IetHandle bad;
  CHECK(ietlab_iet_create("2 2", "2/3, 1/3", 0, &bad.ptr) == IETLAB_ERR_INVALID);
  CHECK(std::string(ietlab_last_error()).find("bijection") != std::string::npos);

  CHECK(ietlab_iet_create("2 1", "2/3, 1/5", 0, &bad.ptr) == IETLAB_ERR_INVALID);
  CHECK(std::string(ietlab_last_error()).find("normalize") != std::string::npos);
  CHECK(ietlab_iet_create("2 1", "2/3, 1/5", 1, &bad.ptr) == IETLAB_OK);

  IetHandle parse_fail;
  CHECK(ietlab_iet_create("2 1", "2/3, 1//5", 0, &parse_fail.ptr) == IETLAB_ERR_PARSE);
  CHECK(ietlab_iet_create("2 1", "sqrt(2)-1, 2-sqrt(3)", 1, &parse_fail.ptr) ==
        IETLAB_ERR_INVALID);  // mixed radicands
}

TEST_CASE("perm report json") {
  StringOut out;
  REQUIRE(ietlab_perm_report_json("3 2 1", &out.ptr) == IETLAB_OK);
  auto j = nlohmann::json::parse(out.str());
  CHECK(j["irreducible"] == true);
  CHECK(j["type_w"] == true);
  CHECK(j["sigma"] == nlohmann::json::array({2, 3, 0, 1}));
}

TEST_CASE("builtin catalog and analyze determinism") {
  CatalogHandle cat;
  REQUIRE(ietlab_catalog_builtin(&cat.ptr) == IETLAB_OK);

  StringOut listing;
  REQUIRE(ietlab_catalog_list_json(cat.ptr, &listing.ptr) == IETLAB_OK);
  auto j = nlohmann::json::parse(listing.str());
  CHECK(j.size() >= 3);

  IetHandle golden;
  REQUIRE(ietlab_catalog_build(cat.ptr, "golden", &golden.ptr) == IETLAB_OK);
  IetHandle nope;
  CHECK(ietlab_catalog_build(cat.ptr, "nope", &nope.ptr) == IETLAB_ERR_INVALID);

  const char* params = "{\"N\": 40, \"catalog_name\": \"golden\"}";
  StringOut first, second;
  REQUIRE(ietlab_analyze_json(golden.ptr, params, &first.ptr) == IETLAB_OK);
  REQUIRE(ietlab_analyze_json(golden.ptr, params, &second.ptr) == IETLAB_OK);
  CHECK(first.str() == second.str());
  CHECK(first.str().find("\"catalog_name\": \"golden\"") != std::string::npos);

  StringOut invalid;
  CHECK(ietlab_analyze_json(golden.ptr, "{\"N\": 0}", &invalid.ptr) == IETLAB_ERR_INVALID);
  CHECK(ietlab_analyze_json(golden.ptr, "not json", &invalid.ptr) == IETLAB_ERR_PARSE);
}

TEST_CASE("sweep and tower outputs") {
  CatalogHandle cat;
  REQUIRE(ietlab_catalog_builtin(&cat.ptr) == IETLAB_OK);
  IetHandle golden;
  REQUIRE(ietlab_catalog_build(cat.ptr, "golden", &golden.ptr) == IETLAB_OK);

  StringOut csv;
  REQUIRE(ietlab_eps_sweep_csv(golden.ptr, 10, 12, &csv.ptr) == IETLAB_OK);
  std::string csv_text = csv.str();
  CHECK(std::count(csv_text.begin(), csv_text.end(), '\n') == 11);

  StringOut rig;
  REQUIRE(ietlab_rigidity_csv(golden.ptr, 10, "1/100", nullptr, 12, &rig.ptr) == IETLAB_OK);
  std::string rig_text = rig.str();
  CHECK(std::count(rig_text.begin(), rig_text.end(), '\n') == 11);

  StringOut rig_json;
  REQUIRE(ietlab_rigidity_json(golden.ptr, 10, "1/100", "", 12, &rig_json.ptr) == IETLAB_OK);
  CHECK(nlohmann::json::parse(rig_json.str())["rows"].size() == 10);

  StringOut tower;
  REQUIRE(ietlab_tower_json(golden.ptr, nullptr, nullptr, 5, 12, &tower.ptr) == IETLAB_OK);
  auto tj = nlohmann::json::parse(tower.str());
  CHECK(tj["p_plus_q_ge_n_minus_1"] == true);

  StringOut tower2;
  REQUIRE(ietlab_tower_json(golden.ptr, "0", "1/100", 3, 12, &tower2.ptr) == IETLAB_OK);
  CHECK(ietlab_tower_json(golden.ptr, "0", nullptr, 3, 12, &tower2.ptr) == IETLAB_ERR_NULL);

  // domain error: tower over a collided partition
  IetHandle third;
  REQUIRE(ietlab_catalog_build(cat.ptr, "third", &third.ptr) == IETLAB_OK);
  StringOut bad;
  CHECK(ietlab_tower_json(third.ptr, nullptr, nullptr, 5, 12, &bad.ptr) == IETLAB_ERR_DOMAIN);
}

TEST_CASE("catalog file loading through the C api") {
  CatalogHandle missing;
  CHECK(ietlab_catalog_load("no_such_catalog.txt", &missing.ptr) == IETLAB_ERR_IO);
}
