/* * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * */
/*                                                                           */
/*  This file is part of lowprev, an exact-arithmetic library for weak       */
/*  consistency of conditional lower previsions.                             */
/*                                                                           */
/*  Copyright (c) 2026 The lowprev developers                                */
/*                                                                           */
/*  Licensed under the Apache License, Version 2.0 (the "License");          */
/*  you may not use this file except in compliance with the License.         */
/*  You may obtain a copy of the License at                                  */
/*                                                                           */
/*      http://www.apache.org/licenses/LICENSE-2.0                           */
/*                                                                           */
/*  Unless required by applicable law or agreed to in writing, software      */
/*  distributed under the License is distributed on an "AS IS" BASIS,        */
/*  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. */
/*  See the License for the specific language governing permissions and      */
/*  limitations under the License.                                           */
/*                                                                           */
/* * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * */

/**@file   test_capi.cpp
 * @brief  Tests for the C interface through the shared library alone:
 *         handles, status codes, error messages, and the JSON reports.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include <lowprev/lowprev.h>

using nlohmann::json;

namespace {

/** Takes ownership of a C string from the library. */
std::string take(char* text) {
  REQUIRE(text != nullptr);
  std::string copy(text);
  lowprev_string_free(text);
  return copy;
}

/** Scoped document handle. */
struct Doc {
  LowprevDocument* handle = nullptr;
  explicit Doc(const std::string& text) {
    REQUIRE(lowprev_document_parse(text.c_str(), &handle) == LOWPREV_OK);
  }
  ~Doc() { lowprev_document_free(handle); }
  Doc(const Doc&) = delete;
  Doc& operator=(const Doc&) = delete;
};

const char* kVarDocument = R"({
  "partition": ["w1", "w2"],
  "gambles": {
    "X":    {"w1": "-1", "w2": "2"},
    "negX": {"w1": "1", "w2": "-2"},
    "zero": {"w1": "0", "w2": "0"}
  },
  "entries": [
    {"gamble": "X", "value": "2"},
    {"gamble": "negX", "value": "1"},
    {"gamble": "zero", "value": "0"}
  ]
})";

const char* kBadDocument = R"({
  "partition": ["w1", "w2"],
  "gambles": {"X": {"w1": "0", "w2": "1"}},
  "entries": [{"gamble": "X", "value": "2"}]
})";

}  // namespace

TEST_CASE("version and error plumbing") {
  CHECK(std::strcmp(lowprev_version(), "1.0.0") == 0);
  CHECK(lowprev_last_error() != nullptr);
  lowprev_string_free(nullptr);
  lowprev_document_free(nullptr);
  CHECK(LOWPREV_ERROR_PRECONDITION != LOWPREV_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("documents parse into handles with counts") {
  Doc doc(kVarDocument);
  size_t atoms = 0;
  size_t entries = 0;
  REQUIRE(lowprev_document_atom_count(doc.handle, &atoms) == LOWPREV_OK);
  REQUIRE(lowprev_document_entry_count(doc.handle, &entries) == LOWPREV_OK);
  CHECK(atoms == 2);
  CHECK(entries == 3);
}

TEST_CASE("parse failures report context and leave outputs untouched") {
  LowprevDocument* sentinel = reinterpret_cast<LowprevDocument*>(0x1);
  LowprevDocument* handle = sentinel;
  CHECK(lowprev_document_parse("{", &handle) ==
        LOWPREV_ERROR_INVALID_ARGUMENT);
  CHECK(handle == sentinel);
  CHECK(std::string(lowprev_last_error()).find("invalid JSON") !=
        std::string::npos);

  CHECK(lowprev_document_parse(
            R"({"partition": ["a"], "entrees": []})", &handle) ==
        LOWPREV_ERROR_INVALID_ARGUMENT);
  CHECK(std::string(lowprev_last_error()).find("entrees") !=
        std::string::npos);

  CHECK(lowprev_document_parse(nullptr, &handle) ==
        LOWPREV_ERROR_INVALID_ARGUMENT);
  CHECK(lowprev_document_parse("{}", nullptr) ==
        LOWPREV_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("single checks return verdict objects") {
  Doc var(kVarDocument);
  char* out = nullptr;

  REQUIRE(lowprev_check(var.handle, "2-convex", 0, &out) == LOWPREV_OK);
  CHECK(json::parse(take(out)).at("satisfied").get<bool>());

  REQUIRE(lowprev_check(var.handle, "2-coherent", 0, &out) == LOWPREV_OK);
  const json coherent = json::parse(take(out));
  CHECK_FALSE(coherent.at("satisfied").get<bool>());
  REQUIRE(coherent.contains("witness"));
  CHECK(coherent.at("witness").at("sup").get<std::string>().front() == '-');
  REQUIRE(coherent.at("witness").at("terms").is_array());
  for (const json& term : coherent.at("witness").at("terms")) {
    CHECK(term.at("stake").is_string());
    CHECK(term.at("value").is_string());
  }

  Doc bad(kBadDocument);
  REQUIRE(lowprev_check(bad.handle, "1-AUL", 0, &out) == LOWPREV_OK);
  CHECK_FALSE(json::parse(take(out)).at("satisfied").get<bool>());

  REQUIRE(lowprev_check(var.handle, "n-coherent", 3, &out) == LOWPREV_OK);
  CHECK_FALSE(json::parse(take(out)).at("satisfied").get<bool>());
}

TEST_CASE("unknown classes and broken preconditions are distinct errors") {
  Doc var(kVarDocument);
  char* out = nullptr;

  CHECK(lowprev_check(var.handle, "herculean", 0, &out) ==
        LOWPREV_ERROR_INVALID_ARGUMENT);
  CHECK(std::string(lowprev_last_error())
            .find("unknown consistency class") != std::string::npos);

  // The capacity check demands a full-powerset indicator domain.
  CHECK(lowprev_check(var.handle, "capacity", 0, &out) ==
        LOWPREV_ERROR_PRECONDITION);

  // Gain counts below the scheme minimum are argument errors.
  CHECK(lowprev_check(var.handle, "n-convex", 0, &out) ==
        LOWPREV_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("classification covers the full ladder") {
  Doc var(kVarDocument);
  char* out = nullptr;
  REQUIRE(lowprev_classify(var.handle, &out) == LOWPREV_OK);
  const json table = json::parse(take(out));
  REQUIRE(table.is_array());

  bool saw_2convex = false;
  bool saw_2coherent = false;
  bool saw_coherent = false;
  for (const json& row : table) {
    const std::string name = row.at("class").get<std::string>();
    const bool satisfied =
        row.at("verdict").at("satisfied").get<bool>();
    if (name == "2-convex") {
      saw_2convex = true;
      CHECK(satisfied);
    }
    if (name == "2-coherent") {
      saw_2coherent = true;
      CHECK_FALSE(satisfied);
    }
    if (name == "coherent") {
      saw_coherent = true;
      CHECK_FALSE(satisfied);
    }
  }
  CHECK(saw_2convex);
  CHECK(saw_2coherent);
  CHECK(saw_coherent);
}

TEST_CASE("extension reports carry exact values and infinity tokens") {
  Doc var(kVarDocument);
  char* out = nullptr;
  const char* targets[] = {"X", "0,0|w2", "1,-1"};
  REQUIRE(lowprev_extend(var.handle, "2coherent", targets, 3, &out) ==
          LOWPREV_OK);
  const json report = json::parse(take(out));
  CHECK(report.at("mode") == "2coherent");
  REQUIRE(report.at("extensions").size() == 3);
  // The assessment reproduces its own entry.
  CHECK(report.at("extensions").at(0).at("value") == "2");
  CHECK(report.at("extensions").at(0).contains("stake"));

  // A value above its conditional supremum drives the free-stake
  // extension to +inf.
  Doc bad(kBadDocument);
  const char* any[] = {"1,-1"};
  REQUIRE(lowprev_extend(bad.handle, "2coherent", any, 1, &out) ==
          LOWPREV_OK);
  const json unbounded = json::parse(take(out));
  CHECK(unbounded.at("extensions").at(0).at("value") == "+inf");
  CHECK_FALSE(unbounded.at("extensions").at(0).contains("stake"));

  // With no admissible entry the unit-stake extension is -inf.
  Doc sided(R"({
    "partition": ["w1", "w2"],
    "entries": [{"gamble": {"w1": "1", "w2": "0"},
                 "cond": ["w1"], "value": "0"}]
  })");
  const char* off[] = {"-1,2|w2"};
  REQUIRE(lowprev_extend(sided.handle, "2convex", off, 1, &out) ==
          LOWPREV_OK);
  const json vacuous = json::parse(take(out));
  CHECK(vacuous.at("extensions").at(0).at("value") == "-inf");

  CHECK(lowprev_extend(var.handle, "fast", targets, 3, &out) ==
        LOWPREV_ERROR_INVALID_ARGUMENT);
  const char* unknown[] = {"Y"};
  CHECK(lowprev_extend(var.handle, "2convex", unknown, 1, &out) ==
        LOWPREV_ERROR_INVALID_ARGUMENT);
  CHECK(lowprev_extend(var.handle, "2convex", targets, 0, &out) ==
        LOWPREV_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("the conditioning family check reports interval and verdict") {
  char* out = nullptr;
  REQUIRE(lowprev_gbr("-1,1,5", "w1,w2", "1/2", "-1/4", "1/2", "1/4",
                      &out) == LOWPREV_OK);
  const json inside = json::parse(take(out));
  CHECK(inside.at("interval").at(0) == "-1");
  CHECK(inside.at("interval").at(1) == "1");
  CHECK(inside.at("verdict").at("satisfied").get<bool>());

  REQUIRE(lowprev_gbr("-1,1,5", "w1,w2", "2", "-1/4", "1/2", "1/4",
                      &out) == LOWPREV_OK);
  const json outside = json::parse(take(out));
  CHECK_FALSE(outside.at("verdict").at("satisfied").get<bool>());
  CHECK(outside.at("verdict").contains("witness"));

  // r = q is rejected as a precondition, not an argument defect.
  CHECK(lowprev_gbr("-1,1,5", "w1,w2", "1/2", "1/2", "1/2", "1/4", &out) ==
        LOWPREV_ERROR_PRECONDITION);
  CHECK(lowprev_gbr("-1,1,x", "w1,w2", "1/2", "-1/4", "1/2", "1/4", &out) ==
        LOWPREV_ERROR_INVALID_ARGUMENT);
  CHECK(lowprev_gbr("-1,1,5", "w9", "1/2", "-1/4", "1/2", "1/4", &out) ==
        LOWPREV_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("the value-at-risk report prices gambles and diagnoses A6") {
  Doc var(kVarDocument);
  char* out = nullptr;
  REQUIRE(lowprev_var(var.handle, "1/2,1/2", "3/5", &out) == LOWPREV_OK);
  const json report = json::parse(take(out));
  CHECK(report.at("alpha") == "3/5");

  bool saw_x = false;
  bool saw_negx = false;
  for (const json& row : report.at("values")) {
    if (row.at("name") == "X") {
      saw_x = true;
      CHECK(row.at("value") == "2");
    }
    if (row.at("name") == "negX") {
      saw_negx = true;
      CHECK(row.at("value") == "1");
    }
  }
  CHECK(saw_x);
  CHECK(saw_negx);

  CHECK(report.at("centered").at("satisfied").get<bool>());
  CHECK(report.at("2-convex").at("satisfied").get<bool>());
  CHECK_FALSE(report.at("2-coherent").at("satisfied").get<bool>());
  CHECK_FALSE(
      report.at("conjugate_dominance").at("satisfied").get<bool>());
  REQUIRE(report.contains("diagnosis"));
  CHECK(report.at("diagnosis").at("axiom") == "A6");
  CHECK(report.at("diagnosis").at("lambda") == "-1");

  // A lower quantile level moves the prevision to the other image value.
  REQUIRE(lowprev_var(var.handle, "1/2,1/2", "1/4", &out) == LOWPREV_OK);
  const json low = json::parse(take(out));
  for (const json& row : low.at("values")) {
    if (row.at("name") == "X") {
      CHECK(row.at("value") == "-1");
    }
  }

  CHECK(lowprev_var(var.handle, "1/2,1/2", "2", &out) ==
        LOWPREV_ERROR_INVALID_ARGUMENT);
  CHECK(lowprev_var(var.handle, "1/2", "3/5", &out) ==
        LOWPREV_ERROR_INVALID_ARGUMENT);
  CHECK(lowprev_var(var.handle, "1/2,1/4", "3/5", &out) ==
        LOWPREV_ERROR_INVALID_ARGUMENT);
}
