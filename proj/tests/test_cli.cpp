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

/**@file   test_cli.cpp
 * @brief  End-to-end tests of the command-line tool: subprocess runs with
 *         captured output, exit-code contract, and machine-readable output
 *         feeding back through the document parsers.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "checker.hpp"
#include "document.hpp"
#include "test_util.hpp"

using namespace lowprev;
using namespace lowprev::testutil;

namespace {

/** Result of one subprocess run of the command-line tool. */
struct CliRun {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::filesystem::path data_dir() {
  const std::filesystem::path dir(LOWPREV_TEST_DATA_DIR);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream stream(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return buffer.str();
}

std::filesystem::path write_data(const std::string& name,
                                 const std::string& text) {
  const std::filesystem::path path = data_dir() / name;
  std::ofstream stream(path, std::ios::binary | std::ios::trunc);
  stream << text;
  return path;
}

/** Runs the tool with the given arguments (each shell-quoted) and
 *  captures exit code, stdout and stderr through temporary files. */
CliRun run_cli(const std::vector<std::string>& args) {
  const std::filesystem::path out_path = data_dir() / "stdout.txt";
  const std::filesystem::path err_path = data_dir() / "stderr.txt";
  std::string command = "'";
  command += LOWPREV_CLI_PATH;
  command += "'";
  for (const std::string& arg : args) {
    REQUIRE_MESSAGE(arg.find('\'') == std::string::npos,
                    "test arguments must not contain single quotes");
    command += " '" + arg + "'";
  }
  command += " >'" + out_path.string() + "' 2>'" + err_path.string() + "'";
  const int status = std::system(command.c_str());
  CliRun run;
  REQUIRE(status != -1);
  REQUIRE_MESSAGE(WIFEXITED(status), "tool terminated abnormally");
  run.exit_code = WEXITSTATUS(status);
  run.out = slurp(out_path);
  run.err = slurp(err_path);
  return run;
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

/** The two-atom level-3/5 value-at-risk document with named gambles. */
std::string var_document_text() {
  return R"({
  "partition": ["w1", "w2"],
  "gambles": {
    "X": {"w1": "-1", "w2": 2},
    "negX": {"w1": 1, "w2": "-2"},
    "zero": {"w1": 0, "w2": 0}
  },
  "entries": [
    {"gamble": "X", "value": "2"},
    {"gamble": "negX", "value": "1"},
    {"gamble": "zero", "value": "0"}
  ]
})";
}

}  // namespace

TEST_CASE("check reports verdicts with witnesses and exit codes") {
  const Assessment sixteen = sixteen_event_assessment();
  const auto doc_path =
      write_data("sixteen_event.json", assessment_to_json(sixteen).dump(2));

  SUBCASE("a single violated class exits 1 and prints the betting scheme") {
    const CliRun run =
        run_cli({"check", doc_path.string(), "--class", "coherent"});
    CHECK(run.exit_code == 1);
    CHECK(contains(run.out, "coherent: no"));
    CHECK(contains(run.out, "stake "));
    CHECK(contains(run.out, "sup of the gain"));
    CHECK(run.err.empty());
  }

  SUBCASE("the n-variants accept --n and rename the verdict line") {
    const CliRun run = run_cli(
        {"check", doc_path.string(), "--class", "n-coherent", "--n", "3"});
    CHECK(run.exit_code == 0);
    CHECK(contains(run.out, "3-coherent: yes"));
  }

  SUBCASE("the full ladder on a capacity includes the capacity row") {
    const CliRun run = run_cli({"check", doc_path.string(), "--all"});
    CHECK(run.exit_code == 1);  // coherence fails
    CHECK(contains(run.out, "capacity: yes"));
    CHECK(contains(run.out, "2-coherent: yes"));
    CHECK(contains(run.out, "3-coherent: yes"));
    CHECK(contains(run.out, "coherent: no"));
  }

  SUBCASE("an assessment with no entries passes every check") {
    const auto empty_path = write_data(
        "empty.json", R"({"partition": ["a", "b"], "entries": []})");
    const CliRun run = run_cli({"check", empty_path.string(), "--all"});
    CHECK(run.exit_code == 0);
    CHECK(contains(run.out, "coherent: yes"));
  }
}

TEST_CASE("check --json emits a classification that the parser accepts") {
  const Assessment var = var_example_assessment();
  const auto doc_path =
      write_data("var.json", assessment_to_json(var).dump(2));

  const CliRun run = run_cli({"check", doc_path.string(), "--all", "--json"});
  CHECK(run.exit_code == 1);

  const std::vector<ClassificationEntry> reported =
      classification_from_json(Json::parse(run.out), var.partition());
  const std::vector<ClassificationEntry> expected = classify(var);
  REQUIRE(reported.size() == expected.size());
  for (std::size_t i = 0; i < reported.size(); ++i) {
    CHECK(reported[i].class_name == expected[i].class_name);
    CHECK(reported[i].verdict.satisfied == expected[i].verdict.satisfied);
  }

  SUBCASE("a single check also serializes as a classification array") {
    const CliRun one = run_cli(
        {"check", doc_path.string(), "--class", "2-convex", "--json"});
    CHECK(one.exit_code == 0);
    const std::vector<ClassificationEntry> rows =
        classification_from_json(Json::parse(one.out), var.partition());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].class_name == "2-convex");
    CHECK(rows[0].verdict.satisfied);
  }
}

TEST_CASE("extend prints exact values and the infinite tokens") {
  const auto var_path = write_data("var.json", var_document_text());

  SUBCASE("finite values come with the attaining entry and stake") {
    const CliRun run = run_cli({"extend", var_path.string(), "--mode",
                                "2coherent", "--target", "X"});
    CHECK(run.exit_code == 0);
    CHECK(contains(run.out, "] = 2"));
    CHECK(contains(run.out, "attained through entry"));
  }

  SUBCASE("a non-1-AUL assessment extends to +inf under 2-coherence") {
    const auto bad_path = write_data("bad.json", R"({
      "partition": ["w1", "w2"],
      "gambles": {"X": {"w1": 0, "w2": 1}},
      "entries": [{"gamble": "X", "value": "2"}]
    })");
    const CliRun run = run_cli({"extend", bad_path.string(), "--mode",
                                "2coherent", "--target", "1,1"});
    CHECK(run.exit_code == 0);
    CHECK(contains(run.out, "= +inf"));
    CHECK_FALSE(contains(run.out, "stake"));
  }

  SUBCASE("the 2-convex extension can be -inf off the assessed event") {
    const auto sided_path = write_data("sided.json", R"({
      "partition": ["w1", "w2"],
      "gambles": {"X": {"w1": 1, "w2": 0}},
      "events": {"A": ["w1"]},
      "entries": [{"gamble": "X", "cond": "A", "value": "0"}]
    })");
    const CliRun run = run_cli({"extend", sided_path.string(), "--mode",
                                "2convex", "--target", "5,3|w2"});
    CHECK(run.exit_code == 0);
    CHECK(contains(run.out, "= -inf"));
  }

  SUBCASE("the JSON report feeds back through the document parsers") {
    const CliRun run =
        run_cli({"extend", var_path.string(), "--mode", "2coherent",
                 "--target", "X", "--target", "0,0|w2", "--json"});
    CHECK(run.exit_code == 0);
    Json report = Json::parse(run.out);
    CHECK(report.at("mode") == "2coherent");
    REQUIRE(report.at("extensions").size() == 2);

    const AssessmentDocument doc = parse_document(var_document_text());
    Json first = report.at("extensions").at(0);
    const ConditionalGamble target =
        conditional_from_json(first.at("target"), doc.partition);
    CHECK(target == parse_target(doc, "X"));
    first.erase("target");
    const ExtensionReport parsed = extension_from_json(first);
    CHECK(parsed.value == ExtendedValue::finite(Rational(2)));
    REQUIRE(parsed.attaining_entry.has_value());

    Json second = report.at("extensions").at(1);
    second.erase("target");
    const ExtensionReport vacuous = extension_from_json(second);
    CHECK(vacuous.value == ExtendedValue::finite(Rational(0)));
  }
}

TEST_CASE("gbr checks membership of the admissible interval") {
  SUBCASE("prices inside the interval are accepted") {
    const CliRun run =
        run_cli({"gbr", "--gamble-values", "-1,1,5", "--event", "w1,w2",
                 "--r", "1/2", "--q", "-1/4", "--pa", "1/2", "--pxa", "1/4"});
    CHECK(run.exit_code == 0);
    CHECK(contains(run.out, "admissible interval: [-1, 1]"));
    CHECK(contains(run.out, "2-coherent: yes"));
  }

  SUBCASE("a price outside the interval is rejected with a witness") {
    const CliRun run =
        run_cli({"gbr", "--gamble-values", "-1,1,5", "--event", "w1,w2",
                 "--r", "2", "--q", "-1/4", "--pa", "1/2", "--pxa", "1/4"});
    CHECK(run.exit_code == 1);
    CHECK(contains(run.out, "2-coherent: no"));
    CHECK(contains(run.out, "sup of the gain"));
  }

  SUBCASE("coinciding update prices are a usage error") {
    const CliRun run =
        run_cli({"gbr", "--gamble-values", "-1,1,5", "--event", "w1,w2",
                 "--r", "1/2", "--q", "1/2", "--pa", "1/2", "--pxa", "1/4"});
    CHECK(run.exit_code == 2);
    CHECK(contains(run.err, "differ"));
  }

  SUBCASE("the JSON verdict feeds back through the document parsers") {
    const CliRun run = run_cli({"gbr", "--gamble-values", "-1,1,5",
                                "--event", "w1,w2", "--r", "2", "--q",
                                "-1/4", "--pa", "1/2", "--pxa", "1/4",
                                "--json"});
    CHECK(run.exit_code == 1);
    const Json report = Json::parse(run.out);
    CHECK(report.at("interval").at(0) == "-1");
    CHECK(report.at("interval").at(1) == "1");
    auto partition = std::make_shared<const Partition>(
        std::vector<std::string>{"w1", "w2", "w3"});
    const Verdict verdict =
        verdict_from_json(report.at("verdict"), partition);
    CHECK_FALSE(verdict.satisfied);
    REQUIRE(verdict.witness.has_value());
    CHECK(verdict.witness->sup_value < 0);
  }
}

TEST_CASE("var prints the derived previsions and the axiom diagnosis") {
  const auto var_path = write_data("var.json", var_document_text());

  SUBCASE("level 3/5 dominates the conjugate and fails 2-coherence") {
    const CliRun run = run_cli({"var", "--gambles", var_path.string(),
                                "--probs", "1/2,1/2", "--alpha", "3/5"});
    CHECK(run.exit_code == 1);
    CHECK(contains(run.out, "P^V(X) = 2"));
    CHECK(contains(run.out, "P^V(negX) = 1"));
    CHECK(contains(run.out, "P^V(zero) = 0"));
    CHECK(contains(run.out, "centered: yes"));
    CHECK(contains(run.out, "2-convex: yes"));
    CHECK(contains(run.out, "2-coherent: no (A6, \xce\xbb=-1)"));
    CHECK(contains(run.out, "conjugate dominance: no"));
  }

  SUBCASE("level 1/4 lands on the lower quantiles and is 2-coherent") {
    const CliRun run = run_cli({"var", "--gambles", var_path.string(),
                                "--probs", "1/2,1/2", "--alpha", "1/4"});
    CHECK(run.exit_code == 0);
    CHECK(contains(run.out, "P^V(X) = -1"));
    CHECK(contains(run.out, "2-coherent: yes"));
    CHECK(contains(run.out, "conjugate dominance: yes"));
  }

  SUBCASE("the JSON verdicts feed back through the document parsers") {
    const CliRun run = run_cli({"var", "--gambles", var_path.string(),
                                "--probs", "1/2,1/2", "--alpha", "3/5",
                                "--json"});
    CHECK(run.exit_code == 1);
    const Json report = Json::parse(run.out);
    CHECK(report.at("alpha") == "3/5");
    CHECK(report.at("diagnosis").at("axiom") == "A6");
    CHECK(report.at("diagnosis").at("lambda") == "-1");
    const AssessmentDocument doc = parse_document(var_document_text());
    for (const char* key : {"centered", "2-convex"}) {
      CHECK(verdict_from_json(report.at(key), doc.partition).satisfied);
    }
    for (const char* key : {"2-coherent", "conjugate_dominance"}) {
      const Verdict verdict =
          verdict_from_json(report.at(key), doc.partition);
      CHECK_FALSE(verdict.satisfied);
      REQUIRE(verdict.witness.has_value());
      CHECK(verdict.witness->sup_value < 0);
    }
  }
}

TEST_CASE("usage and parse errors exit 2 with a message on stderr") {
  const auto var_path = write_data("var.json", var_document_text());

  SUBCASE("--class and --all are mutually exclusive and one is required") {
    CHECK(run_cli({"check", var_path.string()}).exit_code == 2);
    CHECK(run_cli({"check", var_path.string(), "--class", "coherent",
                   "--all"})
              .exit_code == 2);
  }

  SUBCASE("an unknown class name is rejected by the library") {
    const CliRun run =
        run_cli({"check", var_path.string(), "--class", "mystery"});
    CHECK(run.exit_code == 2);
    CHECK(contains(run.err, "unknown consistency class"));
  }

  SUBCASE("a missing input file is reported") {
    const CliRun run =
        run_cli({"check", data_dir().string() + "/nope.json", "--all"});
    CHECK(run.exit_code == 2);
    CHECK(contains(run.err, "cannot read"));
  }

  SUBCASE("a document with a misspelled field names the offender") {
    const auto typo_path = write_data(
        "typo.json", R"({"partition": ["a"], "entres": []})");
    const CliRun run = run_cli({"check", typo_path.string(), "--all"});
    CHECK(run.exit_code == 2);
    CHECK(contains(run.err, "unknown field \"entres\""));
  }

  SUBCASE("an unknown subcommand is a usage error") {
    CHECK(run_cli({"frobnicate"}).exit_code == 2);
    CHECK(run_cli({}).exit_code == 2);
  }
}
