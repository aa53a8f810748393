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

/**@file   lowprev_cli.cpp
 * @brief  Command-line front end: parses assessment documents, runs
 *         consistency checks and natural extensions through the C API,
 *         and renders human tables or machine-readable JSON.
 *
 * Exit codes: 0 when every requested check is satisfied, 1 when some
 * check is violated, 2 on usage or parse errors.
 */

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <lowprev/lowprev.h>

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;

/** Prints the library's error message and maps the status to an exit
 *  code (all library failures are input defects from the CLI's view). */
int report_failure(const std::string& where) {
  std::cerr << "lowprev: " << where << ": " << lowprev_last_error() << "\n";
  return kExitUsage;
}

/** Takes ownership of a string returned by the library. */
std::string take(char* text) {
  std::string copy(text ? text : "");
  lowprev_string_free(text);
  return copy;
}

struct DocumentDeleter {
  void operator()(LowprevDocument* doc) const { lowprev_document_free(doc); }
};
using DocumentPtr = std::unique_ptr<LowprevDocument, DocumentDeleter>;

/** Reads a whole file; empty optional-style flag via ok. */
bool read_file(const std::string& path, std::string& out) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) {
    return false;
  }
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  out = buffer.str();
  return true;
}

/** Parses a document file into a handle, or reports and returns null. */
DocumentPtr load_document(const std::string& path, int& exit_code) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "lowprev: cannot read \"" << path << "\"\n";
    exit_code = kExitUsage;
    return nullptr;
  }
  LowprevDocument* handle = nullptr;
  if (lowprev_document_parse(text.c_str(), &handle) != LOWPREV_OK) {
    exit_code = report_failure(path);
    return nullptr;
  }
  return DocumentPtr(handle);
}

/** Renders {"atom": "value", ...} as "{w1: -1, w2: 2}". */
std::string render_gamble(const json& gamble) {
  std::string out = "{";
  bool first = true;
  for (const auto& item : gamble.items()) {
    if (!first) {
      out += ", ";
    }
    first = false;
    out += item.key() + ": " + item.value().get<std::string>();
  }
  return out + "}";
}

/** Renders ["w1", "w2"] as "{w1,w2}". */
std::string render_event(const json& event) {
  std::string out = "{";
  bool first = true;
  for (const json& label : event) {
    if (!first) {
      out += ",";
    }
    first = false;
    out += label.get<std::string>();
  }
  return out + "}";
}

/** Renders the lines of a violating betting scheme. */
void render_witness(const json& witness, const std::string& indent) {
  for (const json& term : witness.at("terms")) {
    std::cout << indent << "stake " << term.at("stake").get<std::string>()
              << " on " << render_gamble(term.at("gamble")) << " | "
              << render_event(term.at("cond")) << " (assessed value "
              << term.at("value").get<std::string>() << ")\n";
  }
  std::cout << indent << "conditioning event "
            << render_event(witness.at("conditioning"))
            << ", sup of the gain "
            << witness.at("sup").get<std::string>() << "\n";
}

/** Renders "name: yes" or "name: no" plus the certificate lines.
 *  Returns true when satisfied. */
bool render_verdict(const std::string& name, const json& verdict,
                    const std::string& suffix_when_violated = "") {
  const bool satisfied = verdict.at("satisfied").get<bool>();
  std::cout << name << ": " << (satisfied ? "yes" : "no");
  if (!satisfied && !suffix_when_violated.empty()) {
    std::cout << " " << suffix_when_violated;
  }
  std::cout << "\n";
  if (verdict.contains("witness")) {
    render_witness(verdict.at("witness"), "  ");
  }
  if (verdict.contains("note")) {
    std::cout << "  note: " << verdict.at("note").get<std::string>() << "\n";
  }
  return satisfied;
}

int run_check(const std::string& file, const std::string& class_name,
              bool all, unsigned n, bool as_json) {
  int exit_code = kExitOk;
  const DocumentPtr doc = load_document(file, exit_code);
  if (!doc) {
    return exit_code;
  }

  json rows = json::array();
  if (all) {
    char* out = nullptr;
    if (lowprev_classify(doc.get(), &out) != LOWPREV_OK) {
      return report_failure("classify");
    }
    rows = json::parse(take(out));
  } else {
    char* out = nullptr;
    if (lowprev_check(doc.get(), class_name.c_str(), n, &out) !=
        LOWPREV_OK) {
      return report_failure("check " + class_name);
    }
    std::string shown = class_name;
    if (class_name == "n-coherent" || class_name == "n-convex") {
      shown = std::to_string(n) + class_name.substr(1);
    }
    rows.push_back(
        json{{"class", shown}, {"verdict", json::parse(take(out))}});
  }

  bool all_satisfied = true;
  if (as_json) {
    std::cout << rows.dump(2) << "\n";
    for (const json& row : rows) {
      all_satisfied = all_satisfied &&
                      row.at("verdict").at("satisfied").get<bool>();
    }
  } else {
    for (const json& row : rows) {
      all_satisfied =
          render_verdict(row.at("class").get<std::string>(),
                         row.at("verdict")) &&
          all_satisfied;
    }
  }
  return all_satisfied ? kExitOk : kExitViolated;
}

int run_extend(const std::string& file, const std::string& mode,
               const std::vector<std::string>& targets, bool as_json) {
  int exit_code = kExitOk;
  const DocumentPtr doc = load_document(file, exit_code);
  if (!doc) {
    return exit_code;
  }

  std::vector<const char*> pointers;
  pointers.reserve(targets.size());
  for (const std::string& target : targets) {
    pointers.push_back(target.c_str());
  }
  char* out = nullptr;
  if (lowprev_extend(doc.get(), mode.c_str(), pointers.data(),
                     pointers.size(), &out) != LOWPREV_OK) {
    return report_failure("extend");
  }
  const json report = json::parse(take(out));

  if (as_json) {
    std::cout << report.dump(2) << "\n";
    return kExitOk;
  }
  for (const json& row : report.at("extensions")) {
    std::cout << "E_" << mode << "["
              << render_gamble(row.at("target").at("gamble")) << " | "
              << render_event(row.at("target").at("cond"))
              << "] = " << row.at("value").get<std::string>();
    if (row.contains("attaining_entry")) {
      std::cout << "   (attained through entry "
                << row.at("attaining_entry").get<std::size_t>()
                << " at stake " << row.at("stake").get<std::string>()
                << ")";
    } else if (row.contains("stake")) {
      std::cout << "   (vacuous bound, stake "
                << row.at("stake").get<std::string>() << ")";
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int run_gbr(const std::string& gamble_values, const std::string& event_atoms,
            const std::string& r, const std::string& q,
            const std::string& pa, const std::string& pxa, bool as_json) {
  char* out = nullptr;
  if (lowprev_gbr(gamble_values.c_str(), event_atoms.c_str(), r.c_str(),
                  q.c_str(), pa.c_str(), pxa.c_str(), &out) != LOWPREV_OK) {
    return report_failure("gbr");
  }
  const json report = json::parse(take(out));
  const bool satisfied =
      report.at("verdict").at("satisfied").get<bool>();

  if (as_json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "admissible interval: ["
              << report.at("interval").at(0).get<std::string>() << ", "
              << report.at("interval").at(1).get<std::string>() << "]\n";
    render_verdict("2-coherent", report.at("verdict"));
  }
  return satisfied ? kExitOk : kExitViolated;
}

int run_var(const std::string& file, const std::string& probs,
            const std::string& alpha, bool as_json) {
  int exit_code = kExitOk;
  const DocumentPtr doc = load_document(file, exit_code);
  if (!doc) {
    return exit_code;
  }
  char* out = nullptr;
  if (lowprev_var(doc.get(), probs.c_str(), alpha.c_str(), &out) !=
      LOWPREV_OK) {
    return report_failure("var");
  }
  const json report = json::parse(take(out));

  bool all_satisfied = true;
  for (const char* key :
       {"centered", "2-convex", "2-coherent", "conjugate_dominance"}) {
    all_satisfied =
        all_satisfied && report.at(key).at("satisfied").get<bool>();
  }

  if (as_json) {
    std::cout << report.dump(2) << "\n";
    return all_satisfied ? kExitOk : kExitViolated;
  }

  std::cout << "alpha: " << report.at("alpha").get<std::string>() << "\n";
  for (const json& row : report.at("values")) {
    std::cout << "P^V(" << row.at("name").get<std::string>()
              << ") = " << row.at("value").get<std::string>() << "\n";
  }
  render_verdict("centered", report.at("centered"));
  render_verdict("2-convex", report.at("2-convex"));
  std::string diagnosis;
  if (report.contains("diagnosis")) {
    diagnosis = "(" + report.at("diagnosis").at("axiom").get<std::string>() +
                ", \xce\xbb=" +
                report.at("diagnosis").at("lambda").get<std::string>() + ")";
  }
  render_verdict("2-coherent", report.at("2-coherent"), diagnosis);
  render_verdict("conjugate dominance", report.at("conjugate_dominance"));
  return all_satisfied ? kExitOk : kExitViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lowprev: exact consistency checks, natural extensions and models "
      "for conditional lower previsions"};
  app.require_subcommand(1);

  // check ------------------------------------------------------------
  auto* check = app.add_subcommand(
      "check", "Run consistency checks on an assessment document");
  std::string check_file;
  std::string check_class;
  bool check_all = false;
  unsigned check_n = 0;
  bool check_json = false;
  check->add_option("file", check_file, "assessment document (JSON)")
      ->required();
  check->add_option("--class", check_class,
                    "one class: internality, 1-AUL, 2-convex, centered, "
                    "centered-2-convex, 2-coherent, n-convex, n-coherent, "
                    "convex, C-convex, coherent, capacity");
  check->add_flag("--all", check_all, "run every check");
  check->add_option("--n", check_n, "gain count for the n-variants");
  check->add_flag("--json", check_json, "machine-readable report");

  // extend -----------------------------------------------------------
  auto* extend = app.add_subcommand(
      "extend", "Natural extension of the assessment at target gambles");
  std::string extend_file;
  std::string extend_mode;
  std::vector<std::string> extend_targets;
  bool extend_json = false;
  extend->add_option("file", extend_file, "assessment document (JSON)")
      ->required();
  extend->add_option("--mode", extend_mode, "2convex or 2coherent")
      ->required();
  extend
      ->add_option("--target", extend_targets,
                   "target \"G\" or \"G|E\" (name or inline values)")
      ->required();
  extend->add_flag("--json", extend_json, "machine-readable report");

  // gbr ----------------------------------------------------------------
  auto* gbr = app.add_subcommand(
      "gbr", "Check the four-entry updating family for 2-coherence");
  std::string gbr_values;
  std::string gbr_event;
  std::string gbr_r;
  std::string gbr_q;
  std::string gbr_pa;
  std::string gbr_pxa;
  bool gbr_json = false;
  gbr->add_option("--gamble-values", gbr_values,
                  "comma-separated rationals; atoms become w1..wn")
      ->required();
  gbr->add_option("--event", gbr_event,
                  "conditioning event: comma-separated atom names")
      ->required();
  gbr->add_option("--r", gbr_r, "first updated prevision candidate")
      ->required();
  gbr->add_option("--q", gbr_q, "second updated prevision candidate")
      ->required();
  gbr->add_option("--pa", gbr_pa, "prevision of the conditioning event")
      ->required();
  gbr->add_option("--pxa", gbr_pxa, "conditional prevision of the gamble")
      ->required();
  gbr->add_flag("--json", gbr_json, "machine-readable report");

  // var ----------------------------------------------------------------
  auto* var = app.add_subcommand(
      "var", "Value-at-Risk prevision over a document's named gambles");
  std::string var_file;
  std::string var_probs;
  std::string var_alpha;
  bool var_json = false;
  var->add_option("--gambles", var_file,
                  "document whose named gambles form the domain")
      ->required();
  var->add_option("--probs", var_probs,
                  "comma-separated atom probabilities in atom order")
      ->required();
  var->add_option("--alpha", var_alpha, "quantile level in (0,1)")
      ->required();
  var->add_flag("--json", var_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    // CLI11 prints help itself for --help; everything else is usage.
    const int code = app.exit(error);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (check->parsed()) {
    if (check_all == !check_class.empty()) {
      std::cerr << "lowprev: check needs exactly one of --class or --all\n";
      return kExitUsage;
    }
    return run_check(check_file, check_class, check_all, check_n,
                     check_json);
  }
  if (extend->parsed()) {
    return run_extend(extend_file, extend_mode, extend_targets, extend_json);
  }
  if (gbr->parsed()) {
    return run_gbr(gbr_values, gbr_event, gbr_r, gbr_q, gbr_pa, gbr_pxa,
                   gbr_json);
  }
  if (var->parsed()) {
    return run_var(var_file, var_probs, var_alpha, var_json);
  }
  std::cerr << "lowprev: no subcommand\n";
  return kExitUsage;
}
