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

/**@file   document.cpp
 * @brief  JSON boundary: strict parsing of assessment documents and exact
 *         round-tripping of report fragments.
 */

#include "document.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <utility>

namespace lowprev {

namespace {

/** Rejects any key outside the allowed set, naming the first offender. */
void require_known_fields(const Json& node, const std::string& context,
                          const std::set<std::string>& allowed) {
  for (const auto& item : node.items()) {
    if (allowed.find(item.key()) == allowed.end()) {
      throw DocumentError(context + ": unknown field \"" + item.key() + "\"");
    }
  }
}

void require_object(const Json& node, const std::string& context) {
  if (!node.is_object()) {
    throw DocumentError(context + ": expected a JSON object");
  }
}

void require_array(const Json& node, const std::string& context) {
  if (!node.is_array()) {
    throw DocumentError(context + ": expected a JSON array");
  }
}

/** Exact rational from a JSON value: a string "p"/"p/q" or an integer.
 *  Floating-point numbers are rejected outright. */
Rational rational_field(const Json& node, const std::string& context) {
  if (node.is_string()) {
    try {
      return parse_rational(node.get<std::string>());
    } catch (const DocumentError& error) {
      throw DocumentError(context + ": " + error.what());
    }
  }
  if (node.is_number_unsigned()) {
    mpz_class numerator;
    numerator = static_cast<unsigned long>(node.get<std::uint64_t>());
    return Rational(numerator);
  }
  if (node.is_number_integer()) {
    mpz_class numerator;
    numerator = static_cast<long>(node.get<std::int64_t>());
    return Rational(numerator);
  }
  throw DocumentError(context +
                      ": expected an exact rational (string \"p\" or "
                      "\"p/q\", or an integer), not " +
                      std::string(node.type_name()));
}

std::string string_field(const Json& node, const std::string& context) {
  if (!node.is_string()) {
    throw DocumentError(context + ": expected a string");
  }
  return node.get<std::string>();
}

Gamble gamble_from_json_at(const Json& node, const PartitionPtr& partition,
                           const std::string& context) {
  if (!node.is_object()) {
    throw DocumentError(context +
                        ": expected an object mapping atoms to rationals");
  }
  std::vector<Rational> values(partition->size(), Rational(0));
  std::vector<bool> seen(partition->size(), false);
  for (const auto& item : node.items()) {
    const auto index = partition->index_of(item.key());
    if (!index) {
      throw DocumentError(context + ": unknown atom \"" + item.key() + "\"");
    }
    values[*index] = rational_field(item.value(), context + "." + item.key());
    seen[*index] = true;
  }
  for (std::size_t atom = 0; atom < partition->size(); ++atom) {
    if (!seen[atom]) {
      throw DocumentError(context + ": missing atom \"" +
                          partition->atom(atom) + "\"");
    }
  }
  return Gamble(partition, std::move(values));
}

Event event_from_json_at(const Json& node, const PartitionPtr& partition,
                         const std::string& context) {
  if (!node.is_array()) {
    throw DocumentError(context + ": expected an array of atom names");
  }
  std::vector<std::size_t> members;
  std::vector<bool> seen(partition->size(), false);
  for (const Json& element : node) {
    const std::string label = string_field(element, context);
    const auto index = partition->index_of(label);
    if (!index) {
      throw DocumentError(context + ": unknown atom \"" + label + "\"");
    }
    if (seen[*index]) {
      throw DocumentError(context + ": duplicate atom \"" + label + "\"");
    }
    seen[*index] = true;
    members.push_back(*index);
  }
  return Event(partition, members);
}

/** Splits on commas; no escaping, pieces may be empty. */
std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> pieces;
  std::size_t begin = 0;
  while (true) {
    const std::size_t comma = text.find(',', begin);
    if (comma == std::string::npos) {
      pieces.push_back(text.substr(begin));
      return pieces;
    }
    pieces.push_back(text.substr(begin, comma - begin));
    begin = comma + 1;
  }
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto fail = [&text]() {
    throw DocumentError("\"" + text +
                        "\" is not an exact rational (expected \"p\" or "
                        "\"p/q\" with decimal digits)");
  };
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') {
    ++pos;
  }
  const std::size_t digits_begin = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    ++pos;
  }
  if (pos == digits_begin) {
    fail();
  }
  const mpz_class numerator(text.substr(0, pos));
  mpz_class denominator(1);
  if (pos < text.size()) {
    if (text[pos] != '/') {
      fail();
    }
    const std::size_t den_begin = ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      ++pos;
    }
    if (pos == den_begin || pos != text.size()) {
      fail();
    }
    denominator = mpz_class(text.substr(den_begin));
    if (denominator == 0) {
      throw DocumentError("\"" + text + "\" has a zero denominator");
    }
  }
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

ExtendedValue parse_extended(const std::string& text) {
  if (text == "-inf") {
    return ExtendedValue::neg_infinity();
  }
  if (text == "+inf") {
    return ExtendedValue::pos_infinity();
  }
  return ExtendedValue::finite(parse_rational(text));
}

const Gamble* AssessmentDocument::find_gamble(const std::string& name) const {
  for (const auto& named : gambles) {
    if (named.first == name) {
      return &named.second;
    }
  }
  return nullptr;
}

const Event* AssessmentDocument::find_event(const std::string& name) const {
  for (const auto& named : events) {
    if (named.first == name) {
      return &named.second;
    }
  }
  return nullptr;
}

AssessmentDocument parse_document(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& error) {
    // nlohmann reports the line and column of the defect.
    throw DocumentError(std::string("invalid JSON: ") + error.what());
  }
  require_object(root, "document");
  require_known_fields(root, "document",
                       {"partition", "gambles", "events", "entries"});
  if (!root.contains("partition")) {
    throw DocumentError("document: missing field \"partition\"");
  }

  const Json& atoms_node = root.at("partition");
  require_array(atoms_node, "partition");
  std::vector<std::string> atoms;
  for (const Json& element : atoms_node) {
    atoms.push_back(string_field(element, "partition"));
  }
  PartitionPtr partition;
  try {
    partition = std::make_shared<const Partition>(std::move(atoms));
  } catch (const std::invalid_argument& error) {
    throw DocumentError(std::string("partition: ") + error.what());
  }

  AssessmentDocument doc{partition, {}, {}, Assessment(partition)};

  if (root.contains("gambles")) {
    const Json& node = root.at("gambles");
    require_object(node, "gambles");
    for (const auto& item : node.items()) {
      doc.gambles.emplace_back(
          item.key(), gamble_from_json_at(item.value(), partition,
                                          "gambles." + item.key()));
    }
  }
  if (root.contains("events")) {
    const Json& node = root.at("events");
    require_object(node, "events");
    for (const auto& item : node.items()) {
      doc.events.emplace_back(item.key(),
                              event_from_json_at(item.value(), partition,
                                                 "events." + item.key()));
    }
  }

  if (root.contains("entries")) {
    const Json& node = root.at("entries");
    require_array(node, "entries");
    std::vector<AssessmentEntry> entries;
    for (std::size_t i = 0; i < node.size(); ++i) {
      const std::string context = "entries[" + std::to_string(i) + "]";
      const Json& row = node.at(i);
      require_object(row, context);
      require_known_fields(row, context, {"gamble", "cond", "value"});
      if (!row.contains("gamble") || !row.contains("value")) {
        throw DocumentError(context +
                            ": an entry needs \"gamble\" and \"value\"");
      }

      std::optional<Gamble> gamble;
      const Json& gamble_node = row.at("gamble");
      if (gamble_node.is_string()) {
        const std::string name = gamble_node.get<std::string>();
        const Gamble* named = doc.find_gamble(name);
        if (!named) {
          throw DocumentError(context + ": unknown gamble \"" + name + "\"");
        }
        gamble = *named;
      } else {
        gamble = gamble_from_json_at(gamble_node, partition,
                                     context + ".gamble");
      }

      Event cond = Event::omega(partition);
      if (row.contains("cond")) {
        const Json& cond_node = row.at("cond");
        if (cond_node.is_string()) {
          const std::string name = cond_node.get<std::string>();
          const Event* named = doc.find_event(name);
          if (!named) {
            throw DocumentError(context + ": unknown event \"" + name +
                                "\"");
          }
          cond = *named;
        } else {
          cond = event_from_json_at(cond_node, partition, context + ".cond");
        }
      }

      const Rational value = rational_field(row.at("value"),
                                            context + ".value");
      try {
        entries.push_back({ConditionalGamble(*gamble, cond), value});
      } catch (const std::invalid_argument& error) {
        throw DocumentError(context + ": " + error.what());
      }
    }
    if (!entries.empty()) {
      try {
        doc.assessment = Assessment(std::move(entries));
      } catch (const std::invalid_argument& error) {
        throw DocumentError(std::string("entries: ") + error.what());
      }
    }
  }
  return doc;
}

ConditionalGamble parse_target(const AssessmentDocument& doc,
                               const std::string& spec) {
  const PartitionPtr& partition = doc.partition;
  const std::size_t bar = spec.find('|');
  const std::string gamble_ref =
      bar == std::string::npos ? spec : spec.substr(0, bar);

  std::optional<Gamble> gamble;
  if (const Gamble* named = doc.find_gamble(gamble_ref)) {
    gamble = *named;
  } else {
    const std::vector<std::string> pieces = split_commas(gamble_ref);
    if (pieces.size() != partition->size()) {
      throw DocumentError("target gamble \"" + gamble_ref +
                          "\" names no declared gamble and has " +
                          std::to_string(pieces.size()) +
                          " value(s) for a partition of " +
                          std::to_string(partition->size()) + " atom(s)");
    }
    std::vector<Rational> values;
    for (const std::string& piece : pieces) {
      try {
        values.push_back(parse_rational(piece));
      } catch (const DocumentError& error) {
        throw DocumentError("target gamble \"" + gamble_ref + "\": " +
                            error.what());
      }
    }
    gamble = Gamble(partition, std::move(values));
  }

  Event cond = Event::omega(partition);
  if (bar != std::string::npos) {
    const std::string event_ref = spec.substr(bar + 1);
    if (const Event* named = doc.find_event(event_ref)) {
      cond = *named;
    } else {
      std::vector<std::size_t> members;
      std::vector<bool> seen(partition->size(), false);
      for (const std::string& label : split_commas(event_ref)) {
        const auto index = partition->index_of(label);
        if (!index) {
          throw DocumentError("target event \"" + event_ref +
                              "\" names no declared event and \"" + label +
                              "\" is not an atom");
        }
        if (!seen[*index]) {
          seen[*index] = true;
          members.push_back(*index);
        }
      }
      cond = Event(partition, members);
    }
  }

  try {
    return ConditionalGamble(*gamble, cond);
  } catch (const std::invalid_argument& error) {
    throw DocumentError(std::string("target: ") + error.what());
  }
}

Json gamble_to_json(const Gamble& x) {
  Json node = Json::object();
  for (std::size_t atom = 0; atom < x.size(); ++atom) {
    node[x.partition()->atom(atom)] = rat_to_string(x.value(atom));
  }
  return node;
}

Gamble gamble_from_json(const Json& node, const PartitionPtr& partition) {
  return gamble_from_json_at(node, partition, "gamble");
}

Json event_to_json(const Event& b) {
  Json node = Json::array();
  for (const std::string& label : b.member_labels()) {
    node.push_back(label);
  }
  return node;
}

Event event_from_json(const Json& node, const PartitionPtr& partition) {
  return event_from_json_at(node, partition, "event");
}

Json conditional_to_json(const ConditionalGamble& target) {
  return Json{{"gamble", gamble_to_json(target.gamble())},
              {"cond", event_to_json(target.cond())}};
}

ConditionalGamble conditional_from_json(const Json& node,
                                        const PartitionPtr& partition) {
  require_object(node, "conditional gamble");
  require_known_fields(node, "conditional gamble", {"gamble", "cond"});
  if (!node.contains("gamble") || !node.contains("cond")) {
    throw DocumentError(
        "conditional gamble: needs \"gamble\" and \"cond\"");
  }
  try {
    return ConditionalGamble(
        gamble_from_json_at(node.at("gamble"), partition,
                            "conditional gamble"),
        event_from_json_at(node.at("cond"), partition,
                           "conditional gamble"));
  } catch (const std::invalid_argument& error) {
    throw DocumentError(std::string("conditional gamble: ") + error.what());
  }
}

Json witness_to_json(const Witness& witness) {
  Json terms = Json::array();
  for (const WitnessTerm& term : witness.terms) {
    terms.push_back(Json{{"gamble", gamble_to_json(term.target.gamble())},
                         {"cond", event_to_json(term.target.cond())},
                         {"stake", rat_to_string(term.stake)},
                         {"value", rat_to_string(term.value)}});
  }
  return Json{{"terms", terms},
              {"conditioning", event_to_json(witness.conditioning)},
              {"sup", rat_to_string(witness.sup_value)}};
}

Witness witness_from_json(const Json& node, const PartitionPtr& partition) {
  require_object(node, "witness");
  require_known_fields(node, "witness", {"terms", "conditioning", "sup"});
  if (!node.contains("terms") || !node.contains("conditioning") ||
      !node.contains("sup")) {
    throw DocumentError(
        "witness: needs \"terms\", \"conditioning\" and \"sup\"");
  }
  require_array(node.at("terms"), "witness.terms");

  std::vector<WitnessTerm> terms;
  for (std::size_t i = 0; i < node.at("terms").size(); ++i) {
    const std::string context = "witness.terms[" + std::to_string(i) + "]";
    const Json& row = node.at("terms").at(i);
    require_object(row, context);
    require_known_fields(row, context, {"gamble", "cond", "stake", "value"});
    if (!row.contains("gamble") || !row.contains("cond") ||
        !row.contains("stake") || !row.contains("value")) {
      throw DocumentError(
          context + ": needs \"gamble\", \"cond\", \"stake\" and \"value\"");
    }
    try {
      terms.push_back(
          {ConditionalGamble(
               gamble_from_json_at(row.at("gamble"), partition, context),
               event_from_json_at(row.at("cond"), partition, context)),
           rational_field(row.at("stake"), context + ".stake"),
           rational_field(row.at("value"), context + ".value")});
    } catch (const std::invalid_argument& error) {
      throw DocumentError(context + ": " + error.what());
    }
  }

  const Event conditioning = event_from_json_at(
      node.at("conditioning"), partition, "witness.conditioning");
  const Rational sup = rational_field(node.at("sup"), "witness.sup");

  // A witness is only as good as its re-evaluation: rebuild it from the
  // terms and insist the recorded event and supremum are reproduced.
  Witness rebuilt{{}, conditioning, sup};
  try {
    rebuilt = make_witness(std::move(terms), partition);
  } catch (const std::logic_error& error) {
    throw DocumentError(std::string("witness: ") + error.what());
  }
  if (!(rebuilt.conditioning == conditioning) ||
      rebuilt.sup_value != sup) {
    throw DocumentError(
        "witness: re-evaluating the terms does not reproduce the recorded "
        "conditioning event and supremum");
  }
  return rebuilt;
}

Json verdict_to_json(const Verdict& verdict) {
  Json node = Json::object();
  node["satisfied"] = verdict.satisfied;
  if (verdict.witness) {
    node["witness"] = witness_to_json(*verdict.witness);
  }
  if (verdict.note) {
    node["note"] = *verdict.note;
  }
  return node;
}

Verdict verdict_from_json(const Json& node, const PartitionPtr& partition) {
  require_object(node, "verdict");
  require_known_fields(node, "verdict", {"satisfied", "witness", "note"});
  if (!node.contains("satisfied") || !node.at("satisfied").is_boolean()) {
    throw DocumentError("verdict: needs a boolean \"satisfied\"");
  }
  Verdict verdict;
  verdict.satisfied = node.at("satisfied").get<bool>();
  if (node.contains("witness")) {
    verdict.witness = witness_from_json(node.at("witness"), partition);
  }
  if (node.contains("note")) {
    verdict.note = string_field(node.at("note"), "verdict.note");
  }
  const std::size_t attachments = (verdict.witness ? 1 : 0) +
                                  (verdict.note ? 1 : 0);
  if (verdict.satisfied ? attachments != 0 : attachments != 1) {
    throw DocumentError(
        "verdict: a satisfied verdict carries neither witness nor note, a "
        "violated one exactly one of them");
  }
  return verdict;
}

Json classification_to_json(const std::vector<ClassificationEntry>& table) {
  Json rows = Json::array();
  for (const ClassificationEntry& row : table) {
    rows.push_back(Json{{"class", row.class_name},
                        {"verdict", verdict_to_json(row.verdict)}});
  }
  return rows;
}

std::vector<ClassificationEntry> classification_from_json(
    const Json& node, const PartitionPtr& partition) {
  require_array(node, "classification");
  std::vector<ClassificationEntry> table;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const std::string context = "classification[" + std::to_string(i) + "]";
    const Json& row = node.at(i);
    require_object(row, context);
    require_known_fields(row, context, {"class", "verdict"});
    if (!row.contains("class") || !row.contains("verdict")) {
      throw DocumentError(context + ": needs \"class\" and \"verdict\"");
    }
    table.push_back({string_field(row.at("class"), context + ".class"),
                     verdict_from_json(row.at("verdict"), partition)});
  }
  return table;
}

Json extension_to_json(const ExtensionReport& report) {
  Json node = Json::object();
  node["value"] = to_string(report.value);
  if (report.attaining_entry) {
    node["attaining_entry"] = *report.attaining_entry;
  }
  if (report.stake) {
    node["stake"] = rat_to_string(*report.stake);
  }
  return node;
}

ExtensionReport extension_from_json(const Json& node) {
  require_object(node, "extension");
  require_known_fields(node, "extension",
                       {"value", "attaining_entry", "stake"});
  if (!node.contains("value")) {
    throw DocumentError("extension: missing field \"value\"");
  }
  ExtensionReport report{
      parse_extended(string_field(node.at("value"), "extension.value")),
      std::nullopt, std::nullopt};
  if (node.contains("attaining_entry")) {
    const Json& index = node.at("attaining_entry");
    if (!index.is_number_unsigned()) {
      throw DocumentError(
          "extension.attaining_entry: expected a nonnegative integer");
    }
    report.attaining_entry = index.get<std::size_t>();
  }
  if (node.contains("stake")) {
    report.stake =
        rational_field(node.at("stake"), "extension.stake");
  }
  if (report.stake.has_value() != report.value.is_finite()) {
    throw DocumentError(
        "extension: a stake is recorded exactly for finite values");
  }
  if (report.attaining_entry && !report.stake) {
    throw DocumentError(
        "extension: an attaining entry requires a stake");
  }
  return report;
}

Json assessment_to_json(const Assessment& p) {
  Json atoms = Json::array();
  for (const std::string& label : p.partition()->atoms()) {
    atoms.push_back(label);
  }
  Json entries = Json::array();
  for (const AssessmentEntry& entry : p.entries()) {
    entries.push_back(
        Json{{"gamble", gamble_to_json(entry.target.gamble())},
             {"cond", event_to_json(entry.target.cond())},
             {"value", rat_to_string(entry.value)}});
  }
  return Json{{"partition", atoms}, {"entries", entries}};
}

}  // namespace lowprev
