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

/**@file   document.hpp
 * @brief  JSON boundary: the assessment document format and the
 *         machine-readable report fragments, both exact and strict.
 *
 * An assessment document is a JSON object with the atom names of the
 * possibility space, optional named gambles and events, and the list of
 * assessed entries.  Rationals cross the boundary as strings "p" or
 * "p/q" (never as floating point), unknown fields are rejected so typos
 * in names cannot silently change the model, and every error message
 * names the offending field.  The same rules govern the report
 * fragments (verdicts, witnesses, extension results): each serializer
 * here has an inverse parser, and parsing validates integrity -- a
 * witness is re-evaluated and must reproduce its recorded supremum.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "checker.hpp"
#include "core.hpp"
#include "extension.hpp"

namespace lowprev {

using Json = nlohmann::json;

/** Thrown on malformed document or report text; the message carries the
 *  field context. */
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Parses an exact rational literal "p" or "p/q" (optional leading minus,
 *  decimal digits, positive denominator).
 *  @throws DocumentError on anything else, including zero denominators. */
Rational parse_rational(const std::string& text);

/** Parses the extended-value rendering: "-inf", "+inf", or a rational
 *  literal.  Inverse of to_string(ExtendedValue).
 *  @throws DocumentError on anything else. */
ExtendedValue parse_extended(const std::string& text);

/** A parsed assessment document: the possibility space, the named gambles
 *  and events available for later reference, and the assessment itself.
 *  Name lookups return nullptr when the name is not declared. */
struct AssessmentDocument {
  PartitionPtr partition;
  std::vector<std::pair<std::string, Gamble>> gambles;
  std::vector<std::pair<std::string, Event>> events;
  Assessment assessment;

  const Gamble* find_gamble(const std::string& name) const;
  const Event* find_event(const std::string& name) const;
};

/** Parses an assessment document from JSON text.
 *
 *  Shape: {"partition": [atom...], "gambles": {name: {atom: rational}},
 *  "events": {name: [atom...]}, "entries": [{"gamble": name-or-inline,
 *  "cond": name-or-atom-list, "value": rational}]}.  "gambles", "events"
 *  and "entries" may be omitted; an omitted "cond" means the sure event.
 *  Rational values are strings "p"/"p/q" or JSON integers.  Unknown
 *  fields, unknown names, floating-point numbers, duplicate atoms and
 *  contradictory duplicate entries are all rejected.
 *  @throws DocumentError with line or field context. */
AssessmentDocument parse_document(const std::string& text);

/** Resolves a target specification "G" or "G|E" against a document: G is
 *  a declared gamble name or a comma-separated list of rationals in atom
 *  order, E a declared event name or a comma-separated list of atom
 *  names; a missing E means the sure event.
 *  @throws DocumentError on unknown names, arity mismatch, or an empty
 *  conditioning event. */
ConditionalGamble parse_target(const AssessmentDocument& doc,
                               const std::string& spec);

/** Gamble as an object {atom: "p/q"} covering every atom. */
Json gamble_to_json(const Gamble& x);
/** @throws DocumentError unless node covers exactly the atoms. */
Gamble gamble_from_json(const Json& node, const PartitionPtr& partition);

/** Event as the array of its member atom names, in atom order. */
Json event_to_json(const Event& b);
/** @throws DocumentError on unknown or duplicate atom names. */
Event event_from_json(const Json& node, const PartitionPtr& partition);

/** Conditional gamble as {"gamble": {...}, "cond": [...]}. */
Json conditional_to_json(const ConditionalGamble& target);
ConditionalGamble conditional_from_json(const Json& node,
                                        const PartitionPtr& partition);

/** Witness as {"terms": [{"gamble", "cond", "stake", "value"}...],
 *  "conditioning": [...], "sup": "..."}. */
Json witness_to_json(const Witness& witness);
/** Rebuilds the witness from its terms and verifies that the recorded
 *  conditioning event and supremum match the re-evaluation.
 *  @throws DocumentError when the witness does not re-certify. */
Witness witness_from_json(const Json& node, const PartitionPtr& partition);

/** Verdict as {"satisfied": bool} plus optional "witness"/"note". */
Json verdict_to_json(const Verdict& verdict);
Verdict verdict_from_json(const Json& node, const PartitionPtr& partition);

/** Classification table as an array of {"class": name, "verdict": {...}}. */
Json classification_to_json(const std::vector<ClassificationEntry>& table);
std::vector<ClassificationEntry> classification_from_json(
    const Json& node, const PartitionPtr& partition);

/** Extension result as {"value": "p/q"|"-inf"|"+inf"} plus, for finite
 *  values, "stake" and possibly "attaining_entry". */
Json extension_to_json(const ExtensionReport& report);
/** @throws DocumentError when the fields breach the report invariant
 *  (stake present iff the value is finite). */
ExtensionReport extension_from_json(const Json& node);

/** Assessment as a parseable document: {"partition": [...], "entries":
 *  [...]} with inline gambles and conditioning atom lists, so the result
 *  feeds straight back into parse_document. */
Json assessment_to_json(const Assessment& p);

}  // namespace lowprev
