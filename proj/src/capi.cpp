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

/**@file   capi.cpp
 * @brief  Implementation of the stable C interface: opaque document
 *         handles, status codes, exact JSON reports.
 */

#include "lowprev/lowprev.h"

#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "checker.hpp"
#include "core.hpp"
#include "document.hpp"
#include "extension.hpp"
#include "models.hpp"

struct LowprevDocument {
  lowprev::AssessmentDocument doc;
};

namespace {

using lowprev::Assessment;
using lowprev::AssessmentEntry;
using lowprev::ConditionalGamble;
using lowprev::DocumentError;
using lowprev::Event;
using lowprev::Gamble;
using lowprev::Json;
using lowprev::PartitionPtr;
using lowprev::Rational;
using lowprev::Verdict;

thread_local std::string g_last_error;

/** Copies a report into a fresh buffer owned by the caller. */
char* dup_string(const std::string& text) {
  char* buffer = new char[text.size() + 1];
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  return buffer;
}

/** Runs the body, mapping exceptions to status codes and the thread's
 *  error message.  Output parameters are only written on success. */
template <typename Body>
LowprevStatus guarded(Body&& body) {
  try {
    return body();
  } catch (const lowprev::PreconditionError& error) {
    g_last_error = error.what();
    return LOWPREV_ERROR_PRECONDITION;
  } catch (const DocumentError& error) {
    g_last_error = error.what();
    return LOWPREV_ERROR_INVALID_ARGUMENT;
  } catch (const std::invalid_argument& error) {
    g_last_error = error.what();
    return LOWPREV_ERROR_INVALID_ARGUMENT;
  } catch (const std::domain_error& error) {
    g_last_error = error.what();
    return LOWPREV_ERROR_INVALID_ARGUMENT;
  } catch (const std::exception& error) {
    g_last_error = error.what();
    return LOWPREV_ERROR_INTERNAL;
  }
}

LowprevStatus fail_invalid(const std::string& message) {
  g_last_error = message;
  return LOWPREV_ERROR_INVALID_ARGUMENT;
}

Verdict run_check(const Assessment& p, const std::string& name, unsigned n) {
  if (name == "internality") return lowprev::check_internality(p);
  if (name == "1-AUL") return lowprev::check_1aul(p);
  if (name == "2-convex") return lowprev::check_2convex(p);
  if (name == "centered") return lowprev::check_centered(p);
  if (name == "centered-2-convex") return lowprev::check_centered_2convex(p);
  if (name == "2-coherent") return lowprev::check_2coherent(p);
  if (name == "convex") return lowprev::check_convex(p);
  if (name == "C-convex") return lowprev::check_c_convex(p);
  if (name == "coherent") return lowprev::check_coherent(p);
  if (name == "capacity") return lowprev::check_capacity(p);
  if (name == "n-convex") {
    return lowprev::check_n_convex(p, lowprev::GainCount::finite(n));
  }
  if (name == "n-coherent") {
    return lowprev::check_n_coherent(p, lowprev::GainCount::finite(n));
  }
  throw std::invalid_argument("unknown consistency class \"" + name + "\"");
}

/** Comma-separated exact rationals. */
std::vector<Rational> parse_rational_list(const std::string& text,
                                          const std::string& what) {
  std::vector<Rational> values;
  std::size_t begin = 0;
  while (true) {
    const std::size_t comma = text.find(',', begin);
    const std::string piece = comma == std::string::npos
                                  ? text.substr(begin)
                                  : text.substr(begin, comma - begin);
    try {
      values.push_back(lowprev::parse_rational(piece));
    } catch (const DocumentError& error) {
      throw DocumentError(what + ": " + error.what());
    }
    if (comma == std::string::npos) {
      return values;
    }
    begin = comma + 1;
  }
}

/** The sub-assessment of the entries whose negation -X|B is also
 *  assessed, the domain on which conjugate dominance is decidable. */
Assessment negation_closed_part(const Assessment& p) {
  std::vector<AssessmentEntry> kept;
  for (const AssessmentEntry& entry : p.entries()) {
    const ConditionalGamble twin(-entry.target.gamble(),
                                 entry.target.cond());
    if (p.find(twin)) {
      kept.push_back(entry);
    }
  }
  if (kept.empty()) {
    return Assessment(p.partition());
  }
  return Assessment(std::move(kept));
}

}  // namespace

extern "C" {

const char* lowprev_version(void) { return "1.0.0"; }

const char* lowprev_last_error(void) { return g_last_error.c_str(); }

void lowprev_string_free(char* text) { delete[] text; }

LowprevStatus lowprev_document_parse(const char* json_text,
                                     LowprevDocument** out_doc) {
  if (json_text == nullptr || out_doc == nullptr) {
    return fail_invalid("lowprev_document_parse: null pointer argument");
  }
  return guarded([&]() {
    auto handle = new LowprevDocument{lowprev::parse_document(json_text)};
    *out_doc = handle;
    return LOWPREV_OK;
  });
}

void lowprev_document_free(LowprevDocument* doc) { delete doc; }

LowprevStatus lowprev_document_atom_count(const LowprevDocument* doc,
                                          size_t* out_count) {
  if (doc == nullptr || out_count == nullptr) {
    return fail_invalid("lowprev_document_atom_count: null pointer argument");
  }
  *out_count = doc->doc.partition->size();
  return LOWPREV_OK;
}

LowprevStatus lowprev_document_entry_count(const LowprevDocument* doc,
                                           size_t* out_count) {
  if (doc == nullptr || out_count == nullptr) {
    return fail_invalid(
        "lowprev_document_entry_count: null pointer argument");
  }
  *out_count = doc->doc.assessment.size();
  return LOWPREV_OK;
}

LowprevStatus lowprev_check(const LowprevDocument* doc,
                            const char* class_name, unsigned n,
                            char** out_json) {
  if (doc == nullptr || class_name == nullptr || out_json == nullptr) {
    return fail_invalid("lowprev_check: null pointer argument");
  }
  return guarded([&]() {
    const Verdict verdict = run_check(doc->doc.assessment, class_name, n);
    *out_json = dup_string(lowprev::verdict_to_json(verdict).dump());
    return LOWPREV_OK;
  });
}

LowprevStatus lowprev_classify(const LowprevDocument* doc, char** out_json) {
  if (doc == nullptr || out_json == nullptr) {
    return fail_invalid("lowprev_classify: null pointer argument");
  }
  return guarded([&]() {
    const auto table = lowprev::classify(doc->doc.assessment);
    *out_json = dup_string(lowprev::classification_to_json(table).dump());
    return LOWPREV_OK;
  });
}

LowprevStatus lowprev_extend(const LowprevDocument* doc, const char* mode,
                             const char* const* targets, size_t n_targets,
                             char** out_json) {
  if (doc == nullptr || mode == nullptr || targets == nullptr ||
      out_json == nullptr) {
    return fail_invalid("lowprev_extend: null pointer argument");
  }
  if (n_targets == 0) {
    return fail_invalid("lowprev_extend: at least one target is required");
  }
  const std::string mode_name = mode;
  if (mode_name != "2convex" && mode_name != "2coherent") {
    return fail_invalid("lowprev_extend: mode must be \"2convex\" or "
                        "\"2coherent\", got \"" +
                        mode_name + "\"");
  }
  return guarded([&]() {
    Json rows = Json::array();
    for (size_t i = 0; i < n_targets; ++i) {
      if (targets[i] == nullptr) {
        throw DocumentError("lowprev_extend: null target specification");
      }
      const ConditionalGamble target =
          lowprev::parse_target(doc->doc, targets[i]);
      const lowprev::ExtensionReport report =
          mode_name == "2convex"
              ? lowprev::natext_2convex(doc->doc.assessment, target)
              : lowprev::natext_2coherent(doc->doc.assessment, target);
      Json row = lowprev::extension_to_json(report);
      row["target"] = lowprev::conditional_to_json(target);
      rows.push_back(std::move(row));
    }
    const Json result{{"mode", mode_name}, {"extensions", std::move(rows)}};
    *out_json = dup_string(result.dump());
    return LOWPREV_OK;
  });
}

LowprevStatus lowprev_gbr(const char* gamble_values, const char* event_atoms,
                          const char* r, const char* q, const char* pa,
                          const char* pxa, char** out_json) {
  if (gamble_values == nullptr || event_atoms == nullptr || r == nullptr ||
      q == nullptr || pa == nullptr || pxa == nullptr ||
      out_json == nullptr) {
    return fail_invalid("lowprev_gbr: null pointer argument");
  }
  return guarded([&]() {
    const std::vector<Rational> values =
        parse_rational_list(gamble_values, "gamble values");
    std::vector<std::string> atoms;
    for (std::size_t i = 0; i < values.size(); ++i) {
      atoms.push_back("w" + std::to_string(i + 1));
    }
    const PartitionPtr partition =
        std::make_shared<const lowprev::Partition>(std::move(atoms));
    const Gamble x(partition, values);

    std::vector<std::size_t> members;
    std::vector<bool> seen(partition->size(), false);
    const std::string atoms_text = event_atoms;
    std::size_t begin = 0;
    while (true) {
      const std::size_t comma = atoms_text.find(',', begin);
      const std::string label =
          comma == std::string::npos
              ? atoms_text.substr(begin)
              : atoms_text.substr(begin, comma - begin);
      const auto index = partition->index_of(label);
      if (!index) {
        throw DocumentError("event atoms: \"" + label +
                            "\" is not an atom (expected \"w1\"..\"w" +
                            std::to_string(partition->size()) + "\")");
      }
      if (!seen[*index]) {
        seen[*index] = true;
        members.push_back(*index);
      }
      if (comma == std::string::npos) {
        break;
      }
      begin = comma + 1;
    }
    const Event a(partition, members);

    const Rational r_value = lowprev::parse_rational(r);
    const Rational q_value = lowprev::parse_rational(q);
    const Rational pa_value = lowprev::parse_rational(pa);
    const Rational pxa_value = lowprev::parse_rational(pxa);

    const Verdict verdict =
        lowprev::verify_gbr_family(a, x, r_value, q_value, pa_value,
                                   pxa_value);
    const auto interval =
        lowprev::gbr_interval(ConditionalGamble(x, a));
    const Json result{
        {"interval", Json::array({lowprev::rat_to_string(interval.first),
                                  lowprev::rat_to_string(interval.second)})},
        {"r", lowprev::rat_to_string(r_value)},
        {"q", lowprev::rat_to_string(q_value)},
        {"pa", lowprev::rat_to_string(pa_value)},
        {"pxa", lowprev::rat_to_string(pxa_value)},
        {"verdict", lowprev::verdict_to_json(verdict)}};
    *out_json = dup_string(result.dump());
    return LOWPREV_OK;
  });
}

LowprevStatus lowprev_var(const LowprevDocument* doc, const char* probs,
                          const char* alpha, char** out_json) {
  if (doc == nullptr || probs == nullptr || alpha == nullptr ||
      out_json == nullptr) {
    return fail_invalid("lowprev_var: null pointer argument");
  }
  return guarded([&]() {
    const PartitionPtr& partition = doc->doc.partition;
    const lowprev::FiniteDistribution dist(
        partition, parse_rational_list(probs, "probabilities"));
    const Rational alpha_value = lowprev::parse_rational(alpha);

    std::vector<Gamble> domain;
    domain.reserve(doc->doc.gambles.size());
    for (const auto& named : doc->doc.gambles) {
      domain.push_back(named.second);
    }
    const lowprev::VarPrevision model{alpha_value, dist, domain};
    const Assessment p = lowprev::build_var_assessment(model);

    Json values = Json::array();
    for (const auto& named : doc->doc.gambles) {
      values.push_back(
          Json{{"name", named.first},
               {"value", lowprev::rat_to_string(-lowprev::var_alpha(
                             dist, named.second, alpha_value))}});
    }

    const Verdict dominance =
        lowprev::conjugate_dominance(negation_closed_part(p));

    Json result{
        {"alpha", lowprev::rat_to_string(alpha_value)},
        {"values", std::move(values)},
        {"centered", lowprev::verdict_to_json(lowprev::check_centered(p))},
        {"2-convex", lowprev::verdict_to_json(lowprev::check_2convex(p))},
        {"2-coherent",
         lowprev::verdict_to_json(lowprev::check_2coherent(p))},
        {"conjugate_dominance", lowprev::verdict_to_json(dominance)}};
    if (!dominance.satisfied) {
      // Dominance P(X) <= -P(-X) is the lambda = -1 instance of the
      // negative-scaling axiom; its failure pins the 2-coherence breach.
      result["diagnosis"] = Json{{"axiom", "A6"}, {"lambda", "-1"}};
    }
    *out_json = dup_string(result.dump());
    return LOWPREV_OK;
  });
}

}  // extern "C"
