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

/**@file   lowprev.h
 * @brief  Stable C interface of the lowprev shared library.
 *
 * The interface works on opaque document handles and JSON strings.  An
 * assessment document (see below) is parsed once into a handle; the
 * query functions return machine-readable JSON reports in freshly
 * allocated strings.  All numeric data crosses the boundary as exact
 * rational literals "p" or "p/q" -- never as floating point -- and the
 * extended values of natural extensions use the tokens "-inf"/"+inf".
 *
 * Every function returns a status code.  On failure the output
 * parameters are left untouched and lowprev_last_error() returns a
 * message describing the defect (per thread, valid until the next
 * failing call on that thread).
 *
 * Document format (JSON object, unknown fields rejected):
 *
 *   {
 *     "partition": ["up", "down"],                    // atom names
 *     "gambles":   {"X": {"up": "1", "down": "-1"}},  // optional
 *     "events":    {"B": ["up"]},                     // optional
 *     "entries":   [{"gamble": "X",                   // name or inline
 *                    "cond": "B",                     // optional; name,
 *                                                     //  atom list, or
 *                                                     //  omitted = sure
 *                    "value": "1/5"}]                 // "p/q" or integer
 *   }
 *
 * Target specifications for lowprev_extend are "G" or "G|E" where G is
 * a declared gamble name or a comma-separated list of rationals in atom
 * order, and E a declared event name or a comma-separated list of atom
 * names; a missing "|E" means the sure event.
 */

#ifndef LOWPREV_LOWPREV_H
#define LOWPREV_LOWPREV_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/** Status of a library call. */
typedef enum LowprevStatus {
  LOWPREV_OK = 0,
  /** Malformed input: unparseable document or literal, unknown name,
   *  wrong arity, contradictory entries. */
  LOWPREV_ERROR_INVALID_ARGUMENT = 1,
  /** Input is well formed but a documented precondition of the requested
   *  operation fails (e.g. r = q in the generalized-Bayes-rule family,
   *  a capacity check on a domain without the full powerset shape). */
  LOWPREV_ERROR_PRECONDITION = 2,
  /** Unexpected internal failure; the message names the breach. */
  LOWPREV_ERROR_INTERNAL = 3
} LowprevStatus;

/** Opaque handle of a parsed assessment document. */
typedef struct LowprevDocument LowprevDocument;

/** Library version "major.minor.patch". Static string, do not free. */
const char* lowprev_version(void);

/** Message of the most recent failing call on this thread.  Static empty
 *  string when no call failed yet.  Do not free. */
const char* lowprev_last_error(void);

/** Releases a string returned by any query function.  NULL is a no-op. */
void lowprev_string_free(char* text);

/** Parses a JSON assessment document into a handle.
 *  @param json_text UTF-8 document text.
 *  @param out_doc   receives the handle; release with lowprev_document_free.
 */
LowprevStatus lowprev_document_parse(const char* json_text,
                                     LowprevDocument** out_doc);

/** Releases a document handle.  NULL is a no-op. */
void lowprev_document_free(LowprevDocument* doc);

/** Number of atoms of the document's possibility space. */
LowprevStatus lowprev_document_atom_count(const LowprevDocument* doc,
                                          size_t* out_count);

/** Number of assessed entries of the document. */
LowprevStatus lowprev_document_entry_count(const LowprevDocument* doc,
                                           size_t* out_count);

/** Runs one consistency check.
 *  @param class_name one of "internality", "1-AUL", "2-convex",
 *         "centered", "centered-2-convex", "2-coherent", "n-convex",
 *         "n-coherent", "convex", "C-convex", "coherent", "capacity".
 *  @param n gain count for the n-variants (>= 2); ignored otherwise.
 *  @param out_json verdict object {"satisfied": bool} with, when
 *         violated, exactly one of "witness" (terms with exact stakes,
 *         the conditioning event, and the negative supremum) or "note".
 */
LowprevStatus lowprev_check(const LowprevDocument* doc,
                            const char* class_name, unsigned n,
                            char** out_json);

/** Runs every consistency check.
 *  @param out_json array of {"class": name, "verdict": {...}} rows, in
 *         increasing logical strength; capacity appears only when the
 *         domain has the full-powerset lower-probability shape.
 */
LowprevStatus lowprev_classify(const LowprevDocument* doc, char** out_json);

/** Natural extension of the document's assessment at given targets.
 *  @param mode "2convex" (unit stakes) or "2coherent" (free stakes).
 *  @param targets   target specifications (see file comment).
 *  @param n_targets number of targets; must be positive.
 *  @param out_json  {"mode": ..., "extensions": [{"target": {...},
 *         "value": "p/q"|"-inf"|"+inf", "stake"?, "attaining_entry"?}]}.
 *         A stake is present exactly for finite values; stake 0 with no
 *         attaining entry marks the vacuous bound inf of the target.
 */
LowprevStatus lowprev_extend(const LowprevDocument* doc, const char* mode,
                             const char* const* targets, size_t n_targets,
                             char** out_json);

/** Verifies the four-entry generalized-Bayes-rule family
 *  {A -> pa, X|A -> pxa, A(X-r) -> 0, A(X-q) -> 0} without a document.
 *  @param gamble_values comma-separated rationals; the atoms are named
 *         "w1", "w2", ... after its length.
 *  @param event_atoms   comma-separated atom names of A (nonempty, not
 *         all atoms).
 *  @param r,q,pa,pxa    exact rational literals; r != q, pa in (0, 1].
 *  @param out_json {"interval": ["lo", "hi"], "r", "q", "pa", "pxa",
 *         "verdict": {...}}; the verdict is satisfied exactly when pxa,
 *         r and q all lie in the interval [inf(X|A), sup(X|A)].
 */
LowprevStatus lowprev_gbr(const char* gamble_values, const char* event_atoms,
                          const char* r, const char* q, const char* pa,
                          const char* pxa, char** out_json);

/** Value-at-Risk report over the document's *named gambles* (assessment
 *  entries of the document are ignored here).
 *  @param probs comma-separated atom probabilities in atom order
 *         (nonnegative rationals summing to one).
 *  @param alpha quantile level, a rational in (0, 1).
 *  @param out_json {"alpha", "values": [{"name", "value"}...],
 *         "centered", "2-convex", "2-coherent",
 *         "conjugate_dominance": verdicts...,
 *         "diagnosis"?: {"axiom": "A6", "lambda": "-1"}}.
 *         The prevision values are the negated Values-at-Risk; the
 *         conjugate-dominance check runs over the gambles whose negation
 *         is also present, and a violated dominance carries the A6
 *         diagnosis (negative-scaling failure at lambda = -1) explaining
 *         why the prevision cannot be 2-coherent.
 */
LowprevStatus lowprev_var(const LowprevDocument* doc, const char* probs,
                          const char* alpha, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* LOWPREV_LOWPREV_H */
