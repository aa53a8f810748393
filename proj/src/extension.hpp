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

/**@file   extension.hpp
 * @brief  Natural extensions of lower-prevision assessments under the
 *         2-convex and 2-coherent consistency notions, and the
 *         generalized-Bayes-rule interval with its four-entry family check.
 *
 * Both extensions are suprema of the acceptable-price sets cut out by the
 * respective betting schemes.  The acceptable prices form an open
 * half-line, so a report's value is the (possibly unattained) boundary;
 * equality statements always refer to the value itself.
 */

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "checker.hpp"
#include "core.hpp"

namespace lowprev {

/** Which natural extension a batch computation applies. */
enum class NatextMode { two_convex, two_coherent };

/** Result of one natural-extension evaluation.
 *
 *  For a finite 2-convex value, attaining_entry indexes the assessment
 *  entry achieving the supremum and the stake is the unit buying stake 1.
 *  For a finite 2-coherent value the stake is the maximizing s >= 0: when
 *  it is positive, attaining_entry names the entry it multiplies; when the
 *  vacuous no-entry scheme attains the value (which is then inf of the
 *  target over its conditioning event), the stake is 0 and no entry is
 *  referenced.  Infinite values carry neither entry nor stake. */
struct ExtensionReport {
  ExtendedValue value;
  std::optional<std::size_t> attaining_entry;
  std::optional<Rational> stake;
};

/** 2-convex natural extension of the assessment at one target Z|B.
 *
 *  Per entry (X|A -> v) with gain g = A(X - v): the entry is admissible
 *  when g is strictly negative throughout A and outside B (vacuously so
 *  when A implies B), and then bids min over B of (Z - g).  The value is
 *  the largest bid, or -infinity when no entry is admissible; +infinity
 *  cannot occur.
 *  @throws std::invalid_argument on a partition mismatch. */
ExtensionReport natext_2convex(const Assessment& p,
                               const ConditionalGamble& target);

/** 2-coherent natural extension of the assessment at one target Z|B.
 *
 *  The stake-zero scheme always bids inf(Z|B), so the value is never
 *  -infinity.  An entry admissible as in the 2-convex case bids
 *  sup over s >= 0 of min over B of (Z - s*g), a one-dimensional concave
 *  piecewise-linear maximization; the value is +infinity exactly when
 *  some admissible entry's gain is strictly negative on all of B.
 *  @throws std::invalid_argument on a partition mismatch. */
ExtensionReport natext_2coherent(const Assessment& p,
                                 const ConditionalGamble& target);

/** Batch evaluation of one natural extension over many targets.
 *
 *  Internally cross-checks the fixed-point law on targets that are entries
 *  of the assessment: a consistent assessment (per the matching check) is
 *  reproduced exactly in both modes, and a 2-convexity violation is
 *  strictly corrected at some entry once the targets cover the whole
 *  domain; a breach throws std::logic_error.  No such converse holds in
 *  the 2-coherent mode: a violation certified only by a negative selling
 *  stake (buying both gambles) is invisible to the extension's pricing
 *  schemes and may leave every assessed value fixed. */
std::vector<ExtensionReport> natext_table(
    const Assessment& p, const std::vector<ConditionalGamble>& targets,
    NatextMode mode);

/** The closed interval [inf(X|A), sup(X|A)] of conditional prevision
 *  values admissible in a 2-coherent four-entry conditioning family.
 *  @throws std::domain_error when A is empty. */
std::pair<Rational, Rational> gbr_interval(const ConditionalGamble& xa);

/** Builds the four-entry family {A -> pa, X|A -> pxa, A(X-r) -> 0,
 *  A(X-q) -> 0} (unconditional entries on the sure event) and returns its
 *  2-coherence verdict; the family is consistent exactly when pxa, r, q
 *  all lie in gbr_interval(X|A).
 *  @throws PreconditionError when r = q, when A is empty or the sure
 *  event, or when pa is outside (0, 1] — each reported individually. */
Verdict verify_gbr_family(const Event& a, const Gamble& x, const Rational& r,
                          const Rational& q, const Rational& pa,
                          const Rational& pxa);

}  // namespace lowprev
