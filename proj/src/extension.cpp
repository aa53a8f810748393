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

/**@file   extension.cpp
 * @brief  Natural extensions and the generalized-Bayes-rule family.
 */

#include "extension.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "solver.hpp"

namespace lowprev {

namespace {

void require_same_partition(const Assessment& p,
                            const ConditionalGamble& target) {
  if (!same_partition(p.partition(), target.partition())) {
    throw std::invalid_argument(
        "natural extension: target lives on a different possibility space");
  }
}

/** Elementary gain A(X - v) of an assessment entry. */
Gamble entry_gain(const AssessmentEntry& entry) {
  return entry.target.gamble()
      .shifted(-entry.value)
      .restricted_to(entry.target.cond());
}

/** An entry may carry a positive stake against Z|B only when its gain is
 *  strictly negative everywhere it is nonzero outside B. */
bool admissible_against(const Gamble& gain, const Event& entry_cond,
                        const Event& b) {
  const Event outside = entry_cond.meet(b.complement());
  if (outside.is_empty()) {
    return true;
  }
  const Rational worst = restrict_sup(gain, outside);
  return worst < 0;
}

}  // namespace

ExtensionReport natext_2convex(const Assessment& p,
                               const ConditionalGamble& target) {
  require_same_partition(p, target);
  const Event& b = target.cond();
  const Gamble& z = target.gamble();

  std::optional<std::size_t> best_entry;
  Rational best_value;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const AssessmentEntry& entry = p.entry(i);
    const Gamble gain = entry_gain(entry);
    if (!admissible_against(gain, entry.target.cond(), b)) {
      continue;
    }
    const Rational bid = restrict_inf(z - gain, b);
    if (!best_entry || bid > best_value) {
      best_entry = i;
      best_value = bid;
    }
  }
  if (!best_entry) {
    return {ExtendedValue::neg_infinity(), std::nullopt, std::nullopt};
  }
  return {ExtendedValue::finite(best_value), best_entry, Rational(1)};
}

ExtensionReport natext_2coherent(const Assessment& p,
                                 const ConditionalGamble& target) {
  require_same_partition(p, target);
  const Event& b = target.cond();
  const Gamble& z = target.gamble();

  // The stake-zero scheme bids inf(Z|B) regardless of the assessment.
  const Rational vacuous = restrict_inf(z, b);
  std::optional<std::size_t> best_entry;
  Rational best_value = vacuous;
  Rational best_stake;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const AssessmentEntry& entry = p.entry(i);
    const Gamble gain = entry_gain(entry);
    if (!admissible_against(gain, entry.target.cond(), b)) {
      continue;
    }
    std::vector<AffinePiece> pieces;
    for (std::size_t atom : b.members()) {
      pieces.push_back({-gain.value(atom), z.value(atom)});
    }
    const PwlMaxResult peak = concave_pwl_max(pieces);
    if (peak.value.is_pos_infinity()) {
      return {ExtendedValue::pos_infinity(), std::nullopt, std::nullopt};
    }
    const Rational bid = peak.value.rational();
    if (bid > best_value) {
      best_entry = i;
      best_value = bid;
      best_stake = *peak.argmax;
    }
  }
  if (!best_entry) {
    return {ExtendedValue::finite(vacuous), std::nullopt, Rational(0)};
  }
  return {ExtendedValue::finite(best_value), best_entry, best_stake};
}

std::vector<ExtensionReport> natext_table(
    const Assessment& p, const std::vector<ConditionalGamble>& targets,
    NatextMode mode) {
  std::vector<ExtensionReport> reports;
  reports.reserve(targets.size());
  for (const ConditionalGamble& target : targets) {
    reports.push_back(mode == NatextMode::two_convex
                          ? natext_2convex(p, target)
                          : natext_2coherent(p, target));
  }

  // Fixed-point cross-check on targets that are entries of the assessment:
  // consistency reproduces every assessed value.  The converse holds for
  // the 2-convex mode only — a violating unit-stake pair is literally a
  // pricing scheme for its sold entry, so a fully covered inconsistent
  // domain must show a changed value.  A 2-coherence violation certified
  // only by a negative selling stake (both gambles bought) is not a
  // pricing scheme, and can leave every assessed value fixed.
  std::vector<bool> covered(p.size(), false);
  bool all_equal = true;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const std::optional<std::size_t> index = p.find(targets[i]);
    if (!index) {
      continue;
    }
    covered[*index] = true;
    const ExtensionReport& report = reports[i];
    const bool equal = report.value.is_finite() &&
                       report.value.rational() == p.entry(*index).value;
    if (!equal) {
      all_equal = false;
    }
  }
  const Verdict verdict = mode == NatextMode::two_convex ? check_2convex(p)
                                                         : check_2coherent(p);
  if (verdict.satisfied && !all_equal) {
    throw std::logic_error(
        "natural extension failed to reproduce a consistent assessment");
  }
  bool covers_domain = true;
  for (const bool flag : covered) {
    covers_domain = covers_domain && flag;
  }
  if (mode == NatextMode::two_convex && !verdict.satisfied && covers_domain &&
      all_equal) {
    throw std::logic_error(
        "natural extension failed to correct an inconsistent assessment");
  }
  return reports;
}

std::pair<Rational, Rational> gbr_interval(const ConditionalGamble& xa) {
  return {restrict_inf(xa.gamble(), xa.cond()),
          restrict_sup(xa.gamble(), xa.cond())};
}

Verdict verify_gbr_family(const Event& a, const Gamble& x, const Rational& r,
                          const Rational& q, const Rational& pa,
                          const Rational& pxa) {
  if (r == q) {
    throw PreconditionError(
        "conditioning family: the two update prices r and q must differ");
  }
  if (a.is_empty() || a.is_omega()) {
    throw PreconditionError(
        "conditioning family: the observed event must be neither impossible "
        "nor sure");
  }
  Rational pa_canonical = pa;
  pa_canonical.canonicalize();
  if (!(pa_canonical > 0) || pa_canonical > 1) {
    throw PreconditionError(
        "conditioning family: the probability of the observed event must lie "
        "in (0, 1]");
  }

  const Event omega = Event::omega(a.partition());
  std::vector<AssessmentEntry> entries;
  entries.push_back({ConditionalGamble(Gamble::indicator(a), omega),
                     pa_canonical});
  entries.push_back({ConditionalGamble(x, a), pxa});
  entries.push_back(
      {ConditionalGamble(x.shifted(-r).restricted_to(a), omega), Rational(0)});
  entries.push_back(
      {ConditionalGamble(x.shifted(-q).restricted_to(a), omega), Rational(0)});
  return check_2coherent(Assessment(std::move(entries)));
}

}  // namespace lowprev
