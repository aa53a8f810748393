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

/**@file   checker.cpp
 * @brief  Implementation of the consistency checks.
 */

#include "checker.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <utility>

#include "solver.hpp"

namespace lowprev {

namespace {

Verdict violated(Witness witness) {
  Verdict v;
  v.satisfied = false;
  v.witness = std::move(witness);
  return v;
}

Verdict violated_note(std::string note) {
  Verdict v;
  v.satisfied = false;
  v.note = std::move(note);
  return v;
}

/** Elementary gain of one assessed entry: B * (X - value). */
Gamble elementary_gain(const AssessmentEntry& entry) {
  return entry.target.gamble()
      .shifted(Rational(-entry.value))
      .restricted_to(entry.target.cond());
}

std::vector<Gamble> elementary_gains(const Assessment& p) {
  std::vector<Gamble> gains;
  gains.reserve(p.size());
  for (const AssessmentEntry& entry : p.entries()) {
    gains.push_back(elementary_gain(entry));
  }
  return gains;
}

bool all_conds_equal(const Assessment& p) {
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (!(p.entry(i).target.cond() == p.entry(0).target.cond())) return false;
  }
  return true;
}

/** Advances a k-combination of {0,...,n-1} in lexicographic order;
 *  returns false when the last combination has been passed. */
bool next_combination(std::vector<std::size_t>& combo, std::size_t n) {
  const std::size_t k = combo.size();
  for (std::size_t i = k; i-- > 0;) {
    if (combo[i] + (k - i) < n) {
      ++combo[i];
      for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

Event join_conds(const Assessment& p, const std::vector<std::size_t>& support,
                 const std::optional<std::size_t>& extra) {
  Event joined = extra ? p.entry(*extra).target.cond()
                       : p.entry(support.front()).target.cond();
  for (std::size_t index : support) {
    joined = joined.join(p.entry(index).target.cond());
  }
  return joined;
}

/** Maximizes epsilon subject to  (scheme gain)(w) + epsilon <= 0  on every
 *  atom of the conditioning event, stakes >= 0 summing to 1, epsilon in
 *  [0,1].  The element at sold_pos (if any) enters the gain negatively.
 *  Returns the stakes when a strictly positive slack exists.  The epsilon
 *  cap only limits the reported depth: any violating scheme of the given
 *  shape stays feasible with epsilon = min(1, -sup). */
std::optional<std::vector<Rational>> solve_coherent_scheme(
    const std::vector<Gamble>& gains, const std::vector<std::size_t>& support,
    const std::optional<std::size_t>& sold_pos, const Event& cond) {
  const std::size_t k = support.size();
  LinearProgram lp;
  lp.objective.assign(k + 1, Rational(0));
  lp.objective[k] = 1;
  for (std::size_t atom : cond.members()) {
    LpConstraint row;
    row.coeffs.assign(k + 1, Rational(0));
    for (std::size_t t = 0; t < k; ++t) {
      const Rational& g = gains[support[t]].value(atom);
      row.coeffs[t] = (sold_pos && *sold_pos == t) ? Rational(-g) : g;
    }
    row.coeffs[k] = 1;
    row.rel = LpRelation::le;
    row.rhs = 0;
    lp.constraints.push_back(std::move(row));
  }
  LpConstraint normalization;
  normalization.coeffs.assign(k + 1, Rational(0));
  for (std::size_t t = 0; t < k; ++t) normalization.coeffs[t] = 1;
  normalization.rel = LpRelation::eq;
  normalization.rhs = 1;
  lp.constraints.push_back(std::move(normalization));
  lp.lower_bounds.assign(k + 1, std::optional<Rational>(Rational(0)));
  lp.upper_bounds.assign(k + 1, std::nullopt);
  lp.upper_bounds[k] = Rational(1);
  const LpOutcome outcome = lp_solve(lp);
  if (outcome.status != LpStatus::optimal || !(outcome.value > 0)) {
    return std::nullopt;
  }
  return std::vector<Rational>(outcome.point.begin(),
                               outcome.point.begin() + k);
}

/** Same slack maximization for a convexity scheme: the sold entry has
 *  stake exactly 1, the bought stakes are >= 0 and sum to 1. */
std::optional<std::vector<Rational>> solve_convex_scheme(
    const std::vector<Gamble>& gains, const std::vector<std::size_t>& bought,
    std::size_t sold, const Event& cond) {
  const std::size_t k = bought.size();
  LinearProgram lp;
  lp.objective.assign(k + 1, Rational(0));
  lp.objective[k] = 1;
  for (std::size_t atom : cond.members()) {
    LpConstraint row;
    row.coeffs.assign(k + 1, Rational(0));
    for (std::size_t t = 0; t < k; ++t) {
      row.coeffs[t] = gains[bought[t]].value(atom);
    }
    row.coeffs[k] = 1;
    row.rel = LpRelation::le;
    row.rhs = gains[sold].value(atom);
    lp.constraints.push_back(std::move(row));
  }
  LpConstraint normalization;
  normalization.coeffs.assign(k + 1, Rational(0));
  for (std::size_t t = 0; t < k; ++t) normalization.coeffs[t] = 1;
  normalization.rel = LpRelation::eq;
  normalization.rhs = 1;
  lp.constraints.push_back(std::move(normalization));
  lp.lower_bounds.assign(k + 1, std::optional<Rational>(Rational(0)));
  lp.upper_bounds.assign(k + 1, std::nullopt);
  lp.upper_bounds[k] = Rational(1);
  const LpOutcome outcome = lp_solve(lp);
  if (outcome.status != LpStatus::optimal || !(outcome.value > 0)) {
    return std::nullopt;
  }
  return std::vector<Rational>(outcome.point.begin(),
                               outcome.point.begin() + k);
}

Witness coherent_scheme_witness(const Assessment& p,
                                const std::vector<std::size_t>& support,
                                const std::optional<std::size_t>& sold_pos,
                                const std::vector<Rational>& stakes) {
  std::vector<WitnessTerm> terms;
  for (std::size_t t = 0; t < support.size(); ++t) {
    const AssessmentEntry& entry = p.entry(support[t]);
    const Rational stake =
        (sold_pos && *sold_pos == t) ? Rational(-stakes[t]) : stakes[t];
    terms.push_back(WitnessTerm{entry.target, stake, entry.value});
  }
  return make_witness(std::move(terms), p.partition());
}

Witness convex_scheme_witness(const Assessment& p,
                              const std::vector<std::size_t>& bought,
                              std::size_t sold,
                              const std::vector<Rational>& stakes) {
  std::vector<WitnessTerm> terms;
  for (std::size_t t = 0; t < bought.size(); ++t) {
    const AssessmentEntry& entry = p.entry(bought[t]);
    terms.push_back(WitnessTerm{entry.target, stakes[t], entry.value});
  }
  const AssessmentEntry& sold_entry = p.entry(sold);
  terms.push_back(WitnessTerm{sold_entry.target, Rational(-1),
                              sold_entry.value});
  return make_witness(std::move(terms), p.partition());
}

std::string event_label(const Event& event) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const std::string& label : event.member_labels()) {
    if (!first) out << ',';
    out << label;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace

Gamble witness_gain(const std::vector<WitnessTerm>& terms,
                    const PartitionPtr& partition) {
  Gamble gain = Gamble::zero(partition);
  for (const WitnessTerm& term : terms) {
    gain = gain + term.target.gamble()
                      .shifted(Rational(-term.value))
                      .restricted_to(term.target.cond())
                      .scaled(term.stake);
  }
  return gain;
}

Witness make_witness(std::vector<WitnessTerm> terms,
                     const PartitionPtr& partition) {
  std::vector<WitnessTerm> merged;
  for (WitnessTerm& term : terms) {
    term.stake.canonicalize();
    bool found = false;
    for (WitnessTerm& existing : merged) {
      if (existing.target == term.target) {
        existing.stake += term.stake;
        found = true;
        break;
      }
    }
    if (!found) merged.push_back(std::move(term));
  }
  std::vector<WitnessTerm> kept;
  for (WitnessTerm& term : merged) {
    if (term.stake != 0) kept.push_back(std::move(term));
  }
  if (kept.empty()) {
    throw std::logic_error("witness has no term with a nonzero stake");
  }
  Event conditioning = kept.front().target.cond();
  for (std::size_t i = 1; i < kept.size(); ++i) {
    conditioning = conditioning.join(kept[i].target.cond());
  }
  const Gamble gain = witness_gain(kept, partition);
  const Rational sup = restrict_sup(gain, conditioning);
  if (!(sup < 0)) {
    throw std::logic_error("witness terms do not certify a violation");
  }
  return Witness{std::move(kept), std::move(conditioning), sup};
}

Verdict check_internality(const Assessment& p) {
  for (const AssessmentEntry& entry : p.entries()) {
    const Rational sup =
        restrict_sup(entry.target.gamble(), entry.target.cond());
    if (entry.value > sup) {
      return violated(make_witness(
          {WitnessTerm{entry.target, Rational(1), entry.value}},
          p.partition()));
    }
    const Rational inf =
        restrict_inf(entry.target.gamble(), entry.target.cond());
    if (entry.value < inf) {
      return violated(make_witness(
          {WitnessTerm{entry.target, Rational(-1), entry.value}},
          p.partition()));
    }
  }
  return Verdict{};
}

Verdict check_1aul(const Assessment& p) {
  for (const AssessmentEntry& entry : p.entries()) {
    const Rational sup =
        restrict_sup(entry.target.gamble(), entry.target.cond());
    if (entry.value > sup) {
      return violated(make_witness(
          {WitnessTerm{entry.target, Rational(1), entry.value}},
          p.partition()));
    }
  }
  return Verdict{};
}

Verdict check_2convex(const Assessment& p) {
  const std::vector<Gamble> gains = elementary_gains(p);
  for (std::size_t sold = 0; sold < p.size(); ++sold) {
    for (std::size_t bought = 0; bought < p.size(); ++bought) {
      if (bought == sold) continue;  // the pair gain is identically zero
      const Gamble gain = gains[bought] - gains[sold];
      const Event cond =
          p.entry(bought).target.cond().join(p.entry(sold).target.cond());
      const Rational sup = restrict_sup(gain, cond);
      if (sup < 0) {
        const AssessmentEntry& b = p.entry(bought);
        const AssessmentEntry& s = p.entry(sold);
        return violated(make_witness(
            {WitnessTerm{b.target, Rational(1), b.value},
             WitnessTerm{s.target, Rational(-1), s.value}},
            p.partition()));
      }
    }
  }
  return Verdict{};
}

Verdict check_2coherent(const Assessment& p) {
  // Single-entry schemes (either stake zero) reduce to internality.
  Verdict single = check_internality(p);
  if (!single.satisfied) return single;
  const std::vector<Gamble> gains = elementary_gains(p);
  // Pair schemes: normalize the buying stake to 1; the selling stake s0
  // ranges over all reals.  A violation needs, on every atom of the
  // conditioning join,  g1(w) - s0 * g0(w) < 0,  which is a strict
  // one-dimensional feasibility problem in s0.  Equal pairs only rescale
  // a single elementary gain and are settled by the internality check.
  for (std::size_t sold = 0; sold < p.size(); ++sold) {
    for (std::size_t bought = 0; bought < p.size(); ++bought) {
      if (bought == sold) continue;
      const Event cond =
          p.entry(bought).target.cond().join(p.entry(sold).target.cond());
      std::vector<Bound> lower;
      std::vector<Bound> upper;
      bool feasible = true;
      for (std::size_t atom : cond.members()) {
        const Rational& g0 = gains[sold].value(atom);
        const Rational& g1 = gains[bought].value(atom);
        if (g0 == 0) {
          if (g1 >= 0) {
            feasible = false;
            break;
          }
          continue;
        }
        const Rational ratio = g1 / g0;
        if (g0 > 0) {
          lower.push_back(Bound{ratio, true});
        } else {
          upper.push_back(Bound{ratio, true});
        }
      }
      if (!feasible) continue;
      const std::optional<Rational> s0 = strict_feasible_1d(lower, upper);
      if (!s0) continue;
      const AssessmentEntry& b = p.entry(bought);
      const AssessmentEntry& s = p.entry(sold);
      return violated(make_witness(
          {WitnessTerm{b.target, Rational(1), b.value},
           WitnessTerm{s.target, Rational(-*s0), s.value}},
          p.partition()));
    }
  }
  return Verdict{};
}

Verdict check_n_coherent(const Assessment& p, const GainCount& n) {
  if (!n.is_unbounded() && n.value() == 0) {
    throw std::invalid_argument("the gain count of n-coherence must be >= 1");
  }
  const std::size_t total = p.size();
  if (total == 0) return Verdict{};
  const std::size_t cap =
      n.is_unbounded() ? total
                       : std::min<std::size_t>(n.value(), total);
  const std::vector<Gamble> gains = elementary_gains(p);
  if (n.is_unbounded() && all_conds_equal(p)) {
    // One shared conditioning event: every scheme bets on the same event,
    // so zero stakes are harmless and one program per selling choice over
    // the full entry set is complete.
    std::vector<std::size_t> support(total);
    std::iota(support.begin(), support.end(), std::size_t{0});
    const Event cond = p.entry(0).target.cond();
    for (std::size_t choice = 0; choice <= total; ++choice) {
      const std::optional<std::size_t> sold_pos =
          choice == 0 ? std::nullopt
                      : std::optional<std::size_t>(choice - 1);
      const auto stakes =
          solve_coherent_scheme(gains, support, sold_pos, cond);
      if (stakes) {
        return violated(coherent_scheme_witness(p, support, sold_pos,
                                                *stakes));
      }
    }
    return Verdict{};
  }
  if (n.is_unbounded() && total > 16) {
    throw std::invalid_argument(
        "unbounded coherence over mixed conditioning events enumerates "
        "entry subsets and is limited to 16 entries");
  }
  for (std::size_t size = 1; size <= cap; ++size) {
    std::vector<std::size_t> support(size);
    std::iota(support.begin(), support.end(), std::size_t{0});
    do {
      const Event cond = join_conds(p, support, std::nullopt);
      for (std::size_t choice = 0; choice <= size; ++choice) {
        const std::optional<std::size_t> sold_pos =
            choice == 0 ? std::nullopt
                        : std::optional<std::size_t>(choice - 1);
        const auto stakes =
            solve_coherent_scheme(gains, support, sold_pos, cond);
        if (stakes) {
          return violated(coherent_scheme_witness(p, support, sold_pos,
                                                  *stakes));
        }
      }
    } while (next_combination(support, total));
  }
  return Verdict{};
}

Verdict check_n_convex(const Assessment& p, const GainCount& n) {
  if (!n.is_unbounded() && n.value() < 2) {
    throw std::invalid_argument("the gain count of n-convexity must be >= 2");
  }
  const std::size_t total = p.size();
  if (total == 0) return Verdict{};
  const std::size_t bought_cap =
      n.is_unbounded() ? total
                       : std::min<std::size_t>(n.value() - 1, total);
  const std::vector<Gamble> gains = elementary_gains(p);
  if (n.is_unbounded() && all_conds_equal(p)) {
    std::vector<std::size_t> bought(total);
    std::iota(bought.begin(), bought.end(), std::size_t{0});
    const Event cond = p.entry(0).target.cond();
    for (std::size_t sold = 0; sold < total; ++sold) {
      const auto stakes = solve_convex_scheme(gains, bought, sold, cond);
      if (stakes) {
        return violated(convex_scheme_witness(p, bought, sold, *stakes));
      }
    }
    return Verdict{};
  }
  if (n.is_unbounded() && total > 16) {
    throw std::invalid_argument(
        "unbounded convexity over mixed conditioning events enumerates "
        "entry subsets and is limited to 16 entries");
  }
  for (std::size_t sold = 0; sold < total; ++sold) {
    for (std::size_t size = 1; size <= bought_cap; ++size) {
      std::vector<std::size_t> bought(size);
      std::iota(bought.begin(), bought.end(), std::size_t{0});
      do {
        const Event cond = join_conds(p, bought, sold);
        const auto stakes = solve_convex_scheme(gains, bought, sold, cond);
        if (stakes) {
          return violated(convex_scheme_witness(p, bought, sold, *stakes));
        }
      } while (next_combination(bought, total));
    }
  }
  return Verdict{};
}

Verdict check_coherent(const Assessment& p) {
  return check_n_coherent(p, GainCount::unbounded());
}

Verdict check_convex(const Assessment& p) {
  return check_n_convex(p, GainCount::unbounded());
}

Verdict check_centered(const Assessment& p) {
  for (const Event& cond : p.conditioning_events()) {
    const ConditionalGamble zero(Gamble::zero(p.partition()), cond);
    const std::optional<Rational> value = p.value_of(zero);
    if (!value) {
      return violated_note("centering requires the zero gamble conditional "
                           "on " + event_label(cond) +
                           " to be assessed with value 0; it is missing");
    }
    if (*value != 0) {
      return violated_note("centering requires the zero gamble conditional "
                           "on " + event_label(cond) +
                           " to have value 0; it is assessed at " +
                           rat_to_string(*value));
    }
  }
  return Verdict{};
}

Verdict check_centered_2convex(const Assessment& p) {
  Verdict centered = check_centered(p);
  if (!centered.satisfied) return centered;
  return check_2convex(p);
}

Verdict check_c_convex(const Assessment& p) {
  Verdict centered = check_centered(p);
  if (!centered.satisfied) return centered;
  return check_convex(p);
}

bool capacity_domain(const Assessment& p) {
  const std::size_t atoms = p.partition()->size();
  const std::size_t expected = std::size_t{1} << atoms;
  if (p.size() != expected) return false;
  for (const AssessmentEntry& entry : p.entries()) {
    if (!entry.target.cond().is_omega()) return false;
    for (const Rational& value : entry.target.gamble().values()) {
      if (value != 0 && value != 1) return false;
    }
  }
  // Entry keys are unique and there are exactly 2^atoms indicator gambles,
  // so every event of the partition is covered.
  return true;
}

Verdict check_capacity(const Assessment& p) {
  if (!capacity_domain(p)) {
    throw PreconditionError(
        "the capacity check requires the assessment to consist of exactly "
        "the indicator gambles of every event of the partition, "
        "conditioned on the sure event");
  }
  const std::size_t atoms = p.partition()->size();
  const std::size_t expected = std::size_t{1} << atoms;
  std::vector<Rational> value_of_mask(expected, Rational(0));
  std::vector<Event> event_of_mask;
  event_of_mask.reserve(expected);
  for (std::size_t mask = 0; mask < expected; ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t atom = 0; atom < atoms; ++atom) {
      if (mask & (std::size_t{1} << atom)) members.push_back(atom);
    }
    event_of_mask.emplace_back(p.partition(), members);
  }
  for (const AssessmentEntry& entry : p.entries()) {
    std::size_t mask = 0;
    for (std::size_t atom = 0; atom < atoms; ++atom) {
      if (entry.target.gamble().value(atom) == 1) {
        mask |= std::size_t{1} << atom;
      }
    }
    value_of_mask[mask] = entry.value;
  }
  if (value_of_mask[0] != 0) {
    return violated_note("a capacity assigns 0 to the impossible event; it "
                         "is assessed at " +
                         rat_to_string(value_of_mask[0]));
  }
  if (value_of_mask[expected - 1] != 1) {
    return violated_note("a capacity assigns 1 to the sure event; it is "
                         "assessed at " +
                         rat_to_string(value_of_mask[expected - 1]));
  }
  // Monotonicity under inclusion follows by transitivity from the
  // one-atom covers.
  for (std::size_t mask = 0; mask < expected; ++mask) {
    for (std::size_t atom = 0; atom < atoms; ++atom) {
      const std::size_t bit = std::size_t{1} << atom;
      if (mask & bit) continue;
      const std::size_t larger = mask | bit;
      if (value_of_mask[mask] > value_of_mask[larger]) {
        return violated_note(
            "a capacity is monotone under inclusion, but the event " +
            event_label(event_of_mask[mask]) + " has value " +
            rat_to_string(value_of_mask[mask]) + " while its superset " +
            event_label(event_of_mask[larger]) + " has value " +
            rat_to_string(value_of_mask[larger]));
      }
    }
  }
  return Verdict{};
}

namespace {

const ConditionalGamble& require_gamble(
    const std::optional<ConditionalGamble>& field, const char* name) {
  if (!field) {
    throw std::invalid_argument(std::string("the axiom instance requires "
                                            "the field '") + name + "'");
  }
  return *field;
}

Rational require_scalar(const std::optional<Rational>& field) {
  if (!field) {
    throw std::invalid_argument(
        "the axiom instance requires the field 'scalar'");
  }
  // Comparisons and products need canonical form.
  Rational value = *field;
  value.canonicalize();
  return value;
}

const Event& require_event(const std::optional<Event>& field) {
  if (!field) {
    throw std::invalid_argument(
        "the axiom instance requires the field 'event_a'");
  }
  return *field;
}

void require_same_cond(const ConditionalGamble& x, const ConditionalGamble& y) {
  if (!(x.cond() == y.cond())) {
    throw std::invalid_argument(
        "the axiom instance requires both gambles to share one "
        "conditioning event");
  }
}

/** Looks up every referenced entry at once so a precondition failure can
 *  list all missing conditional gambles. */
std::vector<Rational> lookup_all(const Assessment& p,
                                 const std::vector<ConditionalGamble>& keys) {
  std::vector<Rational> values;
  std::string missing;
  for (const ConditionalGamble& key : keys) {
    const std::optional<Rational> value = p.value_of(key);
    if (value) {
      values.push_back(*value);
    } else {
      if (!missing.empty()) missing += ", ";
      missing += to_string(key);
    }
  }
  if (!missing.empty()) {
    throw PreconditionError(
        "the axiom instance references unassessed conditional gambles: " +
        missing);
  }
  return values;
}

/** Pointwise x >= y + offset on the atoms of the conditioning event. */
bool dominates_on_cond(const ConditionalGamble& x, const ConditionalGamble& y,
                       const Rational& offset) {
  for (std::size_t atom : x.cond().members()) {
    const Rational rhs = y.gamble().value(atom) + offset;
    if (x.gamble().value(atom) < rhs) return false;
  }
  return true;
}

}  // namespace

bool check_axiom(const Assessment& p, Axiom axiom,
                 const AxiomInstance& instance) {
  switch (axiom) {
    case Axiom::a1: {
      const ConditionalGamble& x = require_gamble(instance.x, "x");
      const ConditionalGamble& y = require_gamble(instance.y, "y");
      require_same_cond(x, y);
      const std::vector<Rational> v = lookup_all(p, {x, y});
      const Rational lhs = v[0] - v[1];
      const Rational sup = restrict_sup(x.gamble() - y.gamble(), x.cond());
      return lhs <= sup;
    }
    case Axiom::a1prime: {
      const ConditionalGamble& x = require_gamble(instance.x, "x");
      const ConditionalGamble& y = require_gamble(instance.y, "y");
      const Rational mu = require_scalar(instance.scalar);
      require_same_cond(x, y);
      const std::vector<Rational> v = lookup_all(p, {x, y});
      if (!dominates_on_cond(x, y, mu)) return true;
      const Rational rhs = v[1] + mu;
      return v[0] >= rhs;
    }
    case Axiom::a2: {
      const ConditionalGamble& x = require_gamble(instance.x, "x");
      const Rational lambda = require_scalar(instance.scalar);
      if (lambda < 0) {
        throw std::invalid_argument(
            "the scalar of this axiom must be nonnegative");
      }
      const ConditionalGamble scaled(x.gamble().scaled(lambda), x.cond());
      const std::vector<Rational> v = lookup_all(p, {x, scaled});
      const Rational rhs = lambda * v[0];
      return v[1] == rhs;
    }
    case Axiom::a3: {
      const ConditionalGamble& x = require_gamble(instance.x, "x");
      const ConditionalGamble& y = require_gamble(instance.y, "y");
      require_same_cond(x, y);
      const ConditionalGamble sum(x.gamble() + y.gamble(), x.cond());
      const std::vector<Rational> v = lookup_all(p, {x, y, sum});
      const Rational rhs = v[0] + v[1];
      return v[2] >= rhs;
    }
    case Axiom::a4: {
      const ConditionalGamble& x = require_gamble(instance.x, "x");
      const Event& a = require_event(instance.event_a);
      const Event ab = a.meet(x.cond());
      if (ab.is_empty()) {
        throw std::invalid_argument(
            "this axiom requires a non-empty conjunction of the event with "
            "the conditioning event");
      }
      const ConditionalGamble inner(x.gamble(), ab);
      const std::vector<Rational> v = lookup_all(p, {x, inner});
      const ConditionalGamble composite(
          x.gamble().shifted(Rational(-v[1])).restricted_to(a), x.cond());
      const std::vector<Rational> c = lookup_all(p, {composite});
      return c[0] == 0;
    }
    case Axiom::a5: {
      const ConditionalGamble& x = require_gamble(instance.x, "x");
      const ConditionalGamble& y = require_gamble(instance.y, "y");
      const Rational lambda = require_scalar(instance.scalar);
      if (!(lambda > 0 && lambda < 1)) {
        throw std::invalid_argument(
            "the scalar of this axiom must lie strictly between 0 and 1");
      }
      require_same_cond(x, y);
      const Rational complement = Rational(1) - lambda;
      const ConditionalGamble mix(
          x.gamble().scaled(lambda) + y.gamble().scaled(complement),
          x.cond());
      const std::vector<Rational> v = lookup_all(p, {x, y, mix});
      const Rational rhs = lambda * v[0] + complement * v[1];
      return v[2] >= rhs;
    }
    case Axiom::a6: {
      const ConditionalGamble& x = require_gamble(instance.x, "x");
      const Rational lambda = require_scalar(instance.scalar);
      if (!(lambda < 0)) {
        throw std::invalid_argument(
            "the scalar of this axiom must be negative");
      }
      const ConditionalGamble scaled(x.gamble().scaled(lambda), x.cond());
      const std::vector<Rational> v = lookup_all(p, {x, scaled});
      const Rational rhs = lambda * v[0];
      return v[1] <= rhs;
    }
    case Axiom::monotone: {
      const ConditionalGamble& x = require_gamble(instance.x, "x");
      const ConditionalGamble& y = require_gamble(instance.y, "y");
      require_same_cond(x, y);
      const std::vector<Rational> v = lookup_all(p, {x, y});
      if (!dominates_on_cond(x, y, Rational(0))) return true;
      return v[0] >= v[1];
    }
    case Axiom::translation: {
      const ConditionalGamble& x = require_gamble(instance.x, "x");
      const Rational mu = require_scalar(instance.scalar);
      const ConditionalGamble shifted(x.gamble().shifted(mu), x.cond());
      const std::vector<Rational> v = lookup_all(p, {x, shifted});
      const Rational rhs = v[0] + mu;
      return v[1] == rhs;
    }
  }
  throw std::logic_error("unknown axiom");
}

std::vector<ClassificationEntry> classify(const Assessment& p) {
  const Verdict internality = check_internality(p);
  const Verdict one_aul = check_1aul(p);
  const Verdict two_convex = check_2convex(p);
  const Verdict centered = check_centered(p);
  const Verdict centered_two_convex = check_centered_2convex(p);
  const Verdict two_coherent = check_2coherent(p);
  const Verdict two_convex_scheme = check_n_convex(p, GainCount::finite(2));
  const Verdict two_coherent_scheme =
      check_n_coherent(p, GainCount::finite(2));
  const Verdict three_convex = check_n_convex(p, GainCount::finite(3));
  const Verdict three_coherent = check_n_coherent(p, GainCount::finite(3));
  const Verdict convex = check_convex(p);
  const Verdict c_convex = check_c_convex(p);
  const Verdict coherent = check_coherent(p);
  std::optional<Verdict> capacity;
  if (capacity_domain(p)) capacity = check_capacity(p);

  const auto implies = [](const Verdict& stronger, const Verdict& weaker,
                          const char* what) {
    if (stronger.satisfied && !weaker.satisfied) {
      throw std::logic_error(std::string("consistency lattice breach: ") +
                             what);
    }
  };
  const auto agree = [](const Verdict& a, const Verdict& b,
                        const char* what) {
    if (a.satisfied != b.satisfied) {
      throw std::logic_error(std::string("consistency check mismatch: ") +
                             what);
    }
  };
  agree(two_convex, two_convex_scheme,
        "pairwise 2-convexity vs two-gain scheme enumeration");
  agree(two_coherent, two_coherent_scheme,
        "pairwise 2-coherence vs two-gain scheme enumeration");
  implies(coherent, convex, "coherence implies convexity");
  implies(coherent, three_coherent, "coherence implies 3-coherence");
  implies(three_coherent, two_coherent, "3-coherence implies 2-coherence");
  implies(convex, three_convex, "convexity implies 3-convexity");
  implies(three_convex, two_convex, "3-convexity implies 2-convexity");
  implies(two_coherent, two_convex, "2-coherence implies 2-convexity");
  implies(two_coherent, internality, "2-coherence implies internality");
  implies(internality, one_aul, "internality implies 1-AUL");
  implies(c_convex, centered_two_convex,
          "C-convexity implies centered 2-convexity");
  implies(centered_two_convex, one_aul,
          "centered 2-convexity implies 1-AUL");
  if (centered.satisfied && convex.satisfied && !c_convex.satisfied) {
    throw std::logic_error("consistency check mismatch: C-convexity must "
                           "hold under centering plus convexity");
  }
  if (capacity) {
    agree(*capacity, centered_two_convex,
          "capacity structure vs centered 2-convexity on a full powerset "
          "domain");
  }

  std::vector<ClassificationEntry> table;
  table.push_back({"internality", internality});
  table.push_back({"1-AUL", one_aul});
  table.push_back({"2-convex", two_convex});
  table.push_back({"centered-2-convex", centered_two_convex});
  table.push_back({"2-coherent", two_coherent});
  table.push_back({"3-convex", three_convex});
  table.push_back({"3-coherent", three_coherent});
  table.push_back({"convex", convex});
  table.push_back({"C-convex", c_convex});
  table.push_back({"coherent", coherent});
  if (capacity) table.push_back({"capacity", *capacity});
  return table;
}

}  // namespace lowprev
