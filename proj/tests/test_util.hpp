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

/**@file   test_util.hpp
 * @brief  Shared test helpers: deterministic random generators over exact
 *         rationals and the canonical worked assessments used across suites.
 *
 * Random draws go through rng()-modulo helpers rather than
 * std::uniform_int_distribution so that a fixed seed reproduces the same
 * sequence on any standard library.
 */

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "core.hpp"

namespace lowprev::testutil {

using Rng = std::mt19937_64;

/** Uniform-ish integer in [lo, hi] (inclusive), deterministic per seed. */
inline long rand_int(Rng& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

/** Random rational in [lo, hi] with denominator in {1, 2, 4, 8}. */
inline Rational rand_rational(Rng& rng, long lo, long hi) {
  static const long kDens[] = {1, 2, 4, 8};
  const long den = kDens[rand_int(rng, 0, 3)];
  const long num = rand_int(rng, lo * den, hi * den);
  Rational value(num, den);
  value.canonicalize();
  return value;
}

/** Partition with `n` atoms labelled w1..wn. */
inline PartitionPtr make_partition(std::size_t n) {
  std::vector<std::string> atoms;
  atoms.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) atoms.push_back("w" + std::to_string(i));
  return std::make_shared<const Partition>(std::move(atoms));
}

/** Random non-empty event. */
inline Event rand_event(Rng& rng, const PartitionPtr& partition) {
  const std::size_t n = partition->size();
  std::vector<std::size_t> members;
  while (members.empty()) {
    members.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (rand_int(rng, 0, 1) == 1) members.push_back(i);
    }
  }
  return Event(partition, members);
}

/** Random gamble with values in [lo, hi]. */
inline Gamble rand_gamble(Rng& rng, const PartitionPtr& partition, long lo,
                          long hi) {
  std::vector<Rational> values;
  values.reserve(partition->size());
  for (std::size_t i = 0; i < partition->size(); ++i) {
    values.push_back(rand_rational(rng, lo, hi));
  }
  return Gamble(partition, std::move(values));
}

/** Random assessment: `entries` conditional gambles with values in
 *  [value_lo, value_hi]; duplicate keys are re-rolled. */
inline Assessment rand_assessment(Rng& rng, const PartitionPtr& partition,
                                  std::size_t entries, long value_lo = -2,
                                  long value_hi = 2) {
  Assessment result(partition);
  for (std::size_t i = 0; i < entries; ++i) {
    for (;;) {
      ConditionalGamble target(rand_gamble(rng, partition, -2, 2),
                               rand_event(rng, partition));
      if (result.find(target)) continue;
      result = result.with_entry(target,
                                 rand_rational(rng, value_lo, value_hi));
      break;
    }
  }
  return result;
}

/** Random assessment whose values all lie inside [inf(X|B), sup(X|B)]. */
inline Assessment rand_internal_assessment(Rng& rng,
                                           const PartitionPtr& partition,
                                           std::size_t entries) {
  Assessment result(partition);
  for (std::size_t i = 0; i < entries; ++i) {
    for (;;) {
      ConditionalGamble target(rand_gamble(rng, partition, -2, 2),
                               rand_event(rng, partition));
      if (result.find(target)) continue;
      const Rational lo = restrict_inf(target.gamble(), target.cond());
      const Rational hi = restrict_sup(target.gamble(), target.cond());
      // Convex draw t*lo + (1-t)*hi with t in {0, 1/4, ..., 1}.
      const Rational t(rand_int(rng, 0, 4), 4);
      result = result.with_entry(target, t * lo + (1 - t) * hi);
      break;
    }
  }
  return result;
}

/** Strictly positive probability vector with denominator-8 weights. */
inline std::vector<Rational> rand_positive_probs(Rng& rng, std::size_t n) {
  std::vector<long> weights(n);
  long total = 0;
  for (auto& w : weights) {
    w = rand_int(rng, 1, 8);
    total += w;
  }
  std::vector<Rational> probs;
  probs.reserve(n);
  for (long w : weights) {
    Rational p(w, total);
    p.canonicalize();
    probs.push_back(p);
  }
  return probs;
}

/** Conditional expectation E[X|B] under strictly positive atom weights. */
inline Rational conditional_expectation(const std::vector<Rational>& probs,
                                        const Gamble& x, const Event& b) {
  Rational num(0);
  Rational den(0);
  for (std::size_t atom : b.members()) {
    num += probs[atom] * x.value(atom);
    den += probs[atom];
  }
  Rational value = num / den;
  value.canonicalize();
  return value;
}

/** Random restriction of a conditional expectation: a coherent assessment. */
inline Assessment rand_expectation_assessment(Rng& rng,
                                              const PartitionPtr& partition,
                                              std::size_t entries) {
  const auto probs = rand_positive_probs(rng, partition->size());
  Assessment result(partition);
  for (std::size_t i = 0; i < entries; ++i) {
    for (;;) {
      ConditionalGamble target(rand_gamble(rng, partition, -2, 2),
                               rand_event(rng, partition));
      if (result.find(target)) continue;
      result = result.with_entry(
          target, conditional_expectation(probs, target.gamble(),
                                          target.cond()));
      break;
    }
  }
  return result;
}

/** The two-entry internality example: atoms {b1, b2, c}, B = {b1, b2},
 *  X = (-1, 1, 0) so the image of X|B is {-1, 1}, P(X|B) = 1/5, and the
 *  second entry 2X|B carries the supplied value. */
inline Assessment internality_example(const Rational& value_for_2x) {
  auto partition = std::make_shared<const Partition>(
      std::vector<std::string>{"b1", "b2", "c"});
  const Event b(partition, {0, 1});
  const Gamble x(partition, {Rational(-1), Rational(1), Rational(0)});
  return Assessment(std::vector<AssessmentEntry>{
      {ConditionalGamble(x, b), Rational(1, 5)},
      {ConditionalGamble(x.scaled(2), b), value_for_2x},
  });
}

/** The 16-event lower probability on atoms {a, b, c, d}: every event E of
 *  the powerset is assessed (as an indicator gamble conditional on the sure
 *  event) with value 1 for the sure event, 1/2 when E has two or three
 *  elements including a, and 0 otherwise.  It is a normalized monotone set
 *  function that is 3-coherent but not coherent. */
inline Assessment sixteen_event_assessment() {
  auto partition = std::make_shared<const Partition>(
      std::vector<std::string>{"a", "b", "c", "d"});
  std::vector<AssessmentEntry> entries;
  const Event omega = Event::omega(partition);
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t atom = 0; atom < 4; ++atom) {
      if (mask & (1u << atom)) members.push_back(atom);
    }
    const Event e(partition, members);
    Rational value(0);
    if (e.is_omega()) {
      value = 1;
    } else if ((e.member_count() == 2 || e.member_count() == 3) &&
               e.contains(0)) {
      value = Rational(1, 2);
    }
    entries.push_back({ConditionalGamble(Gamble::indicator(e), omega), value});
  }
  return Assessment(std::move(entries));
}

/** The two-point value-at-risk instance: atoms {w1, w2}, X = (-1, 2) with
 *  equal weights; at level 3/5 the derived lower prevision assigns
 *  X -> 2, -X -> 1, 0 -> 0. */
inline Assessment var_example_assessment() {
  auto partition = make_partition(2);
  const Event omega = Event::omega(partition);
  const Gamble x(partition, {Rational(-1), Rational(2)});
  return Assessment(std::vector<AssessmentEntry>{
      {ConditionalGamble(x, omega), Rational(2)},
      {ConditionalGamble(-x, omega), Rational(1)},
      {ConditionalGamble(Gamble::zero(partition), omega), Rational(0)},
  });
}

/** The four-entry conditioning family {A -> pa, X|A -> pxa, A(X-r) -> 0,
 *  A(X-q) -> 0} used by the generalized-Bayes-rule characterization. */
inline Assessment gbr_family_assessment(const Event& a, const Gamble& x,
                                        const Rational& r, const Rational& q,
                                        const Rational& pa,
                                        const Rational& pxa) {
  const PartitionPtr& partition = x.partition();
  const Event omega = Event::omega(partition);
  const Gamble ind_a = Gamble::indicator(a);
  return Assessment(std::vector<AssessmentEntry>{
      {ConditionalGamble(ind_a, omega), pa},
      {ConditionalGamble(x, a), pxa},
      {ConditionalGamble(x.shifted(-r).restricted_to(a), omega), Rational(0)},
      {ConditionalGamble(x.shifted(-q).restricted_to(a), omega), Rational(0)},
  });
}

}  // namespace lowprev::testutil
