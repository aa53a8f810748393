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

/**@file   models.cpp
 * @brief  Value-at-Risk previsions and conjugate upper previsions.
 */

#include "models.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lowprev {

FiniteDistribution::FiniteDistribution(PartitionPtr partition,
                                       std::vector<Rational> probs)
    : partition_(std::move(partition)), probs_(std::move(probs)) {
  if (probs_.size() != partition_->size()) {
    throw std::invalid_argument(
        "distribution: one mass per atom of the partition is required");
  }
  Rational total(0);
  for (Rational& p : probs_) {
    p.canonicalize();
    if (p < 0) {
      throw std::invalid_argument("distribution: masses must be nonnegative");
    }
    total += p;
  }
  total.canonicalize();
  if (total != 1) {
    throw std::invalid_argument("distribution: masses must sum to one");
  }
}

Rational var_alpha(const FiniteDistribution& dist, const Gamble& x,
                   const Rational& alpha) {
  if (!same_partition(dist.partition(), x.partition())) {
    throw std::invalid_argument(
        "value-at-risk: the gamble lives on a different possibility space");
  }
  Rational level = alpha;
  level.canonicalize();
  if (!(level > 0) || !(level < 1)) {
    throw std::invalid_argument(
        "value-at-risk: the level must lie strictly between 0 and 1");
  }
  std::vector<Rational> image(x.values());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  Rational cumulative(0);
  for (const Rational& t : image) {
    for (std::size_t atom = 0; atom < x.size(); ++atom) {
      if (x.value(atom) == t) cumulative += dist.prob(atom);
    }
    cumulative.canonicalize();
    if (cumulative > level) {
      return -t;
    }
  }
  throw std::logic_error("value-at-risk: total mass failed to exceed level");
}

Assessment build_var_assessment(const VarPrevision& vp) {
  const PartitionPtr& partition = vp.dist.partition();
  const Event omega = Event::omega(partition);
  Assessment result(partition);
  result = result.with_entry(ConditionalGamble(Gamble::zero(partition), omega),
                             Rational(0));
  for (const Gamble& x : vp.domain) {
    Rational value = -var_alpha(vp.dist, x, vp.alpha);
    value.canonicalize();
    result = result.with_entry(ConditionalGamble(x, omega), value);
  }
  return result;
}

namespace {

/** Index of each entry's negated twin -X|B.
 *  @throws PreconditionError listing every entry whose twin is missing. */
std::vector<std::size_t> negation_indices(const Assessment& p) {
  std::vector<std::size_t> twins;
  twins.reserve(p.size());
  std::string missing;
  for (const AssessmentEntry& entry : p.entries()) {
    const ConditionalGamble negated(entry.target.gamble().scaled(Rational(-1)),
                                    entry.target.cond());
    const std::optional<std::size_t> twin = p.find(negated);
    if (twin) {
      twins.push_back(*twin);
    } else {
      if (!missing.empty()) missing += ", ";
      missing += to_string(negated);
    }
  }
  if (!missing.empty()) {
    throw PreconditionError("conjugation requires the negated gamble of "
                            "every entry; missing: " +
                            missing);
  }
  return twins;
}

}  // namespace

Assessment conjugate(const Assessment& p) {
  const std::vector<std::size_t> twins = negation_indices(p);
  std::vector<AssessmentEntry> entries;
  entries.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational value = -p.entry(twins[i]).value;
    value.canonicalize();
    entries.push_back({p.entry(i).target, value});
  }
  if (entries.empty()) return Assessment(p.partition());
  return Assessment(std::move(entries));
}

Verdict conjugate_dominance(const Assessment& p) {
  const std::vector<std::size_t> twins = negation_indices(p);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const AssessmentEntry& entry = p.entry(i);
    const AssessmentEntry& twin = p.entry(twins[i]);
    Rational total = entry.value + twin.value;
    total.canonicalize();
    if (total > 0) {
      // Buying both gambles loses entry.value + twin.value everywhere on
      // the conditioning event.
      Verdict verdict;
      verdict.satisfied = false;
      verdict.witness = make_witness({{entry.target, Rational(1), entry.value},
                                      {twin.target, Rational(1), twin.value}},
                                     p.partition());
      return verdict;
    }
  }
  return Verdict{};
}

}  // namespace lowprev
