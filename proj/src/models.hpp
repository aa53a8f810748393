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

/**@file   models.hpp
 * @brief  Concrete lower-prevision models: Value-at-Risk previsions built
 *         from finitely supported distributions, and conjugate upper
 *         previsions with their dominance check.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "checker.hpp"
#include "core.hpp"

namespace lowprev {

/** A finitely supported probability distribution over a partition's atoms:
 *  nonnegative rational masses summing to one. */
class FiniteDistribution {
 public:
  /** @throws std::invalid_argument when the mass vector does not match the
   *  partition size, contains a negative mass, or does not sum to one. */
  FiniteDistribution(PartitionPtr partition, std::vector<Rational> probs);

  const PartitionPtr& partition() const { return partition_; }
  const std::vector<Rational>& probs() const { return probs_; }
  const Rational& prob(std::size_t atom) const { return probs_.at(atom); }

 private:
  PartitionPtr partition_;
  std::vector<Rational> probs_;
};

/** A Value-at-Risk prevision: a quantile level, the distribution it is
 *  taken under, and the gambles it prices. */
struct VarPrevision {
  Rational alpha;
  FiniteDistribution dist;
  std::vector<Gamble> domain;
};

/** The Value-at-Risk of X at level alpha: minus the smallest image value t
 *  with P(X <= t) > alpha.  The strict inequality resolves quantile ties
 *  downward: a level equal to a cumulative mass moves to the next image
 *  value.  The prevision the model assigns to X is the negation of this.
 *  @throws std::invalid_argument when alpha is outside (0, 1) or X lives
 *  on a different partition. */
Rational var_alpha(const FiniteDistribution& dist, const Gamble& x,
                   const Rational& alpha);

/** The unconditional assessment pricing each domain gamble at minus its
 *  Value-at-Risk, with the zero gamble priced at 0 appended automatically.
 *  The result is always centered and 2-convex, but not 2-coherent in
 *  general.
 *  @throws std::invalid_argument as var_alpha, or on a domain gamble from
 *  a different partition. */
Assessment build_var_assessment(const VarPrevision& vp);

/** The conjugate upper prevision as an assessment on the same keys: each
 *  entry X|B is mapped to -P(-X|B).
 *  @throws PreconditionError when some entry's negation -X|B is not
 *  assessed, naming every such gamble. */
Assessment conjugate(const Assessment& p);

/** Checks the conjugate dominance P(X|B) <= -P(-X|B) on every entry pair
 *  — the sign-flip instance of scaling that separates 2-coherence from
 *  2-convexity.  A breach is witnessed by buying both gambles of the
 *  offending pair at unit stakes.
 *  @throws PreconditionError as conjugate. */
Verdict conjugate_dominance(const Assessment& p);

}  // namespace lowprev
