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

/**@file   checker.hpp
 * @brief  Consistency checks for lower-prevision assessments: internality,
 *         1-AUL, 2-convexity, 2-coherence, bounded-scheme n-variants, full
 *         convexity and coherence, centering, capacity structure, and
 *         single-instance axiom evaluation.
 *
 * Every gain-based check decides whether some betting scheme against the
 * assessment has a strictly negative conditional supremum.  Violations are
 * returned as witnesses carrying the exact stakes; re-evaluating a witness
 * from scratch always reproduces its recorded supremum.  Structural checks
 * (centering, capacity) may fail for reasons no betting scheme can express,
 * in which case the verdict carries an explanatory note instead of a
 * witness.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core.hpp"

namespace lowprev {

/** Thrown when an operation's documented precondition is not met. */
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Number of elementary gains allowed in a betting scheme: a finite count
 *  or unbounded (full coherence / full convexity). */
class GainCount {
 public:
  static GainCount finite(unsigned n) {
    GainCount g;
    g.n_ = n;
    return g;
  }
  static GainCount unbounded() { return GainCount(); }

  bool is_unbounded() const { return !n_.has_value(); }
  /** @throws std::logic_error when unbounded. */
  unsigned value() const {
    if (!n_) throw std::logic_error("gain count is unbounded");
    return *n_;
  }

 private:
  std::optional<unsigned> n_;
};

/** One elementary term of a violating betting scheme.  The stake is
 *  signed: positive terms are bought, negative ones sold, so the realized
 *  gain is  sum stake * B * (X - value). */
struct WitnessTerm {
  ConditionalGamble target;
  Rational stake;
  Rational value;  ///< assessed lower prevision of the target
};

/** A violating betting scheme: nonzero-stake terms, the realized
 *  conditioning event (join of the terms' conditioning events), and the
 *  strictly negative conditional supremum of the gain. */
struct Witness {
  std::vector<WitnessTerm> terms;
  Event conditioning;
  Rational sup_value;
};

/** Outcome of one consistency check.  A satisfied verdict carries neither
 *  witness nor note; a violated one carries a witness when the failure is
 *  a betting gain, or a note when it is structural (centering, capacity). */
struct Verdict {
  bool satisfied = true;
  std::optional<Witness> witness;
  std::optional<std::string> note;
};

/** The gain gamble of a term list: sum stake * B * (X - value). */
Gamble witness_gain(const std::vector<WitnessTerm>& terms,
                    const PartitionPtr& partition);

/** Builds a witness from signed-stake terms: drops zero stakes, merges
 *  duplicate targets, computes the conditioning join and the exact
 *  conditional supremum.
 *  @throws std::logic_error when no nonzero term remains or the recomputed
 *  supremum is not negative (the terms certify nothing). */
Witness make_witness(std::vector<WitnessTerm> terms,
                     const PartitionPtr& partition);

/** Internality (the one-gain consistency notion): every assessed value
 *  lies in [inf(X|B), sup(X|B)]. */
Verdict check_internality(const Assessment& p);

/** 1-AUL: every assessed value is at most its conditional supremum. */
Verdict check_1aul(const Assessment& p);

/** 2-convexity: for every ordered entry pair, the unit-stake
 *  one-bought/one-sold gain has a nonnegative conditional supremum.
 *  Decided by direct atom enumeration. */
Verdict check_2convex(const Assessment& p);

/** 2-coherence: no entry pair admits stakes (s1 >= 0, s0 real, not both
 *  zero) whose gain has a strictly negative conditional supremum.  Single
 *  entries are covered by internality; pairs by a one-dimensional strict
 *  feasibility decision in the selling stake. */
Verdict check_2coherent(const Assessment& p);

/** n-coherence: betting schemes with at most n elementary gains, all
 *  stakes nonnegative, at most one term sold.  Unbounded n is full
 *  (Williams-style) coherence.
 *  @throws std::invalid_argument when n = 0. */
Verdict check_n_coherent(const Assessment& p, const GainCount& n);

/** n-convexity: schemes with one sold term at stake exactly 1 and up to
 *  n - 1 bought terms with nonnegative stakes summing to 1.  Unbounded n
 *  is full convexity.
 *  @throws std::invalid_argument when n < 2. */
Verdict check_n_convex(const Assessment& p, const GainCount& n);

/** Full (Williams-style) coherence: check_n_coherent with unbounded n. */
Verdict check_coherent(const Assessment& p);

/** Full convexity: check_n_convex with unbounded n. */
Verdict check_convex(const Assessment& p);

/** Centering: for every conditioning event B of the assessment, the zero
 *  gamble conditional on B is assessed with value 0. */
Verdict check_centered(const Assessment& p);

/** Centered 2-convexity: centering plus 2-convexity. */
Verdict check_centered_2convex(const Assessment& p);

/** C-convexity: centering plus full convexity. */
Verdict check_c_convex(const Assessment& p);

/** Capacity structure on a full-powerset lower probability: value 0 at the
 *  impossible event, 1 at the sure event, and monotone under inclusion.
 *  @throws PreconditionError unless the assessment consists of exactly the
 *  indicator gambles of every event of the partition, conditioned on the
 *  sure event. */
Verdict check_capacity(const Assessment& p);

/** True when the assessment has the exact shape check_capacity requires. */
bool capacity_domain(const Assessment& p);

/** The axioms evaluable on single instances. */
enum class Axiom {
  a1,           ///< P(X|B) - P(Y|B) <= sup(X-Y|B)
  a1prime,      ///< X|B >= Y|B + mu  implies  P(X|B) >= P(Y|B) + mu
  a2,           ///< P(lambda X|B) = lambda P(X|B), lambda >= 0
  a3,           ///< P(X+Y|B) >= P(X|B) + P(Y|B)
  a4,           ///< P(A(X - P(X|A&B))|B) = 0
  a5,           ///< P(l X + (1-l) Y|B) >= l P(X|B) + (1-l) P(Y|B), 0<l<1
  a6,           ///< P(lambda X|B) <= lambda P(X|B), lambda < 0
  monotone,     ///< X|B >= Y|B  implies  P(X|B) >= P(Y|B)
  translation,  ///< P(X + mu|B) = P(X|B) + mu
};

/** Data of one axiom instance; which fields are required depends on the
 *  axiom (x always; y for a1/a1prime/a3/a5/monotone; scalar for
 *  a1prime/a2/a5/a6/translation; event_a for a4). */
struct AxiomInstance {
  std::optional<ConditionalGamble> x;
  std::optional<ConditionalGamble> y;
  std::optional<Rational> scalar;
  std::optional<Event> event_a;
};

/** Evaluates the axiom inequality/equality exactly on one instance.
 *  @throws std::invalid_argument on a malformed instance (missing fields,
 *  scalar outside the axiom's range, mismatched conditioning events).
 *  @throws PreconditionError when referenced entries are not assessed,
 *  listing the missing conditional gambles. */
bool check_axiom(const Assessment& p, Axiom axiom,
                 const AxiomInstance& instance);

/** One row of a classification table. */
struct ClassificationEntry {
  std::string class_name;
  Verdict verdict;
};

/** Runs every consistency check on the assessment and returns the verdict
 *  table (capacity only when the domain has the full-powerset shape).
 *  Internally asserts the implication lattice between the notions and the
 *  agreement of the pairwise checks with their scheme-enumeration
 *  counterparts; a breach throws std::logic_error. */
std::vector<ClassificationEntry> classify(const Assessment& p);

}  // namespace lowprev
