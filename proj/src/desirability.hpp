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

/**@file   desirability.hpp
 * @brief  The acceptance-set correspondence of an assessment: membership
 *         oracle, prevision recovery, and randomized axiom audits.
 *
 * An assessment induces a set of acceptable gambles: everything of the
 * form  lambda * B * (X - x) + Y  where (X|B, v) is an assessed entry,
 * the price x lies strictly below v, the remainder Y is pointwise
 * nonnegative, and the stake lambda is nonnegative (two_coherent mode)
 * or fixed at one (two_convex mode).  Gambles that are nonnegative
 * outright are acceptable with stake zero.  Membership of a concrete
 * gamble reduces, per generating entry, to a two-variable linear program
 * over exact rationals; the assessed prevision itself is recovered from
 * the set as a supremum of acceptable buying prices.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "checker.hpp"
#include "core.hpp"

namespace lowprev {

/** Which stake family generates the acceptance set: arbitrary nonnegative
 *  stakes (two_coherent) or unit stakes only (two_convex). */
enum class DesirabilityMode { two_coherent, two_convex };

/** Certificate that a gamble Z belongs to the acceptance set.  The
 *  reconstruction  lambda * B * (X - x) + residual  over the generating
 *  entry (X|B, v) equals Z exactly; when no entry is involved (generator
 *  absent, the "nonnegative only" case) lambda is zero, x is meaningless
 *  and the residual alone equals Z. */
struct MembershipWitness {
  /** Index of the generating entry in the assessment; absent when Z is
   *  certified by pointwise nonnegativity alone. */
  std::optional<std::size_t> generator;
  /** Buying stake: nonnegative, zero exactly in the nonnegative-only
   *  case, forced to one by two_convex mode. */
  Rational lambda = 0;
  /** Buying price, strictly below the generating entry's assessed value;
   *  zero (and unused) in the nonnegative-only case. */
  Rational x = 0;
  /** Pointwise-nonnegative remainder. */
  Gamble residual;
};

/** One counterexample found by axiom_suite. */
struct AxiomFailure {
  /** Which audit failed: 'a' (scaling/addition closure), 'b' (no
   *  nonzero nonpositive member), or 'c' (sums escape the nonpositive
   *  orthant). */
  char axiom;
  std::string detail;
  /** The gamble that broke the axiom. */
  Gamble offending;
  /** Membership witnesses involved in the counterexample, when any. */
  std::vector<MembershipWitness> witnesses;
};

/** Outcome of the randomized axiom audit.  Failure entries are reported,
 *  not thrown: for an assessment that is not 2-coherent the audited
 *  axioms may genuinely fail, and the caller decides what that means. */
struct AxiomSuiteReport {
  DesirabilityMode mode = DesirabilityMode::two_coherent;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /** Scaling/addition closure instances checked ('a'). */
  std::size_t scale_checks = 0;
  /** Nonzero nonpositive gambles probed for membership ('b'). */
  std::size_t nonpositive_probes = 0;
  /** Member pairs with nonzero sum checked for positive supremum ('c';
   *  two_coherent mode only). */
  std::size_t sum_checks = 0;
  /** Verdict of the one-sided avoiding-uniform-loss check on the input. */
  bool aul = false;
  /** Whether some nonzero nonpositive gamble was accepted.  In
   *  two_convex mode this must happen exactly when aul is false. */
  bool nonpositive_member_found = false;
  std::vector<AxiomFailure> failures;

  bool passed() const { return failures.empty(); }
};

/** Decides whether Z belongs to the acceptance set generated by the
 *  entries of p in the given mode, returning a full witness on success.
 *  Nonnegative gambles are accepted outright (stake zero); otherwise each
 *  entry (X|B, v) is tried through the exact linear program in the stake
 *  lambda and the product mu = lambda * x that maximizes the slack
 *  lambda * v - mu subject to  lambda*B*X - mu*B <= Z  pointwise: the
 *  strict price condition x < v is feasible exactly when that closed
 *  optimum is strictly positive or the program is unbounded.
 *  @throws std::invalid_argument on a partition mismatch. */
std::optional<MembershipWitness> aprime_member(const Assessment& p,
                                               const Gamble& z,
                                               DesirabilityMode mode);

/** Recovers the supremum acceptable buying price of a conditional gamble
 *  from the acceptance set:  sup { x : B*(X - x) is a member }.  The
 *  supremum is computed exactly, generator by generator, as a linear
 *  program in (x, lambda, mu).  When the target is assessed and p passes
 *  check_2coherent (two_coherent mode) or check_2convex together with
 *  check_1aul (two_convex mode), the result equals the assessed value.
 *  @throws std::invalid_argument on a partition mismatch.
 *  @throws PreconditionError when the supremum is unbounded, which can
 *  happen only without one-sided avoiding of uniform loss. */
Rational recover_prevision(const Assessment& p, const ConditionalGamble& target,
                           DesirabilityMode mode);

/** Audits the acceptance-set axioms on randomized members drawn from
 *  reproducible per-sample seeds: 'a' scaled members plus nonnegative
 *  gambles stay members (scaling exercised only in two_coherent mode);
 *  'b' no nonzero nonpositive gamble is a member -- asserted outright in
 *  two_coherent mode, and required to hold exactly when check_1aul passes
 *  in two_convex mode; 'c' sums of two members with nonzero sum have
 *  strictly positive supremum (two_coherent mode only).  Counterexamples
 *  are collected in the report together with their witnesses. */
AxiomSuiteReport axiom_suite(const Assessment& p, DesirabilityMode mode,
                             std::size_t samples, std::uint64_t seed);

}  // namespace lowprev
