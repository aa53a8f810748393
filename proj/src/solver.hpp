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

/**@file   solver.hpp
 * @brief  Exact rational linear programming and the specialized
 *         one-dimensional routines used by consistency checks and
 *         natural extensions.
 *
 * The simplex implementation is a dense two-phase tableau over GMP
 * rationals with Bland's anti-cycling rule.  Instances in this library are
 * tiny (a handful of stakes and one slack per atom), so exactness is worth
 * far more than speed: every verdict reduces to the sign of an exact
 * optimum, never to a tolerance comparison.
 */

#pragma once

#include <optional>
#include <vector>

#include "core.hpp"

namespace lowprev {

/** Constraint relation of one linear row. */
enum class LpRelation { le, eq, ge };

/** One linear constraint: coeffs . x  (<= | = | >=)  rhs. */
struct LpConstraint {
  std::vector<Rational> coeffs;
  LpRelation rel = LpRelation::le;
  Rational rhs = 0;
};

/** A linear program: maximize objective . x subject to the constraints and
 *  optional per-variable bounds.  Empty bound vectors mean "no bounds";
 *  non-empty ones must have one (possibly absent) entry per variable. */
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<LpConstraint> constraints;
  std::vector<std::optional<Rational>> lower_bounds;
  std::vector<std::optional<Rational>> upper_bounds;
};

enum class LpStatus { optimal, infeasible, unbounded };

/** Result of lp_solve.  On optimal, point attains value and satisfies all
 *  constraints exactly.  On unbounded, ray is an improving feasible
 *  direction: constraint rows stay satisfied along it and the objective
 *  strictly increases. */
struct LpOutcome {
  LpStatus status = LpStatus::infeasible;
  Rational value = 0;
  std::vector<Rational> point;
  std::vector<Rational> ray;
};

/** Solves the program with an exact two-phase simplex.
 *  @throws std::invalid_argument on dimension mismatches. */
LpOutcome lp_solve(const LinearProgram& lp);

/** A one-sided bound on a single real variable; open means strict. */
struct Bound {
  Rational value;
  bool open = false;
};

/** Decides whether some s satisfies every bound (s > / >= each lower,
 *  s < / <= each upper) and returns such an s if so.  Absent bounds are
 *  simply omitted from the vectors; with no bounds at all the witness 0 is
 *  returned. */
std::optional<Rational> strict_feasible_1d(const std::vector<Bound>& lower,
                                           const std::vector<Bound>& upper);

/** One affine piece intercept + slope * s of a pointwise minimum. */
struct AffinePiece {
  Rational slope;
  Rational intercept;
};

/** Result of maximizing min_i(intercept_i + slope_i * s) over s >= 0. */
struct PwlMaxResult {
  ExtendedValue value = ExtendedValue::neg_infinity();
  /** Attaining s, present iff value is finite. */
  std::optional<Rational> argmax;
};

/** Maximizes the concave piecewise-linear minimum of the pieces over
 *  s >= 0.  The supremum is +infinity exactly when every slope is
 *  positive; otherwise it is attained at s = 0 or at an intersection of
 *  two pieces.
 *  @throws std::invalid_argument when pieces is empty. */
PwlMaxResult concave_pwl_max(const std::vector<AffinePiece>& pieces);

}  // namespace lowprev
