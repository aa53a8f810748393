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

/**@file   solver.cpp
 * @brief  Exact two-phase simplex, strict one-dimensional feasibility, and
 *         concave piecewise-linear maximization.
 */

#include "solver.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace lowprev {

namespace {

/** How one user variable maps to the nonnegative tableau variables. */
struct VarMap {
  enum class Kind { shift, mirror, split } kind;
  std::size_t col0 = 0;  ///< primary column
  std::size_t col1 = 0;  ///< second column (split only)
  Rational offset = 0;   ///< x = offset + y (shift) or offset - y (mirror)
};

/** Dense simplex tableau over nonnegative variables.  Column layout:
 *  structural columns first, then slacks/surpluses, then artificials. */
struct Tableau {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;          // one per row, kept >= 0
  std::vector<std::size_t> basis;     // basic column per row
  std::size_t cols = 0;
  std::size_t first_artificial = 0;   // == cols when there are none

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = rows[row][col];
    for (auto& v : rows[row]) v /= p;
    rhs[row] /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == row) continue;
      const Rational f = rows[i][col];
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        rows[i][j] -= f * rows[row][j];
      }
      rhs[i] -= f * rhs[row];
    }
    basis[row] = col;
  }
};

enum class SimplexEnd { optimal, unbounded };

/** Runs the simplex on the tableau maximizing cost . y with Bland's rule;
 *  columns >= col_limit never enter.  On "unbounded", entering_out names
 *  the improving column. */
SimplexEnd run_simplex(Tableau& t, const std::vector<Rational>& cost,
                       std::size_t col_limit, std::size_t* entering_out) {
  for (;;) {
    // Reduced costs r_j = c_j - sum_i c_basis(i) * T[i][j]; Bland: take the
    // smallest improving column index.
    std::size_t entering = t.cols;
    for (std::size_t j = 0; j < col_limit; ++j) {
      Rational r = cost[j];
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const Rational& cb = cost[t.basis[i]];
        if (cb != 0) r -= cb * t.rows[i][j];
      }
      if (r > 0) {
        entering = j;
        break;
      }
    }
    if (entering == t.cols) return SimplexEnd::optimal;

    // Ratio test; ties broken by the smallest basic column index (Bland).
    std::size_t leaving = t.rows.size();
    Rational best_ratio = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (t.rows[i][entering] <= 0) continue;
      const Rational ratio = t.rhs[i] / t.rows[i][entering];
      if (leaving == t.rows.size() || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[i] < t.basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == t.rows.size()) {
      if (entering_out != nullptr) *entering_out = entering;
      return SimplexEnd::unbounded;
    }
    t.pivot(leaving, entering);
  }
}

Rational objective_at(const std::vector<Rational>& objective,
                      const std::vector<Rational>& point) {
  Rational value = 0;
  for (std::size_t i = 0; i < objective.size(); ++i) {
    value += objective[i] * point[i];
  }
  return value;
}

}  // namespace

LpOutcome lp_solve(const LinearProgram& lp) {
  const std::size_t n = lp.objective.size();
  if (n == 0) {
    throw std::invalid_argument("linear program needs at least one variable");
  }
  for (const auto& row : lp.constraints) {
    if (row.coeffs.size() != n) {
      throw std::invalid_argument("constraint dimension mismatch");
    }
  }
  if (!lp.lower_bounds.empty() && lp.lower_bounds.size() != n) {
    throw std::invalid_argument("lower-bound dimension mismatch");
  }
  if (!lp.upper_bounds.empty() && lp.upper_bounds.size() != n) {
    throw std::invalid_argument("upper-bound dimension mismatch");
  }
  const auto lower = [&](std::size_t i) -> std::optional<Rational> {
    return lp.lower_bounds.empty() ? std::nullopt : lp.lower_bounds[i];
  };
  const auto upper = [&](std::size_t i) -> std::optional<Rational> {
    return lp.upper_bounds.empty() ? std::nullopt : lp.upper_bounds[i];
  };

  // Substitute every variable by nonnegative tableau variables:
  //   lower bound l:           x = l + y              (plus row y <= u - l)
  //   upper bound u only:      x = u - y
  //   free:                    x = y+ - y-
  std::vector<VarMap> vmap(n);
  std::size_t n_struct = 0;
  std::vector<std::pair<std::size_t, Rational>> range_rows;  // (col, u - l)
  for (std::size_t i = 0; i < n; ++i) {
    const auto lo = lower(i);
    const auto hi = upper(i);
    if (lo && hi && *lo > *hi) {
      return LpOutcome{LpStatus::infeasible, 0, {}, {}};
    }
    if (lo) {
      vmap[i] = {VarMap::Kind::shift, n_struct, 0, *lo};
      if (hi) range_rows.emplace_back(n_struct, *hi - *lo);
      n_struct += 1;
    } else if (hi) {
      vmap[i] = {VarMap::Kind::mirror, n_struct, 0, *hi};
      n_struct += 1;
    } else {
      vmap[i] = {VarMap::Kind::split, n_struct, n_struct + 1, 0};
      n_struct += 2;
    }
  }

  // Substituted rows: coefficients over structural columns, adjusted rhs.
  struct RawRow {
    std::vector<Rational> coeffs;
    LpRelation rel;
    Rational rhs;
  };
  std::vector<RawRow> raw;
  raw.reserve(lp.constraints.size() + range_rows.size());
  for (const auto& row : lp.constraints) {
    RawRow r{std::vector<Rational>(n_struct, 0), row.rel, row.rhs};
    for (std::size_t i = 0; i < n; ++i) {
      const Rational& a = row.coeffs[i];
      if (a == 0) continue;
      switch (vmap[i].kind) {
        case VarMap::Kind::shift:
          r.coeffs[vmap[i].col0] += a;
          r.rhs -= a * vmap[i].offset;
          break;
        case VarMap::Kind::mirror:
          r.coeffs[vmap[i].col0] -= a;
          r.rhs -= a * vmap[i].offset;
          break;
        case VarMap::Kind::split:
          r.coeffs[vmap[i].col0] += a;
          r.coeffs[vmap[i].col1] -= a;
          break;
      }
    }
    raw.push_back(std::move(r));
  }
  for (const auto& [col, width] : range_rows) {
    RawRow r{std::vector<Rational>(n_struct, 0), LpRelation::le, width};
    r.coeffs[col] = 1;
    raw.push_back(std::move(r));
  }

  // Normalize rhs >= 0, then attach slack/surplus/artificial columns.
  const std::size_t m = raw.size();
  std::size_t n_slack = 0;
  std::size_t n_art = 0;
  for (auto& r : raw) {
    if (r.rhs < 0) {
      for (auto& c : r.coeffs) c = -c;
      r.rhs = -r.rhs;
      r.rel = (r.rel == LpRelation::le)   ? LpRelation::ge
              : (r.rel == LpRelation::ge) ? LpRelation::le
                                          : LpRelation::eq;
    }
    if (r.rel != LpRelation::eq) n_slack += 1;
    if (r.rel != LpRelation::le) n_art += 1;
  }

  Tableau t;
  t.cols = n_struct + n_slack + n_art;
  t.first_artificial = n_struct + n_slack;
  t.rows.assign(m, std::vector<Rational>(t.cols, 0));
  t.rhs.resize(m);
  t.basis.resize(m);
  std::size_t next_slack = n_struct;
  std::size_t next_art = t.first_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    std::copy(raw[i].coeffs.begin(), raw[i].coeffs.end(), t.rows[i].begin());
    t.rhs[i] = raw[i].rhs;
    if (raw[i].rel == LpRelation::le) {
      t.rows[i][next_slack] = 1;
      t.basis[i] = next_slack++;
    } else if (raw[i].rel == LpRelation::ge) {
      t.rows[i][next_slack] = -1;
      next_slack += 1;
      t.rows[i][next_art] = 1;
      t.basis[i] = next_art++;
    } else {
      t.rows[i][next_art] = 1;
      t.basis[i] = next_art++;
    }
  }

  // Phase 1: drive the artificials to zero.
  if (n_art > 0) {
    std::vector<Rational> cost1(t.cols, 0);
    for (std::size_t j = t.first_artificial; j < t.cols; ++j) cost1[j] = -1;
    run_simplex(t, cost1, t.first_artificial, nullptr);
    Rational infeasibility = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis[i] >= t.first_artificial) infeasibility += t.rhs[i];
    }
    if (infeasibility > 0) {
      return LpOutcome{LpStatus::infeasible, 0, {}, {}};
    }
    // Degenerate basic artificials: pivot them out on any real column, or
    // drop the (redundant) row when none is available.
    for (std::size_t i = t.rows.size(); i-- > 0;) {
      if (t.basis[i] < t.first_artificial) continue;
      std::size_t col = t.first_artificial;
      for (std::size_t j = 0; j < t.first_artificial; ++j) {
        if (t.rows[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col < t.first_artificial) {
        t.pivot(i, col);
      } else {
        t.rows.erase(t.rows.begin() + static_cast<long>(i));
        t.rhs.erase(t.rhs.begin() + static_cast<long>(i));
        t.basis.erase(t.basis.begin() + static_cast<long>(i));
      }
    }
    for (auto& row : t.rows) row.resize(t.first_artificial);
    t.cols = t.first_artificial;
  }

  // Phase 2: the substituted objective (constant offset added at the end).
  std::vector<Rational> cost2(t.cols, 0);
  Rational const_term = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& c = lp.objective[i];
    if (c == 0) continue;
    switch (vmap[i].kind) {
      case VarMap::Kind::shift:
        cost2[vmap[i].col0] += c;
        const_term += c * vmap[i].offset;
        break;
      case VarMap::Kind::mirror:
        cost2[vmap[i].col0] -= c;
        const_term += c * vmap[i].offset;
        break;
      case VarMap::Kind::split:
        cost2[vmap[i].col0] += c;
        cost2[vmap[i].col1] -= c;
        break;
    }
  }
  std::size_t entering = 0;
  const SimplexEnd end = run_simplex(t, cost2, t.cols, &entering);

  // Read the structural solution back through the substitutions.
  std::vector<Rational> y(t.cols, 0);
  for (std::size_t i = 0; i < t.rows.size(); ++i) y[t.basis[i]] = t.rhs[i];
  const auto map_back = [&](const std::vector<Rational>& v, bool with_offset) {
    std::vector<Rational> x(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      switch (vmap[i].kind) {
        case VarMap::Kind::shift:
          x[i] = v[vmap[i].col0];
          if (with_offset) x[i] += vmap[i].offset;
          break;
        case VarMap::Kind::mirror:
          x[i] = -v[vmap[i].col0];
          if (with_offset) x[i] += vmap[i].offset;
          break;
        case VarMap::Kind::split:
          x[i] = v[vmap[i].col0] - v[vmap[i].col1];
          break;
      }
      x[i].canonicalize();
    }
    return x;
  };

  if (end == SimplexEnd::unbounded) {
    std::vector<Rational> dy(t.cols, 0);
    dy[entering] = 1;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      dy[t.basis[i]] = -t.rows[i][entering];
    }
    LpOutcome out;
    out.status = LpStatus::unbounded;
    out.ray = map_back(dy, /*with_offset=*/false);
    return out;
  }

  LpOutcome out;
  out.status = LpStatus::optimal;
  out.point = map_back(y, /*with_offset=*/true);
  out.value = objective_at(lp.objective, out.point);
  out.value.canonicalize();
  return out;
}

std::optional<Rational> strict_feasible_1d(const std::vector<Bound>& lower,
                                           const std::vector<Bound>& upper) {
  std::optional<Bound> lo;
  for (const auto& b : lower) {
    if (!lo || b.value > lo->value) {
      lo = b;
    } else if (b.value == lo->value && b.open) {
      lo->open = true;
    }
  }
  std::optional<Bound> hi;
  for (const auto& b : upper) {
    if (!hi || b.value < hi->value) {
      hi = b;
    } else if (b.value == hi->value && b.open) {
      hi->open = true;
    }
  }
  if (!lo && !hi) return Rational(0);
  if (!lo) return hi->open ? hi->value - 1 : hi->value;
  if (!hi) return lo->open ? lo->value + 1 : lo->value;
  if (lo->value < hi->value) {
    Rational mid = (lo->value + hi->value) / 2;
    mid.canonicalize();
    return mid;
  }
  if (lo->value == hi->value && !lo->open && !hi->open) return lo->value;
  return std::nullopt;
}

PwlMaxResult concave_pwl_max(const std::vector<AffinePiece>& pieces) {
  if (pieces.empty()) {
    throw std::invalid_argument("concave_pwl_max needs at least one piece");
  }
  bool all_positive = true;
  for (const auto& p : pieces) {
    if (p.slope <= 0) {
      all_positive = false;
      break;
    }
  }
  if (all_positive) {
    // The minimum of finitely many increasing lines is increasing and
    // unbounded above.
    return PwlMaxResult{ExtendedValue::pos_infinity(), std::nullopt};
  }

  const auto eval_min = [&](const Rational& s) {
    Rational best = pieces[0].intercept + pieces[0].slope * s;
    for (std::size_t i = 1; i < pieces.size(); ++i) {
      const Rational v = pieces[i].intercept + pieces[i].slope * s;
      if (v < best) best = v;
    }
    return best;
  };

  // The concave minimum attains its maximum at s = 0 or where two pieces
  // intersect; scanning all pairwise candidates is exact and cheap.
  std::vector<Rational> candidates{Rational(0)};
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      if (pieces[i].slope == pieces[j].slope) continue;
      Rational s = (pieces[j].intercept - pieces[i].intercept) /
                   (pieces[i].slope - pieces[j].slope);
      if (s < 0) continue;
      s.canonicalize();
      candidates.push_back(std::move(s));
    }
  }
  Rational best_s = candidates[0];
  Rational best_v = eval_min(candidates[0]);
  for (std::size_t k = 1; k < candidates.size(); ++k) {
    const Rational v = eval_min(candidates[k]);
    if (v > best_v || (v == best_v && candidates[k] < best_s)) {
      best_v = v;
      best_s = candidates[k];
    }
  }
  best_v.canonicalize();
  return PwlMaxResult{ExtendedValue::finite(best_v), best_s};
}

}  // namespace lowprev
