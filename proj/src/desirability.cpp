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

/**@file   desirability.cpp
 * @brief  Acceptance-set membership, prevision recovery, and axiom audits.
 */

#include "desirability.hpp"

#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "solver.hpp"

namespace lowprev {

namespace {

void require_same_space(const Assessment& p, const PartitionPtr& other,
                        const char* what) {
  if (!same_partition(p.partition(), other)) {
    throw std::invalid_argument(
        std::string(what) + ": target lives on a different possibility space");
  }
}

Rational stake_floor(DesirabilityMode mode) {
  return Rational(mode == DesirabilityMode::two_convex ? 1 : 0);
}

std::optional<Rational> stake_ceiling(DesirabilityMode mode) {
  if (mode == DesirabilityMode::two_convex) {
    return Rational(1);
  }
  return std::nullopt;
}

/** Tries to certify Z through one generating entry (X|B, v).  In the
 *  variables (lambda, mu) with mu standing for lambda * x, membership
 *  with a strictly admissible price x < v holds exactly when the closed
 *  program  max lambda*v - mu  s.t.  lambda*X(w) - mu <= Z(w) on B  has
 *  a strictly positive optimum or is unbounded; the price is then read
 *  back as mu / lambda.  Off B the purchase term vanishes, so Z must be
 *  nonnegative there outright. */
std::optional<MembershipWitness> member_via_entry(std::size_t index,
                                                  const AssessmentEntry& entry,
                                                  const Gamble& z,
                                                  DesirabilityMode mode) {
  const Gamble& x = entry.target.gamble();
  const Event& b = entry.target.cond();
  const Rational& v = entry.value;

  for (std::size_t atom = 0; atom < z.size(); ++atom) {
    if (!b.contains(atom) && z.value(atom) < 0) {
      return std::nullopt;
    }
  }

  LinearProgram lp;
  lp.objective = {v, Rational(-1)};
  for (std::size_t atom : b.members()) {
    lp.constraints.push_back(
        {{x.value(atom), Rational(-1)}, LpRelation::le, z.value(atom)});
  }
  lp.lower_bounds = {stake_floor(mode), std::nullopt};
  lp.upper_bounds = {stake_ceiling(mode), std::nullopt};

  const LpOutcome out = lp_solve(lp);
  if (out.status == LpStatus::optimal) {
    if (!(out.value > 0)) {
      return std::nullopt;
    }
    const Rational& lambda = out.point[0];
    if (lambda == 0) {
      // Possible only when Z is nonnegative outright, which the caller
      // certifies without a generator.
      return std::nullopt;
    }
    Rational price = out.point[1] / lambda;
    const Gamble bought = x.shifted(-price).restricted_to(b).scaled(lambda);
    return MembershipWitness{index, lambda, std::move(price), z - bought};
  }
  if (out.status == LpStatus::unbounded) {
    // Unbounded slack means v exceeds sup(X|B): buying at a price in
    // between makes the purchase term arbitrarily negative on B, so any
    // Z that is nonnegative off B qualifies.  Possible only with a free
    // stake, never at the unit stake of two_convex mode.
    const Rational sup_b = restrict_sup(x, b);
    Rational price = (v + sup_b) / 2;
    Rational lambda = 1;
    for (std::size_t atom : b.members()) {
      if (z.value(atom) >= 0) {
        continue;
      }
      const Rational needed = z.value(atom) / (x.value(atom) - price);
      if (needed > lambda) {
        lambda = needed;
      }
    }
    const Gamble bought = x.shifted(-price).restricted_to(b).scaled(lambda);
    return MembershipWitness{index, std::move(lambda), std::move(price),
                             z - bought};
  }
  return std::nullopt;
}

/** SplitMix-style finalizer decorrelating nearby (seed, stream, index)
 *  triples before they seed a per-draw engine. */
std::uint64_t mix64(std::uint64_t value) {
  value += 0x9e3779b97f4a7c15ULL;
  value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
  value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
  return value ^ (value >> 31);
}

/** Engine for one indexed draw; evaluation order never matters. */
std::mt19937_64 draw_engine(std::uint64_t seed, std::uint64_t stream,
                            std::uint64_t index) {
  return std::mt19937_64(mix64(seed + mix64(stream + mix64(index))));
}

/** Uniform rational in [lo, hi] (or (lo, hi] when open_lo) with
 *  denominator at most 8. */
Rational draw_rational(std::mt19937_64& engine, long lo, long hi,
                       bool open_lo) {
  std::uniform_int_distribution<long> denominators(1, 8);
  const long den = denominators(engine);
  std::uniform_int_distribution<long> numerators(lo * den + (open_lo ? 1 : 0),
                                                 hi * den);
  return Rational(numerators(engine)) / Rational(den);
}

Gamble draw_nonnegative(std::mt19937_64& engine, const PartitionPtr& partition) {
  std::vector<Rational> values;
  values.reserve(partition->size());
  for (std::size_t atom = 0; atom < partition->size(); ++atom) {
    values.push_back(draw_rational(engine, 0, 2, false));
  }
  return Gamble(partition, std::move(values));
}

struct DrawnMember {
  Gamble gamble;
  MembershipWitness witness;
};

/** One random acceptance-set member built from its own certificate:
 *  generator, stake in [0, 4] (unit in two_convex mode), price one gap
 *  in (0, 2] below the assessed value, remainder with entries in [0, 2]. */
DrawnMember draw_member(std::mt19937_64& engine, const Assessment& p,
                        DesirabilityMode mode) {
  const Gamble residual = draw_nonnegative(engine, p.partition());
  if (!p.empty()) {
    std::uniform_int_distribution<std::size_t> generators(0, p.size() - 1);
    const std::size_t generator = generators(engine);
    const Rational lambda = mode == DesirabilityMode::two_convex
                                ? Rational(1)
                                : draw_rational(engine, 0, 4, false);
    if (lambda != 0) {
      const AssessmentEntry& entry = p.entry(generator);
      Rational price = entry.value - draw_rational(engine, 0, 2, true);
      const Gamble bought = entry.target.gamble()
                                .shifted(-price)
                                .restricted_to(entry.target.cond())
                                .scaled(lambda);
      return {bought + residual,
              MembershipWitness{generator, lambda, std::move(price), residual}};
    }
  }
  return {residual, MembershipWitness{std::nullopt, 0, 0, residual}};
}

}  // namespace

std::optional<MembershipWitness> aprime_member(const Assessment& p,
                                               const Gamble& z,
                                               DesirabilityMode mode) {
  require_same_space(p, z.partition(), "membership");
  if (z.is_nonnegative()) {
    return MembershipWitness{std::nullopt, 0, 0, z};
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (auto witness = member_via_entry(i, p.entry(i), z, mode)) {
      return witness;
    }
  }
  return std::nullopt;
}

Rational recover_prevision(const Assessment& p, const ConditionalGamble& target,
                           DesirabilityMode mode) {
  require_same_space(p, target.partition(), "prevision recovery");
  const Gamble& zg = target.gamble();
  const Event& b = target.cond();

  // Price reachable without any generator: B*(X - x) is nonnegative
  // exactly when x <= inf(X|B).
  Rational best = restrict_inf(zg, b);

  for (std::size_t j = 0; j < p.size(); ++j) {
    const AssessmentEntry& entry = p.entry(j);
    const Gamble& xj = entry.target.gamble();
    const Event& bj = entry.target.cond();
    const Rational& vj = entry.value;

    // Shared rows over the variables (x, lambda, mu), one per atom where
    // either side is live:  x*B(w) + lambda*Bj(w)*Xj(w) - mu*Bj(w)
    // <= B(w)*X(w).
    std::vector<LpConstraint> rows;
    for (std::size_t atom = 0; atom < zg.size(); ++atom) {
      const bool in_b = b.contains(atom);
      const bool in_bj = bj.contains(atom);
      if (!in_b && !in_bj) {
        continue;
      }
      rows.push_back({{Rational(in_b ? 1 : 0),
                       in_bj ? xj.value(atom) : Rational(0),
                       Rational(in_bj ? -1 : 0)},
                      LpRelation::le,
                      in_b ? zg.value(atom) : Rational(0)});
    }
    const std::vector<std::optional<Rational>> lower = {
        std::nullopt, stake_floor(mode), std::nullopt};
    const std::vector<std::optional<Rational>> upper = {
        std::nullopt, stake_ceiling(mode), std::nullopt};

    // Gate: some price is strictly admissible through this generator
    // exactly when the slack lambda*vj - mu can be made positive.
    LinearProgram gate;
    gate.objective = {Rational(0), vj, Rational(-1)};
    gate.constraints = rows;
    gate.lower_bounds = lower;
    gate.upper_bounds = upper;
    const LpOutcome gate_out = lp_solve(gate);
    const bool reachable =
        gate_out.status == LpStatus::unbounded ||
        (gate_out.status == LpStatus::optimal && gate_out.value > 0);
    if (!reachable) {
      continue;
    }

    // The supremum over the strictly admissible region equals the closed
    // optimum: any closed point is a limit of convex combinations with a
    // strictly admissible one.
    LinearProgram sup;
    sup.objective = {Rational(1), Rational(0), Rational(0)};
    sup.constraints = rows;
    sup.constraints.push_back(
        {{Rational(0), -vj, Rational(1)}, LpRelation::le, Rational(0)});
    sup.lower_bounds = lower;
    sup.upper_bounds = upper;
    const LpOutcome sup_out = lp_solve(sup);
    if (sup_out.status == LpStatus::unbounded) {
      throw PreconditionError(
          "prevision recovery: acceptable buying prices are unbounded "
          "because some assessed value exceeds its conditional supremum");
    }
    if (sup_out.status != LpStatus::optimal) {
      continue;
    }
    if (sup_out.value > best) {
      best = sup_out.value;
    }
  }
  best.canonicalize();
  return best;
}

AxiomSuiteReport axiom_suite(const Assessment& p, DesirabilityMode mode,
                             std::size_t samples, std::uint64_t seed) {
  AxiomSuiteReport report;
  report.mode = mode;
  report.samples = samples;
  report.seed = seed;
  report.aul = check_1aul(p).satisfied;
  const PartitionPtr& partition = p.partition();

  // 'a': a scaled member plus a nonnegative gamble stays a member.
  for (std::size_t i = 0; i < samples; ++i) {
    std::mt19937_64 engine = draw_engine(seed, 0, i);
    const DrawnMember member = draw_member(engine, p, mode);
    const Gamble addition = draw_nonnegative(engine, partition);
    const Rational scale = mode == DesirabilityMode::two_coherent
                               ? draw_rational(engine, 0, 4, false)
                               : Rational(1);
    const Gamble combined = member.gamble.scaled(scale) + addition;
    ++report.scale_checks;
    if (!aprime_member(p, combined, mode)) {
      report.failures.push_back(
          {'a', "scaled member plus nonnegative gamble was rejected", combined,
           {member.witness}});
    }
  }

  // 'b': no nonzero nonpositive gamble may be accepted.  Deterministic
  // probes cover every entry whose value exceeds its conditional
  // supremum, so in two_convex mode acceptance occurs exactly when
  // one-sided uniform loss is not avoided.
  std::optional<Gamble> found_nonpositive;
  std::optional<MembershipWitness> found_witness;
  auto probe_nonpositive = [&](const Gamble& probe) {
    if (probe.is_zero() || !probe.is_nonpositive()) {
      return;
    }
    ++report.nonpositive_probes;
    if (auto witness = aprime_member(p, probe, mode)) {
      report.nonpositive_member_found = true;
      if (!found_nonpositive) {
        found_nonpositive = probe;
        found_witness = *witness;
      }
      if (mode == DesirabilityMode::two_coherent) {
        report.failures.push_back(
            {'b', "nonzero nonpositive gamble was accepted", probe,
             {*witness}});
      }
    }
  };
  for (std::size_t i = 0; i < samples; ++i) {
    std::mt19937_64 engine = draw_engine(seed, 1, i);
    std::vector<Rational> values;
    values.reserve(partition->size());
    for (std::size_t atom = 0; atom < partition->size(); ++atom) {
      values.push_back(draw_rational(engine, -2, 0, false));
    }
    Gamble probe(partition, std::move(values));
    if (probe.is_zero()) {
      probe = Gamble::constant(partition, Rational(-1));
    }
    probe_nonpositive(probe);
  }
  for (std::size_t j = 0; j < p.size(); ++j) {
    const AssessmentEntry& entry = p.entry(j);
    const Event& bj = entry.target.cond();
    const Rational sup = restrict_sup(entry.target.gamble(), bj);
    if (entry.value <= sup) {
      continue;
    }
    const Rational price = (entry.value + sup) / 2;
    probe_nonpositive(
        entry.target.gamble().shifted(-price).restricted_to(bj));
  }
  if (!aprime_member(p, Gamble::zero(partition), mode)) {
    report.failures.push_back({'b', "the zero gamble was rejected",
                               Gamble::zero(partition),
                               {}});
  }
  if (mode == DesirabilityMode::two_convex &&
      report.nonpositive_member_found == report.aul) {
    AxiomFailure failure{
        'b',
        report.aul ? "a nonpositive member exists although one-sided "
                     "uniform loss is avoided"
                   : "no nonpositive member was found although one-sided "
                     "uniform loss is not avoided",
        found_nonpositive ? *found_nonpositive : Gamble::zero(partition),
        {}};
    if (found_witness) {
      failure.witnesses.push_back(*found_witness);
    }
    report.failures.push_back(std::move(failure));
  }

  // 'c': sums of two members with nonzero sum must reach above zero
  // somewhere (two_coherent mode only).
  if (mode == DesirabilityMode::two_coherent) {
    for (std::size_t i = 0; i < samples; ++i) {
      std::mt19937_64 engine = draw_engine(seed, 2, i);
      const DrawnMember first = draw_member(engine, p, mode);
      const DrawnMember second = draw_member(engine, p, mode);
      const Gamble sum = first.gamble + second.gamble;
      if (sum.is_zero()) {
        continue;
      }
      ++report.sum_checks;
      if (sum.max_value() <= 0) {
        report.failures.push_back(
            {'c', "two members summed to a nonzero nonpositive gamble", sum,
             {first.witness, second.witness}});
      }
    }
  }
  return report;
}

}  // namespace lowprev
