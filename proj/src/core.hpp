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

/**@file   core.hpp
 * @brief  Finite possibility space: partitions, events, gambles, conditional
 *         gambles, assessments, and the Goodman-Nguyen relation.
 *
 * A possibility space is a finite partition of atomic outcomes.  Events are
 * subsets of atoms, gambles are exact-rational payoff vectors indexed by
 * atoms, and a conditional gamble X|B pairs a gamble with a non-empty
 * conditioning event.  An assessment maps finitely many conditional gambles
 * to lower-prevision values (supremum acceptable buying prices).
 *
 * Everything here is an immutable value after construction and every
 * operation is a pure function, so concurrent evaluation is safe.
 */

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lowprev {

/** Exact rational number; the only numeric carrier in decision paths. */
using Rational = mpq_class;

/** Parses "p/q" or "p" (optionally signed) into a canonical rational.
 *  @throws std::invalid_argument on malformed text or zero denominator. */
Rational rat_from_string(const std::string& text);

/** Formats a rational canonically as "p/q", or "p" when the denominator
 *  is one. */
std::string rat_to_string(const Rational& value);

/** The finite partition of atomic outcomes underlying a possibility space.
 *
 *  Atom labels are unique non-empty strings; the sure event is the set of
 *  all atoms.  The size cap bounds only the memory of event subsets; the
 *  combinatorics of the consistency checks grow in the number of assessment
 *  entries, not in the number of atoms. */
class Partition {
 public:
  static constexpr std::size_t kDefaultMaxAtoms = 16;

  explicit Partition(std::vector<std::string> atoms,
                     std::size_t max_atoms = kDefaultMaxAtoms);

  std::size_t size() const { return atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::string& atom(std::size_t index) const { return atoms_.at(index); }

  /** Index of a named atom, or nullopt if the label is unknown. */
  std::optional<std::size_t> index_of(const std::string& label) const;

  bool operator==(const Partition& other) const {
    return atoms_ == other.atoms_;
  }

 private:
  std::vector<std::string> atoms_;
};

using PartitionPtr = std::shared_ptr<const Partition>;

/** True when both handles denote the same partition (by content). */
bool same_partition(const PartitionPtr& a, const PartitionPtr& b);

/** An event: a subset of the atoms of one partition. */
class Event {
 public:
  /** Constructs the event containing the given atom indices.
   *  @throws std::invalid_argument on an out-of-range index. */
  Event(PartitionPtr partition, const std::vector<std::size_t>& members);

  static Event empty(PartitionPtr partition);
  static Event omega(PartitionPtr partition);
  static Event singleton(PartitionPtr partition, std::size_t atom);

  const PartitionPtr& partition() const { return partition_; }
  std::size_t atom_count() const { return partition_->size(); }

  bool contains(std::size_t atom) const { return mask_.at(atom); }
  bool is_empty() const;
  bool is_omega() const;
  std::size_t member_count() const;
  /** Member atom indices in increasing order. */
  std::vector<std::size_t> members() const;
  /** Member atom labels in increasing index order. */
  std::vector<std::string> member_labels() const;

  Event complement() const;
  Event join(const Event& other) const;  ///< union (disjunction)
  Event meet(const Event& other) const;  ///< intersection (conjunction)
  bool subset_of(const Event& other) const;

  bool operator==(const Event& other) const;

 private:
  struct FromMask {};
  Event(FromMask, PartitionPtr partition, std::vector<bool> mask);

  PartitionPtr partition_;
  std::vector<bool> mask_;
};

/** A gamble: a bounded payoff, one exact rational per atom. */
class Gamble {
 public:
  /** @throws std::invalid_argument when values.size() != partition size. */
  Gamble(PartitionPtr partition, std::vector<Rational> values);

  static Gamble constant(PartitionPtr partition, const Rational& value);
  static Gamble zero(PartitionPtr partition);
  static Gamble indicator(const Event& event);

  const PartitionPtr& partition() const { return partition_; }
  std::size_t size() const { return values_.size(); }
  const Rational& value(std::size_t atom) const { return values_.at(atom); }
  const std::vector<Rational>& values() const { return values_; }

  Gamble operator+(const Gamble& other) const;
  Gamble operator-(const Gamble& other) const;
  Gamble operator-() const;
  Gamble scaled(const Rational& factor) const;
  /** Adds a constant to every atom value. */
  Gamble shifted(const Rational& offset) const;
  /** Pointwise product with an event indicator: (B*X)(w) = X(w) on B, 0 off B. */
  Gamble restricted_to(const Event& event) const;

  bool is_zero() const;
  /** True when every atom value is >= 0. */
  bool is_nonnegative() const;
  /** True when every atom value is <= 0. */
  bool is_nonpositive() const;
  /** Pointwise <= on every atom. */
  bool leq(const Gamble& other) const;
  /** Largest atom value over the whole partition. */
  Rational max_value() const;

  bool operator==(const Gamble& other) const;

 private:
  PartitionPtr partition_;
  std::vector<Rational> values_;
};

/** A conditional gamble X|B: a gamble contingent on a non-empty event.
 *  @throws std::invalid_argument on an empty conditioning event or a
 *  partition mismatch. */
class ConditionalGamble {
 public:
  ConditionalGamble(Gamble gamble, Event cond);

  const Gamble& gamble() const { return gamble_; }
  const Event& cond() const { return cond_; }
  const PartitionPtr& partition() const { return gamble_.partition(); }

  bool operator==(const ConditionalGamble& other) const {
    return gamble_ == other.gamble_ && cond_ == other.cond_;
  }

 private:
  Gamble gamble_;
  Event cond_;
};

/** Renders a conditional gamble as "(v1,v2,...)|{atom,...}" for messages. */
std::string to_string(const ConditionalGamble& cg);

/** One assessed entry: a conditional gamble and its lower-prevision value. */
struct AssessmentEntry {
  ConditionalGamble target;
  Rational value;
};

/** A lower prevision: a finite map from conditional gambles to rationals.
 *
 *  Construction merges duplicate (gamble, cond) keys carrying equal values
 *  and rejects duplicates carrying different values; all entries must share
 *  one partition. */
class Assessment {
 public:
  /** Empty assessment over a partition. */
  explicit Assessment(PartitionPtr partition);
  /** @throws std::invalid_argument on contradictory duplicates or mixed
   *  partitions; partition inferred from the first entry. */
  explicit Assessment(std::vector<AssessmentEntry> entries);

  const PartitionPtr& partition() const { return partition_; }
  const std::vector<AssessmentEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const AssessmentEntry& entry(std::size_t index) const {
    return entries_.at(index);
  }

  /** Index of the entry with this exact (gamble, cond) key, if assessed. */
  std::optional<std::size_t> find(const ConditionalGamble& key) const;

  /** Assessed value for this exact (gamble, cond) key, if assessed. */
  std::optional<Rational> value_of(const ConditionalGamble& key) const;

  /** Returns a copy with one more entry (same merge/reject rule). */
  Assessment with_entry(const ConditionalGamble& target,
                        const Rational& value) const;

  /** The distinct conditioning events appearing in the assessment, in
   *  first-appearance order. */
  std::vector<Event> conditioning_events() const;

 private:
  PartitionPtr partition_;
  std::vector<AssessmentEntry> entries_;
};

/** An exact rational extended with -infinity/+infinity, the codomain of
 *  natural extensions and of one-dimensional concave maximization. */
class ExtendedValue {
 public:
  static ExtendedValue finite(const Rational& value) {
    ExtendedValue result;
    result.tag_ = Tag::finite;
    result.value_ = value;
    result.value_.canonicalize();
    return result;
  }
  static ExtendedValue neg_infinity() {
    ExtendedValue result;
    result.tag_ = Tag::neg_infinity;
    return result;
  }
  static ExtendedValue pos_infinity() {
    ExtendedValue result;
    result.tag_ = Tag::pos_infinity;
    return result;
  }

  bool is_finite() const { return tag_ == Tag::finite; }
  bool is_neg_infinity() const { return tag_ == Tag::neg_infinity; }
  bool is_pos_infinity() const { return tag_ == Tag::pos_infinity; }

  /** @throws std::logic_error when not finite. */
  const Rational& rational() const {
    if (!is_finite()) {
      throw std::logic_error("extended value is not finite");
    }
    return value_;
  }

  bool operator==(const ExtendedValue& other) const {
    if (tag_ != other.tag_) return false;
    return tag_ != Tag::finite || value_ == other.value_;
  }
  bool operator<(const ExtendedValue& other) const {
    if (tag_ == other.tag_) {
      return tag_ == Tag::finite && value_ < other.value_;
    }
    if (tag_ == Tag::neg_infinity) return true;
    if (other.tag_ == Tag::pos_infinity) return true;
    return false;
  }
  bool operator<=(const ExtendedValue& other) const {
    return *this < other || *this == other;
  }
  bool operator>(const ExtendedValue& other) const { return other < *this; }
  bool operator>=(const ExtendedValue& other) const { return other <= *this; }

 private:
  enum class Tag { finite, neg_infinity, pos_infinity };
  Tag tag_ = Tag::finite;
  Rational value_ = 0;
};

/** Renders an extended value as "-inf", "+inf", or a rational literal. */
std::string to_string(const ExtendedValue& value);

/** Largest value of X over the atoms of B (the conditional supremum;
 *  attained because the partition is finite).
 *  @throws std::domain_error when B is empty.
 *  @throws std::invalid_argument on a partition mismatch. */
Rational restrict_sup(const Gamble& x, const Event& b);

/** Smallest value of X over the atoms of B (the conditional infimum). */
Rational restrict_inf(const Gamble& x, const Event& b);

/** Goodman-Nguyen relation on conditional events:
 *  A|B <=GN C|D iff A&B => C&D and !C&D => !A&B.
 *  @throws std::domain_error when B or D is empty.
 *  @throws std::invalid_argument on mismatched partitions. */
bool gn_leq_events(const Event& a, const Event& b, const Event& c,
                   const Event& d);

/** Goodman-Nguyen relation extended to conditional gambles:
 *  X|B <=GN Y|D iff pointwise on every atom
 *      I_B*X + I_{!B&D}*sup(X|B)  <=  I_D*Y + I_{B&!D}*inf(Y|D).
 *  Off B|D both sides vanish, making the comparison vacuous there.  The
 *  relation is reflexive and transitive, and is implied by gn_leq_events on
 *  indicator gambles; it is deliberately coarser than the event relation on
 *  degenerate pairs (for instance zero gambles compare in both directions).
 *  @throws std::invalid_argument on mismatched partitions. */
bool gn_leq_gambles(const ConditionalGamble& xb, const ConditionalGamble& yd);

}  // namespace lowprev
