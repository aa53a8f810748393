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

/**@file   core.cpp
 * @brief  Implementation of the possibility-space value types.
 */

#include "core.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace lowprev {

Rational rat_from_string(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  // mpq_class::set_str accepts forms like "-3/4"; validate shape first so
  // that garbage such as "1/2/3" or "1.5" is rejected uniformly.
  const auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (start == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(start), s.end(),
                       [](unsigned char c) { return c >= '0' && c <= '9'; });
  };
  const std::size_t slash = text.find('/');
  bool ok = false;
  if (slash == std::string::npos) {
    ok = is_int(text);
  } else {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    ok = is_int(num) && is_int(den) && den.find_first_of("+-") == std::string::npos;
  }
  // mpq_set_str does not accept a leading '+'; the shape check above does.
  const std::string digits = (text[0] == '+') ? text.substr(1) : text;
  mpq_class value;
  if (!ok || value.set_str(digits, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: \"" + text + "\"");
  }
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational literal: \"" +
                                text + "\"");
  }
  value.canonicalize();
  return value;
}

std::string rat_to_string(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  if (canonical.get_den() == 1) {
    return canonical.get_num().get_str();
  }
  return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

Partition::Partition(std::vector<std::string> atoms, std::size_t max_atoms)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty()) {
    throw std::invalid_argument("a partition needs at least one atom");
  }
  if (atoms_.size() > max_atoms) {
    throw std::invalid_argument("partition exceeds the configured atom cap (" +
                                std::to_string(max_atoms) + ")");
  }
  std::set<std::string> seen;
  for (const auto& label : atoms_) {
    if (label.empty()) {
      throw std::invalid_argument("atom labels must be non-empty");
    }
    if (!seen.insert(label).second) {
      throw std::invalid_argument("duplicate atom label: \"" + label + "\"");
    }
  }
}

std::optional<std::size_t> Partition::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i] == label) return i;
  }
  return std::nullopt;
}

bool same_partition(const PartitionPtr& a, const PartitionPtr& b) {
  if (!a || !b) return false;
  return a == b || *a == *b;
}

namespace {

void require_same_partition(const PartitionPtr& a, const PartitionPtr& b) {
  if (!same_partition(a, b)) {
    throw std::invalid_argument("mismatched partitions");
  }
}

}  // namespace

Event::Event(FromMask, PartitionPtr partition, std::vector<bool> mask)
    : partition_(std::move(partition)), mask_(std::move(mask)) {}

Event::Event(PartitionPtr partition, const std::vector<std::size_t>& members)
    : partition_(std::move(partition)), mask_(partition_->size(), false) {
  for (std::size_t index : members) {
    if (index >= mask_.size()) {
      throw std::invalid_argument("atom index out of range: " +
                                  std::to_string(index));
    }
    mask_[index] = true;
  }
}

Event Event::empty(PartitionPtr partition) {
  std::vector<bool> mask(partition->size(), false);
  return Event(FromMask{}, std::move(partition), std::move(mask));
}

Event Event::omega(PartitionPtr partition) {
  std::vector<bool> mask(partition->size(), true);
  return Event(FromMask{}, std::move(partition), std::move(mask));
}

Event Event::singleton(PartitionPtr partition, std::size_t atom) {
  return Event(std::move(partition), std::vector<std::size_t>{atom});
}

bool Event::is_empty() const {
  return std::none_of(mask_.begin(), mask_.end(), [](bool b) { return b; });
}

bool Event::is_omega() const {
  return std::all_of(mask_.begin(), mask_.end(), [](bool b) { return b; });
}

std::size_t Event::member_count() const {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true));
}

std::vector<std::size_t> Event::members() const {
  std::vector<std::size_t> result;
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i]) result.push_back(i);
  }
  return result;
}

std::vector<std::string> Event::member_labels() const {
  std::vector<std::string> result;
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i]) result.push_back(partition_->atom(i));
  }
  return result;
}

Event Event::complement() const {
  std::vector<bool> mask(mask_.size());
  for (std::size_t i = 0; i < mask_.size(); ++i) mask[i] = !mask_[i];
  return Event(FromMask{}, partition_, std::move(mask));
}

Event Event::join(const Event& other) const {
  require_same_partition(partition_, other.partition_);
  std::vector<bool> mask(mask_.size());
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    mask[i] = mask_[i] || other.mask_[i];
  }
  return Event(FromMask{}, partition_, std::move(mask));
}

Event Event::meet(const Event& other) const {
  require_same_partition(partition_, other.partition_);
  std::vector<bool> mask(mask_.size());
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    mask[i] = mask_[i] && other.mask_[i];
  }
  return Event(FromMask{}, partition_, std::move(mask));
}

bool Event::subset_of(const Event& other) const {
  require_same_partition(partition_, other.partition_);
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i] && !other.mask_[i]) return false;
  }
  return true;
}

bool Event::operator==(const Event& other) const {
  return same_partition(partition_, other.partition_) && mask_ == other.mask_;
}

Gamble::Gamble(PartitionPtr partition, std::vector<Rational> values)
    : partition_(std::move(partition)), values_(std::move(values)) {
  if (values_.size() != partition_->size()) {
    throw std::invalid_argument(
        "gamble needs exactly one value per atom of the partition");
  }
  for (auto& v : values_) v.canonicalize();
}

Gamble Gamble::constant(PartitionPtr partition, const Rational& value) {
  std::vector<Rational> values(partition->size(), value);
  return Gamble(std::move(partition), std::move(values));
}

Gamble Gamble::zero(PartitionPtr partition) {
  return constant(std::move(partition), Rational(0));
}

Gamble Gamble::indicator(const Event& event) {
  std::vector<Rational> values(event.atom_count(), Rational(0));
  for (std::size_t atom : event.members()) values[atom] = 1;
  return Gamble(event.partition(), std::move(values));
}

Gamble Gamble::operator+(const Gamble& other) const {
  require_same_partition(partition_, other.partition_);
  std::vector<Rational> values(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values[i] = values_[i] + other.values_[i];
  }
  return Gamble(partition_, std::move(values));
}

Gamble Gamble::operator-(const Gamble& other) const {
  return *this + (-other);
}

Gamble Gamble::operator-() const { return scaled(Rational(-1)); }

Gamble Gamble::scaled(const Rational& factor) const {
  std::vector<Rational> values(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values[i] = values_[i] * factor;
  }
  return Gamble(partition_, std::move(values));
}

Gamble Gamble::shifted(const Rational& offset) const {
  std::vector<Rational> values(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values[i] = values_[i] + offset;
  }
  return Gamble(partition_, std::move(values));
}

Gamble Gamble::restricted_to(const Event& event) const {
  require_same_partition(partition_, event.partition());
  std::vector<Rational> values(values_.size(), Rational(0));
  for (std::size_t atom : event.members()) values[atom] = values_[atom];
  return Gamble(partition_, std::move(values));
}

bool Gamble::is_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Rational& v) { return v == 0; });
}

bool Gamble::is_nonnegative() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Rational& v) { return v >= 0; });
}

bool Gamble::is_nonpositive() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Rational& v) { return v <= 0; });
}

bool Gamble::leq(const Gamble& other) const {
  require_same_partition(partition_, other.partition_);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] > other.values_[i]) return false;
  }
  return true;
}

Rational Gamble::max_value() const {
  Rational best = values_.front();
  for (const auto& v : values_) best = std::max(best, v);
  return best;
}

bool Gamble::operator==(const Gamble& other) const {
  return same_partition(partition_, other.partition_) &&
         values_ == other.values_;
}

ConditionalGamble::ConditionalGamble(Gamble gamble, Event cond)
    : gamble_(std::move(gamble)), cond_(std::move(cond)) {
  require_same_partition(gamble_.partition(), cond_.partition());
  if (cond_.is_empty()) {
    throw std::invalid_argument(
        "conditioning event of a conditional gamble must be non-empty");
  }
}

std::string to_string(const ConditionalGamble& cg) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < cg.gamble().size(); ++i) {
    if (i > 0) out << ",";
    out << rat_to_string(cg.gamble().value(i));
  }
  out << ")|{";
  const auto labels = cg.cond().member_labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out << ",";
    out << labels[i];
  }
  out << "}";
  return out.str();
}

Assessment::Assessment(PartitionPtr partition)
    : partition_(std::move(partition)) {}

Assessment::Assessment(std::vector<AssessmentEntry> entries) {
  if (entries.empty()) {
    throw std::invalid_argument(
        "cannot infer the partition of an empty assessment; "
        "use the partition constructor");
  }
  partition_ = entries.front().target.partition();
  for (auto& incoming : entries) {
    require_same_partition(partition_, incoming.target.partition());
    // Equality tests on rationals require canonical form.
    incoming.value.canonicalize();
    bool merged = false;
    for (const auto& existing : entries_) {
      if (existing.target == incoming.target) {
        if (existing.value != incoming.value) {
          throw std::invalid_argument(
              "contradictory duplicate assessment for " +
              lowprev::to_string(incoming.target) + ": " +
              rat_to_string(existing.value) + " vs " +
              rat_to_string(incoming.value));
        }
        merged = true;
        break;
      }
    }
    if (!merged) {
      entries_.push_back(std::move(incoming));
    }
  }
}

std::optional<std::size_t> Assessment::find(const ConditionalGamble& key) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].target == key) return i;
  }
  return std::nullopt;
}

std::optional<Rational> Assessment::value_of(const ConditionalGamble& key) const {
  const auto index = find(key);
  if (!index) return std::nullopt;
  return entries_[*index].value;
}

Assessment Assessment::with_entry(const ConditionalGamble& target,
                                  const Rational& value) const {
  std::vector<AssessmentEntry> entries = entries_;
  entries.push_back(AssessmentEntry{target, value});
  if (entries_.empty()) {
    require_same_partition(partition_, target.partition());
    Assessment result(partition_);
    result.entries_ = std::move(entries);
    result.entries_.back().value.canonicalize();
    return result;
  }
  return Assessment(std::move(entries));
}

std::vector<Event> Assessment::conditioning_events() const {
  std::vector<Event> events;
  for (const auto& entry : entries_) {
    const Event& cond = entry.target.cond();
    if (std::none_of(events.begin(), events.end(),
                     [&](const Event& e) { return e == cond; })) {
      events.push_back(cond);
    }
  }
  return events;
}

std::string to_string(const ExtendedValue& value) {
  if (value.is_neg_infinity()) return "-inf";
  if (value.is_pos_infinity()) return "+inf";
  return rat_to_string(value.rational());
}

Rational restrict_sup(const Gamble& x, const Event& b) {
  require_same_partition(x.partition(), b.partition());
  if (b.is_empty()) {
    throw std::domain_error("conditional supremum over the empty event");
  }
  std::optional<Rational> best;
  for (std::size_t atom : b.members()) {
    const Rational& v = x.value(atom);
    if (!best || v > *best) best = v;
  }
  return *best;
}

Rational restrict_inf(const Gamble& x, const Event& b) {
  require_same_partition(x.partition(), b.partition());
  if (b.is_empty()) {
    throw std::domain_error("conditional infimum over the empty event");
  }
  std::optional<Rational> best;
  for (std::size_t atom : b.members()) {
    const Rational& v = x.value(atom);
    if (!best || v < *best) best = v;
  }
  return *best;
}

bool gn_leq_events(const Event& a, const Event& b, const Event& c,
                   const Event& d) {
  require_same_partition(a.partition(), b.partition());
  require_same_partition(a.partition(), c.partition());
  require_same_partition(a.partition(), d.partition());
  if (b.is_empty() || d.is_empty()) {
    throw std::domain_error("conditioning events must be non-empty");
  }
  const Event ab = a.meet(b);
  const Event cd = c.meet(d);
  const Event not_c_and_d = c.complement().meet(d);
  const Event not_a_and_b = a.complement().meet(b);
  return ab.subset_of(cd) && not_c_and_d.subset_of(not_a_and_b);
}

bool gn_leq_gambles(const ConditionalGamble& xb, const ConditionalGamble& yd) {
  require_same_partition(xb.partition(), yd.partition());
  const Event& b = xb.cond();
  const Event& d = yd.cond();
  const Rational sup_x = restrict_sup(xb.gamble(), b);
  const Rational inf_y = restrict_inf(yd.gamble(), d);
  const std::size_t n = xb.gamble().size();
  for (std::size_t atom = 0; atom < n; ++atom) {
    const bool in_b = b.contains(atom);
    const bool in_d = d.contains(atom);
    Rational lhs(0);
    Rational rhs(0);
    if (in_b) lhs += xb.gamble().value(atom);
    if (!in_b && in_d) lhs += sup_x;
    if (in_d) rhs += yd.gamble().value(atom);
    if (in_b && !in_d) rhs += inf_y;
    if (lhs > rhs) return false;
  }
  return true;
}

}  // namespace lowprev
