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

/**@file   test_core.cpp
 * @brief  Unit tests for partitions, events, gambles, assessments,
 *         conditional suprema/infima, and the Goodman-Nguyen relation.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "core.hpp"
#include "test_util.hpp"

using namespace lowprev;
using testutil::Rng;

namespace {

PartitionPtr abc() {
  return std::make_shared<const Partition>(
      std::vector<std::string>{"a", "b", "c"});
}

}  // namespace

TEST_CASE("rational parsing accepts canonical and redundant forms") {
  CHECK(rat_from_string("3/4") == Rational(3, 4));
  CHECK(rat_from_string("-3/4") == Rational(-3, 4));
  CHECK(rat_from_string("7") == Rational(7));
  CHECK(rat_from_string("+2") == Rational(2));
  CHECK(rat_from_string("6/8") == Rational(3, 4));
  CHECK(rat_from_string("0/5") == Rational(0));
  CHECK(rat_from_string("-0") == Rational(0));
}

TEST_CASE("rational parsing rejects malformed strings") {
  CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1 /2"), std::invalid_argument);
}

TEST_CASE("rational formatting is canonical") {
  CHECK(rat_to_string(Rational(3, 4)) == "3/4");
  CHECK(rat_to_string(Rational(-1, 2)) == "-1/2");
  CHECK(rat_to_string(Rational(5)) == "5");
  CHECK(rat_to_string(rat_from_string("6/8")) == "3/4");
}

TEST_CASE("partition construction validates atoms") {
  CHECK_THROWS_AS(Partition(std::vector<std::string>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Partition(std::vector<std::string>{"a", "a"}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Partition(std::vector<std::string>{"a", ""}),
                  std::invalid_argument);

  std::vector<std::string> many;
  for (int i = 0; i < 17; ++i) many.push_back("w" + std::to_string(i));
  CHECK_THROWS_AS((Partition{many}), std::invalid_argument);
  CHECK_NOTHROW(Partition(many, 17));

  const auto p = abc();
  CHECK(p->size() == 3);
  CHECK(p->index_of("b") == 1);
  CHECK_FALSE(p->index_of("z").has_value());
}

TEST_CASE("event algebra") {
  const auto p = abc();
  const Event ab(p, {0, 1});
  const Event bc(p, {1, 2});
  const Event empty = Event::empty(p);
  const Event omega = Event::omega(p);

  CHECK_THROWS_AS(Event(p, {3}), std::invalid_argument);

  CHECK(ab.member_count() == 2);
  CHECK(ab.contains(0));
  CHECK_FALSE(ab.contains(2));
  CHECK(ab.meet(bc) == Event::singleton(p, 1));
  CHECK(ab.join(bc) == omega);
  CHECK(ab.complement() == Event::singleton(p, 2));
  CHECK(empty.is_empty());
  CHECK(omega.is_omega());
  CHECK(empty.subset_of(ab));
  CHECK(ab.subset_of(omega));
  CHECK_FALSE(ab.subset_of(bc));
  CHECK(ab.member_labels() == std::vector<std::string>{"a", "b"});
}

TEST_CASE("gamble arithmetic") {
  const auto p = abc();
  const Gamble x(p, {Rational(3), Rational(-2), Rational(7)});
  const Gamble y(p, {Rational(1), Rational(1), Rational(-1)});

  CHECK_THROWS_AS(Gamble(p, {Rational(1)}), std::invalid_argument);

  CHECK((x + y).value(0) == Rational(4));
  CHECK((x - y).value(2) == Rational(8));
  CHECK((-x).value(1) == Rational(2));
  CHECK(x.scaled(Rational(1, 2)).value(2) == Rational(7, 2));
  CHECK(x.shifted(Rational(1)).value(1) == Rational(-1));
  CHECK(Gamble::constant(p, Rational(5)).value(2) == Rational(5));
  CHECK(Gamble::zero(p).is_zero());

  const Event ab(p, {0, 1});
  CHECK(Gamble::indicator(ab).value(0) == Rational(1));
  CHECK(Gamble::indicator(ab).value(2) == Rational(0));
  CHECK(x.restricted_to(ab).value(2) == Rational(0));
  CHECK(x.restricted_to(ab).value(0) == Rational(3));

  CHECK(y.max_value() == Rational(1));
  CHECK_FALSE(x.is_nonnegative());
  CHECK(Gamble::indicator(ab).is_nonnegative());
  CHECK((-Gamble::indicator(ab)).is_nonpositive());
  CHECK(y.leq(x.shifted(Rational(10))));
}

TEST_CASE("conditional gambles validate their conditioning event") {
  const auto p = abc();
  const Gamble x(p, {Rational(1), Rational(2), Rational(3)});
  CHECK_THROWS_AS(ConditionalGamble(x, Event::empty(p)),
                  std::invalid_argument);
  const auto q = testutil::make_partition(3);
  CHECK_THROWS_AS(ConditionalGamble(x, Event::omega(q)),
                  std::invalid_argument);
  const ConditionalGamble cg(x, Event(p, {0, 2}));
  CHECK(to_string(cg) == "(1,2,3)|{a,c}");
}

TEST_CASE("assessments merge equal duplicates and reject contradictions") {
  const auto p = abc();
  const ConditionalGamble cg(Gamble(p, {Rational(1), Rational(0), Rational(0)}),
                             Event::omega(p));
  const Assessment merged(std::vector<AssessmentEntry>{
      {cg, Rational(1, 2)}, {cg, Rational(1, 2)}});
  CHECK(merged.size() == 1);
  CHECK(merged.find(cg) == std::size_t{0});
  CHECK(merged.value_of(cg) == Rational(1, 2));

  CHECK_THROWS_AS(Assessment(std::vector<AssessmentEntry>{
                      {cg, Rational(1, 2)}, {cg, Rational(1, 3)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(merged.with_entry(cg, Rational(1, 3)),
                  std::invalid_argument);
  CHECK(merged.with_entry(cg, Rational(1, 2)).size() == 1);

  const auto q = testutil::make_partition(3);
  const ConditionalGamble other(Gamble::zero(q), Event::omega(q));
  CHECK_THROWS_AS(Assessment(std::vector<AssessmentEntry>{
                      {cg, Rational(0)}, {other, Rational(0)}}),
                  std::invalid_argument);

  const Assessment empty(p);
  CHECK(empty.size() == 0);
  CHECK_FALSE(empty.find(cg));
  CHECK(empty.with_entry(cg, Rational(1)).size() == 1);
  CHECK(merged.conditioning_events().size() == 1);
}

TEST_CASE("conditional supremum and infimum") {
  const auto p = abc();
  const Event b(p, {0, 1});

  SUBCASE("constant gamble") {
    const Gamble c = Gamble::constant(p, Rational(-7, 3));
    CHECK(restrict_sup(c, b) == Rational(-7, 3));
    CHECK(restrict_inf(c, b) == Rational(-7, 3));
    CHECK(restrict_sup(c, Event::omega(p)) == Rational(-7, 3));
  }

  SUBCASE("two-point image on the conditioning event") {
    const Gamble x(p, {Rational(-1), Rational(1), Rational(0)});
    CHECK(restrict_sup(x, b) == Rational(1));
    CHECK(restrict_inf(x, b) == Rational(-1));
  }

  SUBCASE("enumerated maximum and minimum") {
    const Gamble x(p, {Rational(3), Rational(-2), Rational(7)});
    CHECK(restrict_sup(x, b) == Rational(3));
    CHECK(restrict_inf(x, b) == Rational(-2));
    CHECK(restrict_sup(x, Event::omega(p)) == Rational(7));
  }

  SUBCASE("errors") {
    const Gamble x(p, {Rational(3), Rational(-2), Rational(7)});
    CHECK_THROWS_AS(restrict_sup(x, Event::empty(p)), std::domain_error);
    CHECK_THROWS_AS(restrict_inf(x, Event::empty(p)), std::domain_error);
    const auto q = testutil::make_partition(3);
    CHECK_THROWS_AS(restrict_sup(x, Event::omega(q)), std::invalid_argument);
  }
}

TEST_CASE("conditional sup/inf properties on random gambles") {
  Rng rng(20260301);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = testutil::make_partition(
        static_cast<std::size_t>(testutil::rand_int(rng, 1, 5)));
    const Event b = testutil::rand_event(rng, p);
    const Gamble x = testutil::rand_gamble(rng, p, -4, 4);
    const Gamble y = testutil::rand_gamble(rng, p, -4, 4);
    const Rational c = testutil::rand_rational(rng, -3, 3);

    CHECK(restrict_inf(x, b) <= restrict_sup(x, b));
    CHECK(restrict_sup(x + y, b) <=
          restrict_sup(x, b) + restrict_sup(y, b));
    CHECK(restrict_sup(x.shifted(c), b) == restrict_sup(x, b) + c);
    CHECK(restrict_inf(-x, b) == -restrict_sup(x, b));
  }
}

TEST_CASE("Goodman-Nguyen relation on conditional events") {
  const auto p = abc();
  const Event a = Event::singleton(p, 0);
  const Event ab(p, {0, 1});
  const Event ac(p, {0, 2});
  const Event omega = Event::omega(p);
  const Event empty = Event::empty(p);

  SUBCASE("reflexivity") {
    CHECK(gn_leq_events(a, ab, a, ab));
    CHECK(gn_leq_events(empty, omega, empty, omega));
  }

  SUBCASE("vacuous events reverse the conditioning order") {
    // With B implying C, the impossible event conditional on the coarser C
    // precedes the one conditional on the finer B.
    CHECK(ab.subset_of(omega));
    CHECK(gn_leq_events(empty, omega, empty, ab));
    CHECK_FALSE(gn_leq_events(empty, ab, empty, omega));
  }

  SUBCASE("direct inclusion check") {
    CHECK(gn_leq_events(a, ab, ac, omega));
    CHECK_FALSE(gn_leq_events(ac, omega, a, ab));
  }

  SUBCASE("errors") {
    const auto q = testutil::make_partition(3);
    CHECK_THROWS_AS(gn_leq_events(a, ab, Event::omega(q), Event::omega(q)),
                    std::invalid_argument);
    CHECK_THROWS_AS(gn_leq_events(a, empty, a, ab), std::domain_error);
    CHECK_THROWS_AS(gn_leq_events(a, ab, a, empty), std::domain_error);
  }
}

TEST_CASE("Goodman-Nguyen relation on conditional gambles") {
  const auto p2 = testutil::make_partition(2);
  const auto p = abc();

  SUBCASE("reflexivity") {
    const ConditionalGamble xg(Gamble(p, {Rational(2), Rational(-1),
                                          Rational(0)}),
                               Event(p, {0, 1}));
    CHECK(gn_leq_gambles(xg, xg));
  }

  SUBCASE("zero gambles reverse the conditioning order") {
    const Event ab(p, {0, 1});
    const ConditionalGamble zero_coarse(Gamble::zero(p), Event::omega(p));
    const ConditionalGamble zero_fine(Gamble::zero(p), ab);
    CHECK(gn_leq_gambles(zero_coarse, zero_fine));
  }

  SUBCASE("pointwise comparison on the sure event") {
    const ConditionalGamble x(Gamble::zero(p2), Event::omega(p2));
    const ConditionalGamble y(Gamble(p2, {Rational(1), Rational(2)}),
                              Event::omega(p2));
    CHECK(gn_leq_gambles(x, y));
    CHECK_FALSE(gn_leq_gambles(y, x));
  }

  SUBCASE("mismatched partitions") {
    const ConditionalGamble x(Gamble::zero(p2), Event::omega(p2));
    const ConditionalGamble y(Gamble::zero(p), Event::omega(p));
    CHECK_THROWS_AS(gn_leq_gambles(x, y), std::invalid_argument);
  }
}

TEST_CASE("Goodman-Nguyen gamble relation is reflexive and transitive") {
  Rng rng(20260302);
  int premise_hits = 0;
  for (int trial = 0; trial < 800; ++trial) {
    const auto p = testutil::make_partition(
        static_cast<std::size_t>(testutil::rand_int(rng, 2, 3)));
    const ConditionalGamble x(testutil::rand_gamble(rng, p, -1, 1),
                              testutil::rand_event(rng, p));
    const ConditionalGamble y(testutil::rand_gamble(rng, p, -1, 1),
                              testutil::rand_event(rng, p));
    const ConditionalGamble z(testutil::rand_gamble(rng, p, -1, 1),
                              testutil::rand_event(rng, p));

    CHECK(gn_leq_gambles(x, x));
    if (gn_leq_gambles(x, y) && gn_leq_gambles(y, z)) {
      ++premise_hits;
      CHECK(gn_leq_gambles(x, z));
    }
  }
  // The sample must actually exercise the transitivity premise.
  CHECK(premise_hits > 0);
}

TEST_CASE("event relation implies the gamble relation on indicators") {
  // The gamble relation is coarser than the event relation: filling the
  // off-conditioning region with a conditional supremum can only help the
  // comparison, so the implication holds in one direction only.
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto p = testutil::make_partition(n);
    std::vector<Event> events;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::size_t> members;
      for (std::size_t atom = 0; atom < n; ++atom) {
        if (mask & (1u << atom)) members.push_back(atom);
      }
      events.push_back(Event(p, members));
    }
    for (const Event& a : events) {
      for (const Event& b : events) {
        if (b.is_empty()) continue;
        for (const Event& c : events) {
          for (const Event& d : events) {
            if (d.is_empty()) continue;
            if (!gn_leq_events(a, b, c, d)) continue;
            const ConditionalGamble lhs(Gamble::indicator(a), b);
            const ConditionalGamble rhs(Gamble::indicator(c), d);
            CHECK(gn_leq_gambles(lhs, rhs));
          }
        }
      }
    }
  }
}

TEST_CASE("gamble relation counterexample to the converse implication") {
  // On atoms {w1, w2}: ({w2}|Omega) vs ({w1}|{w1}).  The event relation
  // fails (w2 does not imply w1), yet the indicator comparison holds
  // because the sure-bet right-hand side absorbs the left indicator.
  const auto p = testutil::make_partition(2);
  const Event a = Event::singleton(p, 1);
  const Event b = Event::omega(p);
  const Event c = Event::singleton(p, 0);
  const Event d = c;
  CHECK_FALSE(gn_leq_events(a, b, c, d));
  CHECK(gn_leq_gambles(ConditionalGamble(Gamble::indicator(a), b),
                       ConditionalGamble(Gamble::indicator(c), d)));
}
