// Copyright 2026 The bmgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <random>

#include "bmg/dynamics.hpp"
#include "oracles.hpp"

using namespace bmg;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

CeOpenSet arc_set(const char* c, const char* r) {
  return CeOpenSet::of(Space::torus(1), {arc(R(c), R(r))}, "E");
}

}  // namespace

TEST(Systems, RotationExamples) {
  Homeomorphism t = rotation_system({R("1/3")});
  EXPECT_EQ(t.forward(arc(R("1/8"), R("1/8"))), arc(R("11/24"), R("1/8")));
  EXPECT_EQ(t.backward(arc(R("1/8"), R("1/8"))), arc(R("19/24"), R("1/8")));
  EXPECT_EQ(iterate_forward(t, arc(R("1/8"), R("1/8")), 3), arc(R("1/8"), R("1/8")));
  EXPECT_THROW(rotation_system({R("1")}), Error);
  EXPECT_THROW(rotation_system({R("-1/3")}), Error);
}

TEST(Systems, InversesOnRandomBalls) {
  std::mt19937_64 rng(53);
  std::vector<Homeomorphism> systems{rotation_system({R("2/7")}), rotation_system({R("1/3"), R("1/5")}),
                                     translation_system({R("-5/2")}), identity_system(Space::torus(1)),
                                     permutation_system({1, 0}, {true, false})};
  for (const auto& t : systems) {
    for (int i = 0; i < 100; ++i) {
      BasicOpen b = oracle::random_ball(rng, t.space);
      EXPECT_EQ(t.backward(t.forward(b)), b) << t.descriptor;
      EXPECT_EQ(t.forward(t.backward(b)), b) << t.descriptor;
      EXPECT_EQ(t.forward(b).radius, b.radius);
    }
  }
}

TEST(Systems, PermutationAndReflection) {
  Homeomorphism t = permutation_system({1, 0}, {true, false});
  BasicOpen b = arc(Point{R("1/4"), R("1/8")}, R("1/16"));
  EXPECT_EQ(t.forward(b), arc(Point{R("7/8"), R("1/4")}, R("1/16")));
  EXPECT_THROW(permutation_system({0, 0}, {false, false}), Error);
  EXPECT_THROW(permutation_system({0, 1}, {false}), Error);
}

TEST(Preimage, PullsBackEmissions) {
  Homeomorphism t = rotation_system({R("1/3")});
  CeOpenSet e = arc_set("1/8", "1/8");
  EXPECT_EQ(preimage_ce(t, e, 1).emissions(10), std::vector<BasicOpen>{arc(R("19/24"), R("1/8"))});
  EXPECT_EQ(preimage_ce(t, e, 3).emissions(10), e.emissions(10));
  EXPECT_EQ(preimage_ce(t, e, 0).descriptor(), "E");
}

TEST(WanderingProbe, Examples) {
  Homeomorphism rot = rotation_system({R("1/3")});
  WanderingResult w = wandering_probe(rot, arc_set("1/8", "1/8"), 8, 100);
  EXPECT_TRUE(w.not_wandering);
  EXPECT_EQ(w.j, 3u);
  EXPECT_EQ(w.str(), "NotWandering(3)");
  EXPECT_EQ(wandering_probe(rot, arc_set("1/8", "1/4"), 8, 100).j, 1u);
  EXPECT_EQ(wandering_probe(identity_system(Space::torus(1)), arc_set("1/2", "1/8"), 8, 100).j, 1u);
  Homeomorphism tr = translation_system({R("1")});
  CeOpenSet e = CeOpenSet::of(Space::euclidean(1), {ball(R("1/4"), R("1/4"))}, "E");
  WanderingResult u = wandering_probe(tr, e, 8, 100);
  EXPECT_FALSE(u.not_wandering);
  EXPECT_EQ(u.str(), "Unknown");
}

TEST(FnAvoidance, RotationByAThird) {
  Homeomorphism t = rotation_system({R("1/3")});
  CeOpenSet e = arc_set("1/8", "1/8");
  EXPECT_TRUE(fn_avoidance(t, e, 0).h.finite_emissions(100).value().empty());
  EXPECT_TRUE(fn_avoidance(t, e, 1).h.finite_emissions(100).value().empty());
  auto h2 = fn_avoidance(t, e, 2).h.finite_emissions(100).value();
  ASSERT_EQ(h2.size(), 1u);
  EXPECT_EQ(h2[0], arc(R("1/8"), R("1/8")));
  EXPECT_EQ(fn_avoidance(t, e, 5).h.finite_emissions(100).value(), h2);
}

TEST(FnAvoidance, EmissionsReturnToE) {
  // Every emitted ball V satisfies V ⊆ E and T^(n+1)(V) ⊆ E.
  Homeomorphism t = rotation_system({R("2/7")});
  BasicOpen e0 = arc(R("1/10"), R("1/5"));
  CeOpenSet e = CeOpenSet::of(Space::torus(1), {e0}, "E");
  for (std::size_t n = 0; n <= 12; ++n) {
    for (const auto& v : fn_avoidance(t, e, n).h.emissions(200)) {
      EXPECT_TRUE(subset(v, e0));
      EXPECT_TRUE(subset(iterate_forward(t, v, n + 1), e0));
    }
  }
}

TEST(RecurrenceP2, TenRoundsReturnToE) {
  Homeomorphism t = rotation_system({R("1/3")});
  BasicOpen e0 = arc(R("1/8"), R("1/8"));
  CeOpenSet e = CeOpenSet::of(Space::torus(1), {e0}, "E");
  GameSession s(t.space);
  run(s, canonical_p1(e0), recurrence_p2_strategy(t, e, 10000), 10);
  ASSERT_EQ(s.moves().size(), 20u);
  for (std::size_t r = 1; r <= 10; ++r) {
    const Move& m = s.moves()[2 * r - 1];
    std::size_t n = std::stoul(*m.note.get("n"));
    EXPECT_GE(n, r);
    EXPECT_EQ(std::stoul(*m.note.get("j")), n + 1);
    EXPECT_TRUE(subset(m.ball, e0));
    EXPECT_TRUE(subset(iterate_forward(t, m.ball, n + 1), e0));
  }
}

TEST(RecurrenceP2, RandomOpponents) {
  Homeomorphism t = rotation_system({R("3/8")});
  BasicOpen e0 = arc(R("1/2"), R("1/6"));
  CeOpenSet e = CeOpenSet::of(Space::torus(1), {e0}, "E");
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    GameSession s(t.space);
    s.play(Player::p1, e0);
    Strategy p2 = recurrence_p2_strategy(t, e, 10000);
    for (std::size_t r = 1; r <= 6; ++r) {
      if (r > 1) s.play(Player::p1, sub_ball(s.moves().back().ball, 1 + rng() % 6));
      Response resp = p2.respond(s.space(), s.moves());
      s.play(Player::p2, resp.ball, resp.note);
      std::size_t n = std::stoul(*resp.note.get("n"));
      EXPECT_GE(n, r);
      EXPECT_TRUE(subset(iterate_forward(t, resp.ball, n + 1), e0));
    }
  }
}

TEST(RecurrenceP2, OutsideEAnswersWithTheMove) {
  Homeomorphism t = rotation_system({R("1/3")});
  CeOpenSet e = arc_set("1/8", "1/8");
  GameSession s(t.space);
  run(s, canonical_p1(arc(R("5/8"), R("1/8"))), recurrence_p2_strategy(t, e, 1000), 2);
  EXPECT_EQ(s.moves()[1].ball, s.moves()[0].ball);
  EXPECT_EQ(s.moves()[1].note.str(), "outside=E");
}

TEST(RecurrenceP2, WanderingSystemExhausts) {
  Homeomorphism t = translation_system({R("1")});
  BasicOpen e0 = ball(R("1/4"), R("1/4"));
  CeOpenSet e = CeOpenSet::of(Space::euclidean(1), {e0}, "E");
  GameSession s(t.space);
  try {
    run(s, canonical_p1(e0), recurrence_p2_strategy(t, e, 2000), 3);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::avoidance_search_exhausted);
    EXPECT_EQ(err.round(), 1u);
  }
}
