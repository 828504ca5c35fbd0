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

#include "bmg/ce_open.hpp"
#include "bmg/effective_sets.hpp"
#include "bmg/liouville.hpp"
#include "oracles.hpp"
#include "set_oracles.hpp"

using namespace bmg;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

}  // namespace

TEST(MemberSemidecide, Examples) {
  Space s = Space::euclidean(1);
  CeOpenSet u = CeOpenSet::of(s, {ball(R("0"), R("1"))}, "B(0,1)");
  auto yes = member_semidecide({R("0")}, u, 10);
  ASSERT_TRUE(yes);
  EXPECT_EQ(*yes, nu_encode(ball(R("0"), R("1"))));
  EXPECT_FALSE(member_semidecide({R("5")}, u, 1000));
  auto half_in_u2 = member_semidecide({R("1/2")}, layer_enumerate(2, Space::euclidean(1)), 1000);
  ASSERT_TRUE(half_in_u2);
  BasicOpen w = nu_decode(s, *half_in_u2);
  EXPECT_TRUE(contains(w, {R("1/2")}));
}

TEST(IntersectCe, SoundEmissions) {
  Space s = Space::euclidean(1);
  CeOpenSet a = CeOpenSet::of(s, {interval(R("0"), R("2")), interval(R("5"), R("6"))}, "A");
  CeOpenSet b = CeOpenSet::of(s, {interval(R("1"), R("3")), interval(R("11/2"), R("7"))}, "B");
  auto got = intersect_ce(a, b).emissions(200);
  ASSERT_FALSE(got.empty());
  for (const auto& g : got) {
    bool in_a = subset(g, interval(R("0"), R("2"))) || subset(g, interval(R("5"), R("6")));
    bool in_b = subset(g, interval(R("1"), R("3"))) || subset(g, interval(R("11/2"), R("7")));
    EXPECT_TRUE(in_a && in_b);
  }
  EXPECT_TRUE(member_semidecide({R("3/2")}, intersect_ce(a, b), 200));
  EXPECT_TRUE(member_semidecide({R("23/4")}, intersect_ce(a, b), 200));
  CeOpenSet far = CeOpenSet::of(s, {interval(R("10"), R("11"))}, "far");
  EXPECT_TRUE(intersect_ce(a, far).finite_emissions(100).value().empty());
}

TEST(IntersectCe, RestartableAndDeterministic) {
  Space s = Space::euclidean(1);
  CeOpenSet a = layer_enumerate(1, s);
  CeOpenSet b = CeOpenSet::of(s, {interval(R("1/3"), R("1/2"))}, "B");
  auto first = intersect_ce(a, b).emissions(300);
  auto second = intersect_ce(a, b).emissions(300);
  EXPECT_EQ(first, second);
}

TEST(EmptyWitness, Identity) {
  EndWitness w = empty_witness();
  BasicOpen u = interval(R("0"), R("1"));
  EXPECT_EQ(w.refine(u).ball, u);
}

TEST(LatticeWitness, AvoidsIntegersOnCorpus) {
  EndWitness w = lattice_witness();
  for (const auto& u : set_oracles::line_corpus(200, 1)) {
    BasicOpen v = w.refine(u).ball;
    EXPECT_TRUE(subset(v, u));
    EXPECT_TRUE(set_oracles::integer_free(v, R("0")));
  }
}

TEST(SingletonWitness, AvoidsThePoint) {
  Point x{R("1/3")};
  EndWitness w = singleton_witness(x);
  for (const auto& u : set_oracles::line_corpus(200, 2)) {
    BasicOpen v = w.refine(u).ball;
    EXPECT_TRUE(subset(v, u));
    EXPECT_FALSE(oracle::member(v, x));
  }
  Point y{R("1/3"), R("1/5")};
  EndWitness w2 = singleton_witness(y);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    BasicOpen u = oracle::random_ball(rng, Space::torus(2));
    u.center = y;
    BasicOpen v = w2.refine(u).ball;
    EXPECT_TRUE(subset(v, u));
    EXPECT_FALSE(oracle::member(v, y));
  }
}

TEST(CantorWitness, MembershipOracle) {
  EXPECT_TRUE(in_cantor_set(R("0")));
  EXPECT_TRUE(in_cantor_set(R("1")));
  EXPECT_TRUE(in_cantor_set(R("1/3")));
  EXPECT_TRUE(in_cantor_set(R("2/3")));
  EXPECT_TRUE(in_cantor_set(R("1/4")));  // 0.020202...
  EXPECT_TRUE(in_cantor_set(R("3/4")));
  EXPECT_FALSE(in_cantor_set(R("1/2")));
  EXPECT_FALSE(in_cantor_set(R("5/9")));
  EXPECT_FALSE(in_cantor_set(R("-1/3")));
}

TEST(CantorWitness, RefinementsLieInGaps) {
  EndWitness w = cantor_witness();
  for (const auto& u : set_oracles::line_corpus(200, 3)) {
    BasicOpen v = w.refine(u).ball;
    EXPECT_TRUE(subset(v, u));
    EXPECT_TRUE(set_oracles::cantor_free(v)) << join(v.center) << " " << v.radius;
  }
}

TEST(InversePowersWitness, AvoidsTheClosure) {
  EndWitness w = end_closure(inverse_powers_witness());
  EXPECT_TRUE(w.contains({R("0")}));
  EXPECT_TRUE(w.contains({R("1/7")}));
  EXPECT_FALSE(w.contains({R("2/7")}));
  for (const auto& u : set_oracles::line_corpus(200, 4)) {
    BasicOpen v = w.refine(u).ball;
    EXPECT_TRUE(subset(v, u));
    EXPECT_TRUE(set_oracles::inverse_powers_free(v));
  }
  // Balls around the limit point.
  for (long k = 1; k <= 50; ++k) {
    BasicOpen u = ball(R("0"), Rational(Integer(1), Integer(k)));
    BasicOpen v = w.refine(u).ball;
    EXPECT_TRUE(subset(v, u));
    EXPECT_TRUE(set_oracles::inverse_powers_free(v));
  }
}

TEST(EndFromDenseCeOpen, WholeSpace) {
  Space s = Space::euclidean(1);
  CeOpenSet a = CeOpenSet::of(s, {ball(R("0"), R("100"))}, "big");
  a.set_density(dovetail_evidence(a, 10));
  EndWitness w = end_from_dense_ce_open(a);
  BasicOpen u = interval(R("0"), R("1"));
  EXPECT_EQ(w.refine(u).ball, u);
}

TEST(EndFromDenseCeOpen, LiouvilleLayerOne) {
  CeOpenSet u1 = layer_enumerate(1, Space::euclidean(1));
  EndWitness w = end_from_dense_ce_open(u1);
  BasicOpen u = interval(R("0"), R("1"));
  BasicOpen v = w.refine(u).ball;
  EXPECT_TRUE(subset(v, u));
  // Inside one interval (p/q - 1/q, p/q + 1/q) with q >= 2.
  bool inside_one = false;
  for (const auto& e : u1.emissions(400)) inside_one = inside_one || subset(v, e);
  EXPECT_TRUE(inside_one);
  EXPECT_FALSE(w.contains({R("1/2")}));  // rationals are never in the complement
}

TEST(EndFromDenseCeOpen, RecordsCoveringInterval) {
  CeOpenSet u3 = layer_enumerate(3, Space::euclidean(1));
  EndWitness w = end_from_dense_ce_open(u3);
  for (const auto& u : set_oracles::line_corpus(200, 5)) {
    Refinement r = w.refine(u);
    auto note = r.note;
    ASSERT_EQ(note.rfind("cover=", 0), 0u);
    auto tilde = note.find('~');
    BasicOpen cover = ball(Rational::parse(note.substr(6, tilde - 6)), Rational::parse(note.substr(tilde + 1)));
    EXPECT_TRUE(subset(r.ball, u));
    EXPECT_TRUE(subset(r.ball, cover));
    EXPECT_LE(cover.radius, Rational(1) / Rational(8));
  }
}

TEST(EndFromDenseCeOpen, MissingEvidenceDiverges) {
  Space s = Space::euclidean(1);
  CeOpenSet a = CeOpenSet::of(s, {interval(R("0"), R("1"))}, "not-dense");
  try {
    end_from_dense_ce_open(a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::density_search_diverged);
  }
  a.set_density(dovetail_evidence(a, 5));
  EndWitness w = end_from_dense_ce_open(a);
  try {
    w.refine(interval(R("5"), R("6")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::density_search_diverged);
  }
}

TEST(DenseOpenFromEnd, EmptyWitnessEnumeratesBasicOpens) {
  Space s = Space::euclidean(1);
  auto got = dense_open_from_end(s, empty_witness()).emissions(1 << 14);
  ASSERT_FALSE(got.empty());
  for (const auto& g : got) EXPECT_EQ(basis_violation(g), std::nullopt);
  EXPECT_EQ(got.front(), nu_decode(s, nu_encode(got.front())));
}

TEST(DenseOpenFromEnd, LatticeEmissionsAvoidIntegers) {
  Space s = Space::euclidean(1);
  EndWitness w = lattice_witness();
  auto got = dense_open_from_end(s, w).emissions(1 << 18);
  ASSERT_GT(got.size(), 10u);
  for (const auto& g : got) EXPECT_TRUE(set_oracles::integer_free(g, R("0")));
  // Density, assertable exactly: the emission indexed by u lies in u.
  for (const auto& u : set_oracles::line_corpus(50, 6)) EXPECT_TRUE(subset(w.refine(u).ball, u));
}

TEST(DenseOpenFromEnd, RoundTripThroughComplementWitness) {
  Space s = Space::euclidean(1);
  EndWitness w = cantor_witness();
  EndWitness back = end_from_dense_ce_open(dense_open_from_end(s, w));
  for (const auto& u : set_oracles::line_corpus(200, 7)) {
    BasicOpen v = back.refine(u).ball;
    EXPECT_TRUE(subset(v, u));
    EXPECT_TRUE(set_oracles::cantor_free(v));
  }
}

TEST(EndIntersection, SingleAndComposed) {
  EndWitness l0 = lattice_witness(R("0")), lh = lattice_witness(R("1/2"));
  EndWitness one = end_intersection({l0});
  EndWitness both = end_intersection({l0, lh});
  EndWitness twice = end_intersection({l0, l0});
  for (const auto& u : set_oracles::line_corpus(200, 8)) {
    EXPECT_EQ(one.refine(u).ball, l0.refine(u).ball);
    BasicOpen v = both.refine(u).ball;
    EXPECT_TRUE(subset(v, u));
    EXPECT_TRUE(set_oracles::integer_free(v, R("0")));
    EXPECT_TRUE(set_oracles::integer_free(v, R("1/2")));
    EXPECT_EQ(twice.refine(u).ball, l0.refine(l0.refine(u).ball).ball);
  }
}

TEST(EndClosure, KeepsRefinementAndWidensOracle) {
  EndWitness n = lattice_witness();
  EndWitness cn = end_closure(n);
  EndWitness q = singleton_witness({R("1/2")});
  EndWitness cq = end_closure(q);
  for (const auto& u : set_oracles::line_corpus(50, 9)) {
    EXPECT_EQ(cn.refine(u).ball, n.refine(u).ball);
    EXPECT_EQ(cq.refine(u).ball, q.refine(u).ball);
  }
  EndWitness ip = inverse_powers_witness();
  EXPECT_FALSE(ip.contains({R("0")}));
  EXPECT_TRUE(end_closure(ip).contains({R("0")}));
}

TEST(MeagerUnion, SingleAndAlternating) {
  MeagerPresentation a = single_layer(singleton_witness({R("1/3")}));
  MeagerPresentation b = single_layer(singleton_witness({R("2/3")}));
  EXPECT_EQ(meager_union({a}).layer(1).tag, a.layer(1).tag);
  MeagerPresentation ab = meager_union({a, b});
  EXPECT_EQ(ab.layer(1).tag, a.layer(1).tag);
  EXPECT_EQ(ab.layer(2).tag, b.layer(1).tag);
  EXPECT_EQ(ab.layer(3).tag, "empty");
}

TEST(MeagerUnion, CoversBothSetsProbePoints) {
  MeagerPresentation n = single_layer(lattice_witness());
  MeagerPresentation q = rationals_presentation(R("0"), R("1"));
  MeagerPresentation u = meager_union({n, q});
  auto covered = [&](const Point& x) {
    for (std::size_t k = 1; k <= 60; ++k) {
      if (u.layer(k).contains(x)) return true;
    }
    return false;
  };
  for (long k = -3; k <= 3; ++k) EXPECT_TRUE(covered({Rational(k)}));
  for (const auto& r : first_rationals(R("0"), R("1"), 20)) EXPECT_TRUE(covered({r}));
  EXPECT_FALSE(covered({R("7/3")}));
}

TEST(MeagerUnion, DiagonalOverInfiniteSequence) {
  auto seq = [](std::size_t i) {
    return rationals_presentation(Rational(static_cast<long>(i)), Rational(static_cast<long>(i + 1)));
  };
  MeagerPresentation u = meager_union(seq, "diag");
  // Layer order (i, j): (1,1), (2,1), (1,2), (3,1), (2,2), (1,3).
  EXPECT_EQ(u.layer(1).tag, seq(1).layer(1).tag);
  EXPECT_EQ(u.layer(2).tag, seq(2).layer(1).tag);
  EXPECT_EQ(u.layer(3).tag, seq(1).layer(2).tag);
  EXPECT_EQ(u.layer(6).tag, seq(1).layer(3).tag);
}

TEST(Rationals, CanonicalOrder) {
  auto r = first_rationals(R("0"), R("1"), 6);
  std::vector<Rational> expected{R("1/2"), R("1/3"), R("2/3"), R("1/4"), R("3/4"), R("1/5")};
  EXPECT_EQ(r, expected);
  EXPECT_EQ(nth_rational(R("0"), R("1"), 5), R("3/4"));
  auto near0 = first_rationals(R("-1"), R("1"), 3);
  EXPECT_EQ(near0.front(), R("0"));
}

TEST(ClosedSubBall, ClosureInsideOnRandomBalls) {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 100; ++i) {
    Space s = i % 2 ? Space::euclidean(2) : Space::torus(1);
    BasicOpen u = oracle::random_ball(rng, s);
    auto v = closed_sub_ball(CeOpenSet::of(s, {u}, "U"), 10);
    ASSERT_TRUE(v);
    EXPECT_TRUE(closure_strictly_inside(*v, u));
  }
}
