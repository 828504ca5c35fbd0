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

#include "bmg/topology.hpp"
#include "oracles.hpp"

using namespace bmg;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

}  // namespace

TEST(Disjoint, Examples) {
  EXPECT_FALSE(disjoint(ball(R("0"), R("1")), ball(R("0"), R("1"))));
  EXPECT_TRUE(disjoint(ball(R("0"), R("1")), ball(R("3"), R("1"))));
  EXPECT_TRUE(disjoint(ball(R("0"), R("1")), ball(R("2"), R("1"))));  // tangent
  EXPECT_TRUE(oracle::intersect_by_probe(ball(R("0"), R("1")), ball(R("2"), R("1"))) == false);
}

TEST(Disjoint, DimensionMismatch) {
  try {
    disjoint(ball(R("0"), R("1")), ball(Point{R("0"), R("0")}, R("1")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::dimension_mismatch);
  }
  EXPECT_THROW(subset(ball(R("0"), R("1/4")), arc(R("0"), R("1/4"))), Error);
}

TEST(Subset, Examples) {
  EXPECT_TRUE(subset(ball(R("0"), R("1")), ball(R("0"), R("1"))));
  EXPECT_TRUE(subset(ball(R("1/2"), R("1/4")), ball(R("0"), R("1"))));
  EXPECT_FALSE(subset(ball(R("0"), R("1")), ball(R("1/2"), R("1/4"))));
}

TEST(ClosureStrictlyInside, Examples) {
  EXPECT_TRUE(closure_strictly_inside(ball(R("0"), R("1/2")), ball(R("0"), R("1"))));
  EXPECT_FALSE(closure_strictly_inside(ball(R("0"), R("1")), ball(R("0"), R("1"))));
  EXPECT_TRUE(closure_strictly_inside(ball(R("1/4"), R("1/8")), ball(R("0"), R("1/2"))));
  // Touching the boundary from inside is not strict.
  EXPECT_FALSE(closure_strictly_inside(ball(R("1/2"), R("1/2")), ball(R("0"), R("1"))));
}

TEST(Relations, AgreeWithPointProbesOnRandomPairs) {
  std::mt19937_64 rng(7);
  Space spaces[] = {Space::euclidean(1), Space::euclidean(2), Space::torus(1), Space::torus(2)};
  for (const auto& s : spaces) {
    for (int i = 0; i < 400; ++i) {
      BasicOpen a = oracle::random_ball(rng, s);
      BasicOpen b = i % 3 == 0 ? a : oracle::random_ball(rng, s);
      if (i % 5 == 1) {
        b = a;
        b.radius = b.radius * Rational(Integer(1), Integer(3));
      }
      EXPECT_EQ(intersects(a, b), oracle::intersect_by_probe(a, b));
      EXPECT_EQ(subset(a, b), oracle::subset_by_probe(a, b));
      EXPECT_EQ(closure_strictly_inside(a, b), oracle::closure_inside_by_probe(a, b));
    }
  }
}

TEST(Relations, ExactlyOneOfDisjointOverlapSubset) {
  std::mt19937_64 rng(11);
  Space s = Space::euclidean(1);
  for (int i = 0; i < 500; ++i) {
    BasicOpen a = oracle::random_ball(rng, s), b = oracle::random_ball(rng, s);
    if (disjoint(a, b)) {
      EXPECT_FALSE(subset(a, b));
      EXPECT_FALSE(subset(b, a));
    }
    if (closure_strictly_inside(a, b)) {
      EXPECT_TRUE(subset(a, b));
      EXPECT_FALSE(subset(b, a));
    }
  }
}

TEST(Subset, IsAPartialOrder) {
  std::mt19937_64 rng(13);
  Space s = Space::euclidean(1);
  for (int i = 0; i < 2000; ++i) {
    BasicOpen a = oracle::random_ball(rng, s), b = oracle::random_ball(rng, s), c = oracle::random_ball(rng, s);
    EXPECT_TRUE(subset(a, a));
    if (subset(a, b) && subset(b, a)) {
      EXPECT_EQ(a, b);
    }
    if (subset(a, b) && subset(b, c)) {
      EXPECT_TRUE(subset(a, c));
    }
  }
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(ball(R("0"), R("1"))), R("2"));
  EXPECT_EQ(diameter(ball(R("5/7"), R("1/6"))), R("1/3"));
  EXPECT_EQ(diameter(arc(R("0"), R("1/3"))), R("2/3"));
}

TEST(Diameter, TorusArcExtentBySampling) {
  // Unwrapped extent along the arc: the largest gap between sample points
  // of the arc, measured inside the arc itself.
  BasicOpen a = arc(R("9/10"), R("1/3"));
  Rational lo = a.center[0] - a.radius;
  Rational best(0);
  for (long i = 1; i < 600; ++i) {
    Rational x = lo + Rational(Integer(i), Integer(600)) * diameter(a);
    ASSERT_TRUE(contains(a, Point{frac(x)}));
    best = max(best, x - lo);
  }
  EXPECT_LT(best, diameter(a));
  EXPECT_GT(best, diameter(a) - R("1/100"));
}

TEST(IntersectEnumerate, IdentityGivesTheBallItself) {
  BasicOpen u = ball(R("0"), R("1"));
  auto e = intersect_enumerate(u, u);
  auto first = e.next();
  ASSERT_TRUE(first);
  EXPECT_EQ(*first, u);
}

TEST(IntersectEnumerate, SoundAndCoveringOnOverlappingIntervals) {
  BasicOpen u = interval(R("0"), R("2")), v = interval(R("1"), R("3"));
  auto e = intersect_enumerate(u, v);
  std::vector<BasicOpen> got;
  // In dimension 1 the intersection is a single interval, emitted once.
  for (int i = 0; i < 50; ++i) {
    auto b = e.next();
    if (!b) break;
    EXPECT_TRUE(subset(*b, u));
    EXPECT_TRUE(subset(*b, v));
    got.push_back(*b);
  }
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got.front(), interval(R("1"), R("2")));
  for (long k = 1; k <= 100; ++k) {
    Point x{R("1") + Rational(Integer(k), Integer(101))};
    bool covered = false;
    for (const auto& b : got) covered = covered || contains(b, x);
    EXPECT_TRUE(covered) << x[0];
  }
}

TEST(IntersectEnumerate, DisjointInputsGiveNothing) {
  auto e = intersect_enumerate(interval(R("0"), R("1")), interval(R("2"), R("3")));
  EXPECT_TRUE(e.empty_intersection());
  EXPECT_FALSE(e.next());
  auto tangent = intersect_enumerate(interval(R("0"), R("1")), interval(R("1"), R("3")));
  EXPECT_FALSE(tangent.next());
}

TEST(IntersectEnumerate, RandomPairsSoundAndProbeComplete) {
  std::mt19937_64 rng(17);
  Space spaces[] = {Space::euclidean(1), Space::euclidean(2), Space::torus(1), Space::torus(2)};
  for (const auto& s : spaces) {
    for (int i = 0; i < 60; ++i) {
      BasicOpen a = oracle::random_ball(rng, s), b = oracle::random_ball(rng, s);
      auto e = intersect_enumerate(a, b);
      std::vector<BasicOpen> got;
      for (int k = 0; k < 400; ++k) {
        auto w = e.next();
        if (!w) break;
        EXPECT_TRUE(subset(*w, a));
        EXPECT_TRUE(subset(*w, b));
        got.push_back(*w);
      }
      EXPECT_EQ(got.empty(), disjoint(a, b));
      // Each midpoint probe of the intersection is covered at this fuel.
      for (const auto& p : oracle::critical_probes(a, b)) {
        if (!(oracle::member(a, p) && oracle::member(b, p))) continue;
        bool covered = false;
        for (const auto& w : got) covered = covered || contains(w, p);
        EXPECT_TRUE(covered);
      }
    }
  }
}

TEST(IntersectsSemidecide, Examples) {
  Space s = Space::euclidean(1);
  Name u = nu_encode(interval(R("0"), R("2"))), v = nu_encode(interval(R("1"), R("3")));
  auto w = intersects_semidecide(s, u, v, 10);
  ASSERT_TRUE(w);
  BasicOpen b = nu_decode(s, *w);
  EXPECT_TRUE(subset(b, interval(R("0"), R("2"))));
  EXPECT_TRUE(subset(b, interval(R("1"), R("3"))));
  EXPECT_FALSE(intersects_semidecide(s, nu_encode(interval(R("0"), R("1"))), nu_encode(interval(R("2"), R("3"))),
                                     1000000));
  EXPECT_EQ(intersects_semidecide(s, u, u, 1), u);
  EXPECT_THROW(intersects_semidecide(s, Name("0101"), u, 1), Error);
}

TEST(SubBall, DyadicLevelsCoverTheBall) {
  BasicOpen g = interval(R("0"), R("1"));
  EXPECT_EQ(sub_ball(g, 0), g);
  EXPECT_EQ(sub_ball(g, 1), interval(R("0"), R("1/2")));
  EXPECT_EQ(sub_ball(g, 2), interval(R("1/4"), R("3/4")));
  EXPECT_EQ(sub_ball(g, 3), interval(R("1/2"), R("1")));
  EXPECT_EQ(canonical_refinement(g), sub_ball(g, 1));
  for (std::size_t i = 0; i < 200; ++i) EXPECT_TRUE(subset(sub_ball(g, i), g));
  BasicOpen box = ball(Point{R("0"), R("0")}, R("1"));
  for (std::size_t i = 0; i < 100; ++i) EXPECT_TRUE(subset(sub_ball(box, i), box));
  BasicOpen a = arc(R("9/10"), R("1/4"));
  for (std::size_t i = 0; i < 100; ++i) EXPECT_TRUE(subset(sub_ball(a, i), a));
}

TEST(ClosedHalfBall, StrictlyInside) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 100; ++i) {
    BasicOpen u = oracle::random_ball(rng, Space::euclidean(2));
    EXPECT_TRUE(closure_strictly_inside(closed_half_ball(u), u));
  }
}
