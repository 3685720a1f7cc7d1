// Copyright 2026 The sepdraw Authors.
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

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "sepdraw/separability.hpp"

namespace sepdraw {
namespace {

using Vs = std::vector<Vertex>;

const RealizabilityTables& T() { return default_tables(); }

const std::vector<testing::CorpusItem>& corpus() {
  static const auto c = testing::enumerated_corpus(6);
  return c;
}

RotationSystem fig6b() {
  return RotationSystem({{2, 4, 5, 3}, {3, 5, 1, 4}, {4, 5, 2, 1},
                         {5, 1, 3, 2}, {1, 2, 3, 4}});
}

std::vector<Edge> all_edges(int n) {
  std::vector<Edge> out;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b) out.emplace_back(a, b);
  return out;
}

TEST(FlipCandidates, ConvexK7) {
  RotationSystem k7 = convex_rotation_system(7);
  auto c = flip_candidates(k7, Edge(2, 6));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].swept, (Vs{1, 7}));
  // Sweeping the other arc {3,4,5} yields the same cyclic rotations.
  RotationSystem flipped = apply_flip(k7, c[0]);
  EXPECT_EQ(flipped.with_rotation(6, {7, 1, 3, 4, 5, 2}), flipped);
  EXPECT_EQ(flipped.with_rotation(2, {6, 3, 4, 5, 7, 1}), flipped);
  // The last candidate goes all the way round.
  EXPECT_EQ(c[1].swept, (Vs{1, 3, 4, 5, 7}));
  EXPECT_EQ(apply_flip(k7, c[1]), k7);
}

TEST(FlipCandidates, HullEdgeAndTriangle) {
  for (int n = 3; n <= 8; ++n) {
    auto c = flip_candidates(convex_rotation_system(n), Edge(1, 2));
    ASSERT_EQ(c.size(), 1u);
    Vs rest;
    for (Vertex x = 3; x <= n; ++x) rest.push_back(x);
    EXPECT_EQ(c[0].swept, rest);
  }
}

TEST(ValidFlips, ConvexK7Edge26) {
  RotationSystem k7 = convex_rotation_system(7);
  auto flips = valid_flips(T(), k7, Edge(2, 6));
  ASSERT_EQ(flips.size(), 1u);
  EXPECT_EQ(flips[0].swept, (Vs{1, 7}));
  // Old and new positions cross disjoint edge sets.
  auto before = edges_crossing(T(), k7, Edge(2, 6));
  auto after = edges_crossing(T(), flips[0].new_rs, Edge(2, 6));
  EXPECT_EQ(before.size(), 6u);
  for (const Edge& f : after) {
    EXPECT_EQ(std::count(before.begin(), before.end(), f), 0);
  }
  EXPECT_TRUE(std::count(before.begin(), before.end(), Edge(3, 7)));
}

TEST(ValidFlips, ConvexK4Diagonal) {
  RotationSystem k4 = convex_rotation_system(4);
  auto flips = valid_flips(T(), k4, Edge(1, 3));
  ASSERT_FALSE(flips.empty());
  EXPECT_TRUE(flips[0].swept == Vs{2} || flips[0].swept == Vs{4});
  EXPECT_TRUE(is_uncrossed(T(), flips[0].new_rs, Edge(1, 3)));
}

TEST(SeparatorEdge, Examples) {
  auto hull = is_separator_edge(T(), convex_rotation_system(9), Edge(1, 2));
  ASSERT_TRUE(hull);
  EXPECT_EQ(hull->kind, SeparatorKind::kUncrossed);
  auto diag = is_separator_edge(T(), convex_rotation_system(7), Edge(2, 6));
  ASSERT_TRUE(diag);
  ASSERT_EQ(diag->kind, SeparatorKind::kFlip);
  EXPECT_EQ(diag->flip->swept, (Vs{1, 7}));
}

TEST(IsSeparable, Examples) {
  EXPECT_TRUE(is_separable(T(), convex_rotation_system(3)).separable);
  auto r = is_separable(T(), fig6b());
  EXPECT_TRUE(r.separable);
  EXPECT_EQ(r.certificate.size(), 10u);
  EXPECT_TRUE(r.failing.empty());
  for (const auto& item : testing::two_page_corpus(80, 2)) {
    EXPECT_TRUE(is_separable(T(), item.rs).separable) << item.name;
  }
}

TEST(IsSeparable, CertificateCoversSeparatorEdges) {
  for (const auto& item : corpus()) {
    auto r = is_separable(T(), item.rs);
    const int m = item.rs.size() * (item.rs.size() - 1) / 2;
    EXPECT_EQ(static_cast<int>(r.certificate.size() + r.failing.size()), m);
    EXPECT_EQ(r.separable, r.failing.empty());
    for (const auto& ev : r.certificate) {
      bool uncrossed = true;
      for (const auto& p : item.crossings) {
        if (p.first == ev.edge || p.second == ev.edge) uncrossed = false;
      }
      EXPECT_EQ(ev.kind == SeparatorKind::kUncrossed, uncrossed);
    }
  }
}

TEST(SidePartition, Examples) {
  RotationSystem k7 = convex_rotation_system(7);
  auto flips = valid_flips(T(), k7, Edge(2, 6));
  auto [v1, v2] = side_partition(k7, flips[0]);
  EXPECT_EQ(v1, (Vs{1, 2, 6, 7}));
  EXPECT_EQ(v2, (Vs{2, 3, 4, 5, 6}));

  SeparatorEvidence unc{Edge(1, 2), SeparatorKind::kUncrossed, std::nullopt};
  auto [u1, u2] = side_partition(k7, unc);
  EXPECT_EQ(u1, (Vs{1, 2}));
  EXPECT_EQ(u2, (Vs{1, 2, 3, 4, 5, 6, 7}));

  RotationSystem k3 = convex_rotation_system(3);
  auto c = flip_candidates(k3, Edge(1, 2));
  Flip f{Edge(1, 2), c[0].v, c[0].w, c[0].swept, apply_flip(k3, c[0])};
  auto [t1, t2] = side_partition(k3, f);
  EXPECT_EQ(t1, (Vs{1, 2, 3}));
  EXPECT_EQ(t2, (Vs{1, 2}));
}

TEST(Invariants, SeparationAndCrossingPreservation) {
  for (const auto& item : corpus()) {
    const RotationSystem& rs = item.rs;
    for (const Edge& e : all_edges(rs.size())) {
      for (const Flip& f : valid_flips(T(), rs, e)) {
        auto [v1, v2] = side_partition(rs, f);
        auto in = [](const Vs& s, const Edge& g) {
          return std::binary_search(s.begin(), s.end(), g.a) &&
                 std::binary_search(s.begin(), s.end(), g.b);
        };
        for (const auto& p : item.crossings) {
          if (p.first == e || p.second == e) continue;
          EXPECT_FALSE(in(v1, p.first) && in(v2, p.second));
          EXPECT_FALSE(in(v2, p.first) && in(v1, p.second));
        }
        CrossingPairSet before, after;
        for (const auto& p : item.crossings) {
          if (p.first != e && p.second != e) before.insert(p);
        }
        for (const auto& p : crossing_pairs(T(), f.new_rs)) {
          if (p.first != e && p.second != e) after.insert(p);
        }
        EXPECT_EQ(before, after) << item.name << " " << to_string(e);
      }
    }
  }
}

TEST(Invariants, RelabelMirrorAndSubsets) {
  std::mt19937_64 rng(8);
  for (const auto& item : corpus()) {
    const int n = item.rs.size();
    const bool sep = is_separable(T(), item.rs).separable;
    Vs perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(is_separable(T(), item.rs.relabeled(perm)).separable, sep);
    EXPECT_EQ(is_separable(T(), item.rs.mirrored()).separable, sep);
    if (!sep) continue;
    for (int trial = 0; trial < 3; ++trial) {
      Vs sub;
      for (Vertex v = 1; v <= n; ++v) {
        if (rng() % 3 != 0) sub.push_back(v);
      }
      if (sub.empty()) continue;
      EXPECT_TRUE(is_separable(T(), subrotation(item.rs, sub)).separable);
    }
  }
}

TEST(Invariants, GConvexImpliesSeparable) {
  int gconvex = 0;
  for (const auto& item : corpus()) {
    if (!is_g_convex(T(), item.rs)) continue;
    ++gconvex;
    EXPECT_TRUE(is_separable(T(), item.rs).separable) << item.name;
  }
  EXPECT_GT(gconvex, 0);
  EXPECT_FALSE(is_g_convex(T(), fig6b()));
}

TEST(Relaxations, DegreesAndAnyEdge) {
  auto deg = separator_degrees(T(), convex_rotation_system(8));
  ASSERT_EQ(deg.size(), 8u);
  for (int d : deg) EXPECT_EQ(d, 7);
  auto any = find_any_separator_edge(T(), convex_rotation_system(8));
  ASSERT_TRUE(any);
  EXPECT_EQ(any->edge, Edge(1, 2));
  int non_separable = 0;
  for (const auto& item : corpus()) {
    auto r = is_separable(T(), item.rs);
    non_separable += !r.separable;
    auto d = separator_degrees(T(), item.rs);
    int total = 0;
    for (int x : d) total += x;
    EXPECT_EQ(total, 2 * static_cast<int>(r.certificate.size()));
  }
  std::cout << non_separable << " of " << corpus().size()
            << " enumerated drawings are not separable\n";
}

}  // namespace
}  // namespace sepdraw
