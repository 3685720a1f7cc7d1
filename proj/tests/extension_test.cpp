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

#include <random>

#include "oracles.hpp"
#include "sepdraw/errors.hpp"
#include "sepdraw/extension.hpp"
#include "sepdraw/witness.hpp"

namespace sepdraw {
namespace {

const RealizabilityTables& T() { return default_tables(); }

int cross_nodes(const CombinatorialMap& m) {
  int c = 0;
  for (NodeId x = 0; x < m.node_count(); ++x) {
    c += m.node(x).kind == NodeKind::kCross;
  }
  return c;
}

void expect_complete_simple(const CombinatorialMap& m, int n) {
  EXPECT_TRUE(validate_map(m).empty());
  RotationSystem rs = extract_rotation_system(m);
  EXPECT_EQ(rs.size(), n);
  EXPECT_EQ(map_crossing_pairs(m), crossing_pairs(T(), rs));
}

void expect_decreasing(const ExtensionReport& r) {
  for (std::size_t i = 1; i < r.potentials.size(); ++i) {
    EXPECT_LT(r.potentials[i], r.potentials[i - 1]);
  }
  EXPECT_EQ(r.potentials.size(),
            1u + static_cast<std::size_t>(r.exchanges + r.loop_removals));
}

std::vector<Edge> missing_edges(const CombinatorialMap& m, int n) {
  std::vector<Edge> out;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b) {
      if (m.find_graph_edge(Edge(a, b)) < 0) out.emplace_back(a, b);
    }
  return out;
}

CombinatorialMap without_edge(const CombinatorialMap& m, const Edge& e) {
  return remove_curve(m, m.find_graph_edge(e));
}

TEST(InsertMinWitness, TwoPageK4MinusDiagonal) {
  TwoPageDrawing d = convex_two_page(4);
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    if (d.edges[i] == Edge(1, 3)) {
      d.edges.erase(d.edges.begin() + i);
      d.pages.erase(d.pages.begin() + i);
      break;
    }
  }
  InsertionResult r = insert_min_witness_crossings(from_two_page(d, true), 1, 3);
  EXPECT_TRUE(validate_map(strip_witnesses(r.map)).empty());
  EXPECT_EQ(r.map.curve(r.curve).edge(), Edge(1, 3));
}

TEST(InsertMinWitness, FreeFaceCostsNothing) {
  TwoPageDrawing d{{1, 2, 3}, {Edge(1, 2), Edge(2, 3)},
                   {Page::kUpper, Page::kUpper}};
  InsertionResult r = insert_min_witness_crossings(from_two_page(d, true), 1, 3);
  EXPECT_EQ(r.cost.witness_set, 0);
  EXPECT_EQ(r.cost.total(), 0);
}

TEST(InsertMinWitness, PathChord) {
  TwoPageDrawing d{{1, 2, 3, 4, 5},
                   {Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 5)},
                   {Page::kUpper, Page::kUpper, Page::kUpper, Page::kUpper}};
  CombinatorialMap m = from_two_page(d, true);
  for (const Edge& e : {Edge(1, 5), Edge(2, 4), Edge(1, 3)}) {
    InsertionResult r = insert_min_witness_crossings(m, e.a, e.b);
    EXPECT_TRUE(validate_map(strip_witnesses(r.map)).empty());
  }
}

TEST(InsertMinWitness, Errors) {
  TwoPageDrawing d{{1, 2, 3}, {Edge(1, 2), Edge(2, 3)},
                   {Page::kUpper, Page::kUpper}};
  CombinatorialMap m = from_two_page(d, true);
  EXPECT_THROW(insert_min_witness_crossings(m, 1, 1), InputError);
  EXPECT_THROW(insert_min_witness_crossings(m, 1, 2), InputError);
  EXPECT_THROW(insert_min_witness_crossings(from_two_page(d, false), 1, 3),
               InputError);
}

TEST(InsertMinWitness, SharesAtMostOnePointWithOldEdges) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5 + trial % 4;
    CombinatorialMap m = from_two_page(random_two_page_partial(n, n, rng));
    for (const Edge& e : missing_edges(m, n)) {
      InsertionResult r = insert_min_witness_crossings(m, e.a, e.b);
      for (CurveId c = 0; c < r.map.curve_count(); ++c) {
        if (r.map.curve(c).kind != CurveKind::kEdge) continue;
        EXPECT_LE(common_points(r.map, r.curve, c), 1);
      }
    }
  }
}

TEST(InsertMinCrossings, PlanarTree) {
  TwoPageDrawing star{{1, 2, 3, 4, 5},
                      {Edge(1, 2), Edge(1, 3), Edge(1, 4), Edge(4, 5)},
                      {Page::kUpper, Page::kUpper, Page::kLower, Page::kUpper}};
  CombinatorialMap m = from_two_page(star, false);
  for (const Edge& e : missing_edges(m, 5)) {
    InsertionResult r = insert_min_crossings(m, e.a, e.b);
    EXPECT_EQ(r.cost.total(), 0) << to_string(e);
  }
}

TEST(InsertMinCrossings, PlanarK4) {
  RotationSystem planar = testing::point_rotation_system(
      {{0, 0}, {100, 0}, {50, 100}, {50, 30}});
  ASSERT_TRUE(crossing_pairs(T(), planar).empty());
  CombinatorialMap m = without_edge(realize(T(), planar), Edge(1, 3));
  InsertionResult r = insert_min_crossings(m, 1, 3);
  EXPECT_EQ(r.cost.graph_edges, 0);
  EXPECT_EQ(cross_nodes(r.map), 0);
}

TEST(InsertMinCrossings, ConvexK5MatchesBruteForce) {
  for (const Edge& e : {Edge(1, 3), Edge(2, 5), Edge(1, 2)}) {
    CombinatorialMap m = without_edge(from_convex(5), e);
    InsertionResult r = insert_min_crossings(m, e.a, e.b);
    auto brute =
        testing::brute_force_route(m, e.a, e.b, RoutingMetric::kCrossings);
    EXPECT_EQ(r.cost.graph_edges, brute.primary);
    EXPECT_EQ(r.cost.total(), brute.total);
    EXPECT_TRUE(validate_map(r.map).empty());
  }
}

TEST(Router, MatchesBruteForceOnSmallMaps) {
  std::mt19937_64 rng(23);
  int checked = 0;
  while (checked < 60) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const bool witnesses = rng() % 2;
    CombinatorialMap m =
        witnesses ? from_two_page(random_two_page_partial(n, 2, rng))
                  : from_two_page(random_plane_two_page(n, rng), false);
    if (m.face_count() > 12) continue;
    auto missing = missing_edges(m, n);
    if (missing.empty()) continue;
    const Edge e = missing[rng() % missing.size()];
    ++checked;
    if (witnesses) {
      auto r = insert_min_witness_crossings(m, e.a, e.b);
      auto b = testing::brute_force_route(m, e.a, e.b,
                                          RoutingMetric::kWitnessSet);
      EXPECT_EQ(r.cost.witness_set, b.primary);
      EXPECT_EQ(r.cost.total(), b.total);
    }
    CombinatorialMap bare = strip_witnesses(m);
    auto r = insert_min_crossings(m, e.a, e.b);
    auto b = testing::brute_force_route(bare, e.a, e.b,
                                        RoutingMetric::kCrossings);
    EXPECT_EQ(r.cost.graph_edges, b.primary);
    EXPECT_EQ(r.cost.total(), b.total);
  }
}

TEST(ExtendSeparable, RandomTwoPageK7) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    CombinatorialMap m = from_two_page(random_two_page_partial(7, 5, rng));
    ExtensionReport r = extend_to_complete_separable(m);
    EXPECT_EQ(r.inserted, 5);
    expect_complete_simple(r.map, 7);
    expect_decreasing(r);
  }
}

TEST(ExtendSeparable, CompleteInputIsIdentity) {
  CombinatorialMap m = from_two_page(convex_two_page(6), true);
  ExtensionReport r = extend_to_complete_separable(m);
  EXPECT_EQ(r.inserted, 0);
  EXPECT_EQ(serialize_cmap(r.map), serialize_cmap(strip_witnesses(m)));
}

TEST(ExtendSeparable, NeedsWitnesses) {
  std::mt19937_64 rng(2);
  CombinatorialMap m =
      from_two_page(random_two_page_partial(6, 3, rng), false);
  EXPECT_THROW(extend_to_complete_separable(m), InputError);
}

TEST(ExtendCrossmin, PlanarInputs) {
  std::mt19937_64 rng(19);
  int exchanges = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 4 + trial % 5;
    CombinatorialMap m = from_two_page(random_plane_two_page(n, rng), false);
    ExtensionReport r = extend_to_complete_crossmin(m);
    expect_complete_simple(r.map, n);
    expect_decreasing(r);
    exchanges += r.exchanges;
  }
  // The fix-up loop is exercised, not just the router.
  EXPECT_GT(exchanges, 0);
}

TEST(ExtendCrossmin, CompleteInputIsIdentity) {
  CombinatorialMap m = from_convex(6);
  ExtensionReport r = extend_to_complete_crossmin(m);
  EXPECT_EQ(r.inserted, 0);
  EXPECT_EQ(serialize_cmap(r.map), serialize_cmap(m));
}

TEST(ExtendCrossmin, LogsEveryPotential) {
  std::mt19937_64 rng(1);
  std::vector<Potential> seen;
  for (int trial = 0; trial < 40; ++trial) {
    CombinatorialMap m = from_two_page(random_plane_two_page(8, rng), false);
    seen.clear();
    ExtensionReport r = extend_to_complete_crossmin(
        m, [&](const Potential& p, const char*) { seen.push_back(p); });
    EXPECT_EQ(seen, r.potentials);
  }
}

}  // namespace
}  // namespace sepdraw
