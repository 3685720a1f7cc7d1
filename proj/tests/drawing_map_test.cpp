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
#include <queue>
#include <random>

#include "oracles.hpp"
#include "sepdraw/errors.hpp"
#include "sepdraw/separability.hpp"
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

bool dual_connected(const CombinatorialMap& m) {
  DualGraph g = dual(m);
  std::vector<std::vector<FaceId>> adj(g.node_count);
  for (const auto& a : g.arcs) adj[a.from].push_back(a.to);
  std::vector<bool> seen(g.node_count, false);
  std::queue<FaceId> q;
  q.push(0);
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    FaceId f = q.front();
    q.pop();
    for (FaceId h : adj[f]) {
      if (!seen[h]) {
        seen[h] = true;
        ++count;
        q.push(h);
      }
    }
  }
  return count == g.node_count;
}

// Edges {1,2} and {3,4} crossing twice.
const char* kDoubleCrossing =
    "cmap v1\n"
    "real 4\n"
    "vertex 0 real 1 : 0\n"
    "vertex 1 real 2 : 5\n"
    "vertex 2 real 3 : 6\n"
    "vertex 3 real 4 : 11\n"
    "vertex 4 cross : 2 7 1 8\n"
    "vertex 5 cross : 4 10 3 9\n"
    "segment 0 1 curve 0 idx 0\n"
    "segment 2 3 curve 0 idx 1\n"
    "segment 4 5 curve 0 idx 2\n"
    "segment 6 7 curve 1 idx 0\n"
    "segment 8 9 curve 1 idx 1\n"
    "segment 10 11 curve 1 idx 2\n"
    "curve 0 edge 1-2\n"
    "curve 1 edge 3-4\n";

TEST(ValidateMap, Triangle) {
  CombinatorialMap k3 = from_convex(3);
  EXPECT_TRUE(validate_map(k3).empty());
  EXPECT_EQ(k3.face_count(), 2);
  EXPECT_EQ(cross_nodes(k3), 0);
  DualGraph g = dual(k3);
  EXPECT_EQ(g.node_count, 2);
  EXPECT_EQ(g.arcs.size(), 6u);
  for (const auto& a : g.arcs) EXPECT_NE(a.from, a.to);
}

TEST(ValidateMap, ConvexK4) {
  CombinatorialMap k4 = from_convex(4);
  EXPECT_TRUE(validate_map(k4).empty());
  EXPECT_EQ(cross_nodes(k4), 1);
  EXPECT_EQ(k4.node_count(), 5);
  EXPECT_EQ(k4.segment_count(), 8);
  EXPECT_EQ(k4.face_count(), 5);
  EXPECT_EQ(faces(k4).size(), 5u);
}

TEST(ValidateMap, DoubleCrossingIsNotSimple) {
  CombinatorialMap m = parse_cmap(kDoubleCrossing);
  auto v = validate_map(m);
  ASSERT_FALSE(v.empty());
  EXPECT_TRUE(std::any_of(v.begin(), v.end(), [](const Violation& x) {
    return x.code == "simplicity";
  }));
}

TEST(ValidateMap, BrokenRotationRejected) {
  std::string text = serialize_cmap(from_convex(4));
  // Make the crossing non-alternating.
  auto at = text.find("vertex 4 cross : 4 12 3 11");
  ASSERT_NE(at, std::string::npos);
  text.replace(at, 26, "vertex 4 cross : 4 3 12 11");
  bool rejected = false;
  try {
    rejected = !validate_map(parse_cmap(text)).empty();
  } catch (const InputError&) {
    rejected = true;
  }
  EXPECT_TRUE(rejected);
  EXPECT_THROW(parse_cmap("cmap v2\n"), InputError);
  EXPECT_THROW(parse_cmap("cmap v1\nreal 1\nvertex 0 real 1 : 0\n"), InputError);
}

TEST(FromTwoPage, AllUpperK4) {
  TwoPageDrawing d = convex_two_page(4);
  CombinatorialMap m = from_two_page(d, true);
  EXPECT_TRUE(validate_map(m).empty());
  EXPECT_EQ(map_crossing_pairs(m),
            (CrossingPairSet{CrossingPair(Edge(1, 3), Edge(2, 4))}));
  for (const auto& c : m.curves()) {
    if (c.kind == CurveKind::kEdge) {
      EXPECT_TRUE(validate_witness(m, c.edge()));
    }
  }
  EXPECT_TRUE(dual_connected(from_two_page(d, false)));
}

TEST(FromTwoPage, SingleEdge) {
  TwoPageDrawing d{{1, 2}, {Edge(1, 2)}, {Page::kUpper}};
  CombinatorialMap m = from_two_page(d, true);
  EXPECT_TRUE(validate_map(m).empty());
  EXPECT_TRUE(validate_witness(m, Edge(1, 2)));
  EXPECT_EQ(cross_nodes(m), 0);
}

TEST(FromTwoPage, AlternatingPagesK5) {
  TwoPageDrawing d;
  d.order = {1, 2, 3, 4, 5};
  for (Vertex a = 1; a <= 5; ++a)
    for (Vertex b = a + 1; b <= 5; ++b) {
      d.edges.emplace_back(a, b);
      d.pages.push_back((b - a) % 2 ? Page::kUpper : Page::kLower);
    }
  CombinatorialMap m = from_two_page(d, true);
  EXPECT_TRUE(validate_map(m).empty());
  for (const Edge& e : d.edges) EXPECT_TRUE(validate_witness(m, e));
  EXPECT_EQ(map_crossing_pairs(strip_witnesses(m)),
            testing::two_page_crossings(d));
}

TEST(FromTwoPage, RejectsBadInput) {
  TwoPageDrawing dup{{1, 2, 3}, {Edge(1, 2), Edge(1, 2)},
                     {Page::kUpper, Page::kLower}};
  EXPECT_THROW(from_two_page(dup), InputError);
  TwoPageDrawing order{{1, 1, 3}, {Edge(1, 3)}, {Page::kUpper}};
  EXPECT_THROW(from_two_page(order), InputError);
}

TEST(ExtractRotationSystem, Examples) {
  EXPECT_EQ(extract_rotation_system(from_convex(5)), convex_rotation_system(5));
  TwoPageDrawing d = convex_two_page(5);
  d.order = {3, 1, 4, 2, 5};
  EXPECT_EQ(extract_rotation_system(from_two_page(d, false)),
            convex_rotation_system(5).relabeled(d.order));
  CombinatorialMap partial = from_two_page(
      TwoPageDrawing{{1, 2, 3}, {Edge(1, 2)}, {Page::kUpper}}, false);
  EXPECT_THROW(extract_rotation_system(partial), InputError);
}

TEST(Maps, SerializationRoundTrip) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + trial % 5;
    CombinatorialMap m = from_two_page(random_two_page_partial(n, 2, rng));
    const std::string s = serialize_cmap(m);
    EXPECT_EQ(serialize_cmap(parse_cmap(s)), s);
  }
  for (const auto& d : enumerate_good_drawings(5)) {
    const std::string s = serialize_cmap(d.map);
    EXPECT_EQ(serialize_cmap(parse_cmap(s)), s);
  }
}

TEST(Maps, CrossingsMatchRotationSystem) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    TwoPageDrawing d = random_two_page_complete(4 + trial % 6, rng);
    CombinatorialMap m = from_two_page(d, true);
    EXPECT_TRUE(validate_map(m).empty());
    CombinatorialMap bare = strip_witnesses(m);
    EXPECT_EQ(map_crossing_pairs(bare), testing::two_page_crossings(d));
    EXPECT_EQ(map_crossing_pairs(bare),
              crossing_pairs(T(), extract_rotation_system(bare)));
  }
}

TEST(Witness, UncrossedEdgeGetsAWitness) {
  CombinatorialMap m = from_convex(6);
  auto arc = find_witness(m, Edge(1, 2));
  ASSERT_TRUE(arc);
  CombinatorialMap with = add_witness(m, Edge(1, 2), *arc);
  EXPECT_TRUE(validate_witness(with, Edge(1, 2)));
  EXPECT_TRUE(validate_map(with).empty());
}

TEST(Witness, TwoPageEdgesAlwaysHaveOne) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    TwoPageDrawing d = random_two_page_complete(4 + trial % 5, rng);
    CombinatorialMap m = from_two_page(d, false);
    for (const Edge& e : d.edges) {
      auto arc = find_witness(m, e);
      ASSERT_TRUE(arc) << to_string(e);
      std::string why;
      EXPECT_TRUE(validate_witness(add_witness(m, e, *arc), e, &why)) << why;
    }
  }
}

TEST(Witness, SearchAgreesWithFlipRecognition) {
  int negatives = 0;
  for (int n = 4; n <= 6; ++n) {
    for (const auto& d : enumerate_good_drawings(n)) {
      for (Vertex a = 1; a <= n; ++a)
        for (Vertex b = a + 1; b <= n; ++b) {
          const Edge e(a, b);
          auto arc = find_witness(d.map, e);
          const bool flip = is_separator_edge(T(), d.rs, e).has_value();
          EXPECT_EQ(arc.has_value(), flip) << to_string(e);
          if (arc) {
            EXPECT_TRUE(validate_witness(add_witness(d.map, e, *arc), e));
          } else {
            ++negatives;
          }
        }
    }
  }
  // Non-separator edges exist among the K6 drawings.
  EXPECT_GT(negatives, 0);
}

// Faces on each side of the closed curve formed by e and its witness.
std::vector<int> side_coloring(const CombinatorialMap& m, const Edge& e) {
  CurveId ce = m.find_curve(CurveKind::kEdge, e);
  CurveId cw = m.find_curve(CurveKind::kWitness, e);
  DualGraph g = dual(m);
  std::vector<int> color(g.node_count, -1);
  std::vector<std::vector<std::pair<FaceId, int>>> adj(g.node_count);
  for (const auto& a : g.arcs) {
    int flip = (a.curve == ce || a.curve == cw) ? 1 : 0;
    adj[a.from].push_back({a.to, flip});
  }
  color[0] = 0;
  std::queue<FaceId> q;
  q.push(0);
  while (!q.empty()) {
    FaceId f = q.front();
    q.pop();
    for (auto [h, flip] : adj[f]) {
      if (color[h] < 0) {
        color[h] = color[f] ^ flip;
        q.push(h);
      } else {
        EXPECT_EQ(color[h], color[f] ^ flip);
      }
    }
  }
  return color;
}

TEST(Witness, SeparatesTheSides) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    TwoPageDrawing d = random_two_page_complete(5 + trial % 4, rng);
    CombinatorialMap m = from_two_page(d, true);
    for (const Edge& e : d.edges) {
      auto color = side_coloring(m, e);
      auto vertex_side = [&](Vertex x) {
        return color[m.face_of(m.node(m.real_node(x)).rotation[0])];
      };
      for (CurveId c = 0; c < m.curve_count(); ++c) {
        const MapCurve& f = m.curve(c);
        if (f.kind != CurveKind::kEdge || f.edge().shares_vertex(e)) continue;
        if (vertex_side(f.u) != vertex_side(f.v)) continue;
        for (DartId x : m.curve_darts(c)) {
          EXPECT_EQ(color[m.face_of(x)], vertex_side(f.u));
          EXPECT_EQ(color[m.face_of(m.twin(x))], vertex_side(f.u));
        }
      }
    }
  }
}

}  // namespace
}  // namespace sepdraw
