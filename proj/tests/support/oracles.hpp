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

// Independent reference computations used by the tests. Nothing here calls
// into the crossing tables; the oracles work from coordinates, interval
// interleaving or explicit maps.

#ifndef SEPDRAW_TESTS_ORACLES_HPP_
#define SEPDRAW_TESTS_ORACLES_HPP_

#include <random>
#include <set>
#include <string>
#include <vector>

#include "sepdraw/combinatorial_map.hpp"
#include "sepdraw/extension.hpp"
#include "sepdraw/realizability.hpp"
#include "sepdraw/rotation_system.hpp"
#include "sepdraw/small_tables.hpp"
#include "sepdraw/two_page.hpp"

namespace sepdraw::testing {

struct Point {
  long x = 0;
  long y = 0;
};

// Straight-line drawing of K_n on points in general position. Rotations
// are listed counter-clockwise in y-up coordinates, the library's
// clockwise convention.
RotationSystem point_rotation_system(const std::vector<Point>& pts);
CrossingPairSet point_crossings(const std::vector<Point>& pts);

std::vector<Point> convex_points(int n);

// Chords of a circle labeled 1..n in circular order.
CrossingPairSet circle_crossings(int n);

// Half-circle drawing: two chords cross iff they share a page and their
// intervals interleave.
CrossingPairSet two_page_crossings(const TwoPageDrawing& d);

// All crossing pairs among a set of edges, given the full pair set.
bool crossing_free(const CrossingPairSet& pairs, const std::vector<Edge>& es);

// Every labeled rotation system of K_n (n <= 5).
std::vector<RotationSystem> all_rotation_systems(int n);

// Every relabeling and reflection of rs, with repeats.
std::vector<RotationSystem> orbit_members(const RotationSystem& rs);
// The orbit as distinct normalized strings.
std::set<std::string> orbit(const RotationSystem& rs);
std::string normalized_text(const RotationSystem& rs);

// Labeled K6 rotation systems all of whose 5-vertex subsystems are in k5,
// built by inserting vertex 6 into every realizable labeled K5 system.
std::vector<RotationSystem> five_tuple_closure_k6(
    const RealizabilityTables& tables);

// Exhaustive dual-path router: lexicographic minimum of (counted
// crossings, all crossings) over face-simple dual paths from a corner of u
// to a corner of v.
struct BruteCost {
  long primary = -1;
  long total = -1;
};
BruteCost brute_force_route(const CombinatorialMap& map, Vertex u, Vertex v,
                            RoutingMetric metric);

// Edges of K_n in no crossing pair of the map.
std::set<Edge> uncrossed_edges(const CombinatorialMap& map, int n);

// Largest size guaranteed by the matching recursion on m vertices: one
// edge plus the worst split of the remaining m - 2 vertices.
std::vector<int> matching_recursion_bound(int up_to);

// Separable corpus: enumerated drawings for n <= max_n plus seeded 2-page
// drawings.
struct CorpusItem {
  std::string name;
  RotationSystem rs;
  CrossingPairSet crossings;  // from the explicit drawing
};
std::vector<CorpusItem> enumerated_corpus(int max_n);
std::vector<CorpusItem> two_page_corpus(int count, std::uint64_t seed);

}  // namespace sepdraw::testing

#endif  // SEPDRAW_TESTS_ORACLES_HPP_
