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

#ifndef SEPDRAW_EXTENSION_HPP_
#define SEPDRAW_EXTENSION_HPP_

#include <compare>
#include <functional>
#include <vector>

#include "sepdraw/combinatorial_map.hpp"

namespace sepdraw {

// Crossings of one inserted curve, by the kind of curve crossed.
struct InsertionCost {
  int witness_set = 0;   // witness arcs plus the edges they close
  int witness_arcs = 0;
  int graph_edges = 0;   // edges of the input drawing
  int inserted = 0;      // previously inserted edges
  int total() const { return witness_arcs + graph_edges + inserted; }
};

struct InsertionResult {
  CombinatorialMap map;
  CurveId curve = -1;
  InsertionCost cost;
};

enum class RoutingMetric {
  kWitnessSet,  // crossing a witness arc or an edge of the input costs 1
  kCrossings,   // crossing an edge of the input costs 1
};

// Cheapest dual path from a corner of u to a corner of v: primary cost per
// the metric, then fewest crossings, then the lexicographically smallest
// face sequence. Crossing inserted curves is free for the primary cost.
Route min_cost_route(const CombinatorialMap& map, Vertex u, Vertex v,
                     RoutingMetric metric);

// Crossings of a route by kind of curve crossed.
InsertionCost route_cost(const CombinatorialMap& map, const Route& route);

// Inserts {u,v} with the fewest crossings with the witness set. Needs a
// witness for every edge. Throws InvariantError if the new edge meets an
// edge of the input twice.
InsertionResult insert_min_witness_crossings(const CombinatorialMap& map,
                                             Vertex u, Vertex v);

// Inserts {u,v} with the fewest crossings with edges of the input; witness
// curves are dropped first. Throws NotSimpleError if the new edge meets an
// edge of the input twice.
InsertionResult insert_min_crossings(const CombinatorialMap& map, Vertex u,
                                     Vertex v);

// (crossings of inserted edges with the routing metric's curves, all
// crossings), compared lexicographically.
struct Potential {
  long primary = 0;
  long secondary = 0;
  friend auto operator<=>(const Potential&, const Potential&) = default;
};

struct ExtensionReport {
  CombinatorialMap map;              // complete graph, witnesses removed
  std::vector<Potential> potentials;  // after insertion, then every move
  int inserted = 0;
  int exchanges = 0;
  int loop_removals = 0;
};

using PotentialLog = std::function<void(const Potential&, const char* move)>;

// Inserts every missing edge with the fewest witness-set crossings, then
// exchanges pieces of inserted edges between consecutive common points
// until the drawing is simple. Input: a valid map with labels 1..n and a
// valid witness for every edge.
ExtensionReport extend_to_complete_separable(const CombinatorialMap& map,
                                             const PotentialLog& log = {});

// Same with the crossing metric. The input should be crossing-minimizing;
// this is not checked, but a non-simple result raises NotSimpleError.
ExtensionReport extend_to_complete_crossmin(const CombinatorialMap& map,
                                            const PotentialLog& log = {});

}  // namespace sepdraw

#endif  // SEPDRAW_EXTENSION_HPP_
