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

#ifndef SEPDRAW_PLANE_HAMILTONICITY_HPP_
#define SEPDRAW_PLANE_HAMILTONICITY_HPP_

#include <vector>

#include "sepdraw/realizability.hpp"
#include "sepdraw/rotation_system.hpp"

namespace sepdraw {

struct PlanePath {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges() const;
};

// Cyclic vertex sequence; edges() includes the closing edge.
struct PlaneCycle {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges() const;
};

struct PlaneMatching {
  std::vector<Edge> edges;  // ascending
};

// Crossing-free Hamiltonian path from v to w, built by splitting along
// separator edges {v,v'} (smallest v' != w first). Throws
// NoSeparatorEdgeError naming the vertex set where no split exists.
PlanePath ham_path(const RealizabilityTables& tables, const RotationSystem& rs,
                   Vertex v, Vertex w);

// Crossing-free Hamiltonian cycle glued from paths on both sides of the
// first separator edge. Needs n >= 3.
PlaneCycle ham_cycle(const RealizabilityTables& tables,
                     const RotationSystem& rs);

// Separator edge plus recursion on both sides minus its endpoints.
PlaneMatching plane_matching(const RealizabilityTables& tables,
                             const RotationSystem& rs);

// No two of the edges form a crossing pair.
bool verify_crossing_free(const RealizabilityTables& tables,
                          const RotationSystem& rs,
                          const std::vector<Edge>& edges);

}  // namespace sepdraw

#endif  // SEPDRAW_PLANE_HAMILTONICITY_HPP_
