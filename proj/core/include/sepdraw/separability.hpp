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

#ifndef SEPDRAW_SEPARABILITY_HPP_
#define SEPDRAW_SEPARABILITY_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "sepdraw/realizability.hpp"
#include "sepdraw/rotation_system.hpp"

namespace sepdraw {

// A repositioning of edge {v,w} (v the larger label): w moves
// counter-clockwise around v to just after `after_v`, and v moves clockwise
// around w to just after `after_w`. Both moves pass the same vertex set.
struct FlipCandidate {
  Edge edge;
  Vertex v = 0;
  Vertex w = 0;
  Vertex after_v = 0;
  Vertex after_w = 0;
  std::vector<Vertex> swept;  // ascending
};

struct Flip {
  Edge edge;
  Vertex v = 0;
  Vertex w = 0;
  std::vector<Vertex> swept;  // ascending
  RotationSystem new_rs;
};

// Parallel scan of v's counter-clockwise and w's clockwise rotation with a
// parity list, nearest candidate first. The last candidate always sweeps
// every other vertex and leaves the rotations unchanged.
std::vector<FlipCandidate> flip_candidates(const RotationSystem& rs,
                                           const Edge& e);

RotationSystem apply_flip(const RotationSystem& rs, const FlipCandidate& c);

// Candidates whose result is realizable around e and whose flipped edge
// crosses no edge that e crosses.
std::vector<Flip> valid_flips(const RealizabilityTables& tables,
                              const RotationSystem& rs, const Edge& e);

enum class SeparatorKind { kUncrossed, kFlip };

struct SeparatorEvidence {
  Edge edge;
  SeparatorKind kind = SeparatorKind::kUncrossed;
  std::optional<Flip> flip;
};

using SeparatorCertificate = std::vector<SeparatorEvidence>;

// Uncrossed, else the first valid flip, else nullopt.
std::optional<SeparatorEvidence> is_separator_edge(
    const RealizabilityTables& tables, const RotationSystem& rs,
    const Edge& e);

struct SeparabilityResult {
  bool separable = false;
  SeparatorCertificate certificate;  // separator edges, in edge order
  std::vector<Edge> failing;         // edges that are not separator edges
};

SeparabilityResult is_separable(const RealizabilityTables& tables,
                                const RotationSystem& rs);

// (V1, V2), both ascending: the swept side and the other side, each with
// the endpoints of the flipped edge.
std::pair<std::vector<Vertex>, std::vector<Vertex>> side_partition(
    const RotationSystem& rs, const Flip& flip);
// An uncrossed edge: V1 = {v,w}, V2 = all vertices.
std::pair<std::vector<Vertex>, std::vector<Vertex>> side_partition(
    const RotationSystem& rs, const SeparatorEvidence& evidence);

// Number of separator edges at each vertex (index 0 is vertex 1).
std::vector<int> separator_degrees(const RealizabilityTables& tables,
                                   const RotationSystem& rs);

// First separator edge in edge order.
std::optional<SeparatorEvidence> find_any_separator_edge(
    const RealizabilityTables& tables, const RotationSystem& rs);

}  // namespace sepdraw

#endif  // SEPDRAW_SEPARABILITY_HPP_
