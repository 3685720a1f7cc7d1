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

#ifndef SEPDRAW_REALIZABILITY_HPP_
#define SEPDRAW_REALIZABILITY_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sepdraw/rotation_system.hpp"

namespace sepdraw {

inline constexpr int kK4Keys = 16;
inline constexpr int kK5Keys = 7776;

enum class K4Class : std::uint8_t { kUnrealizable, kNoCrossing, kCrossing };

// Pairing codes of the three perfect matchings of {1,2,3,4}:
// 0 = {12,34}, 1 = {13,24}, 2 = {14,23}.
struct K4Entry {
  K4Class cls = K4Class::kUnrealizable;
  int pairing = 0;

  friend bool operator==(const K4Entry&, const K4Entry&) = default;
};

// Crossing determination for 4 vertices and realizability for 5 vertices,
// both keyed by labeled rotation systems on 1..4 / 1..5.
struct RealizabilityTables {
  std::array<K4Entry, kK4Keys> k4{};
  std::vector<bool> k5 = std::vector<bool>(kK5Keys, false);

  int k5_count() const;

  // `tables v1` text format.
  std::string serialize() const;
  static RealizabilityTables parse(const std::string& text);

  friend bool operator==(const RealizabilityTables&,
                         const RealizabilityTables&) = default;
};

// Key of the subrotation of `rs` on the given labels (ascending).
int k4_index(const RotationSystem& rs, std::span<const Vertex, 4> sorted);
int k5_index(const RotationSystem& rs, std::span<const Vertex, 5> sorted);

// Key of a rotation system on exactly 4 / 5 vertices.
int k4_index(const RotationSystem& rs);
int k5_index(const RotationSystem& rs);

// Inverse of k4_index / k5_index.
RotationSystem k4_rotation_system(int index);
RotationSystem k5_rotation_system(int index);

// Pairing code of two independent edges relative to their sorted labels.
int pairing_code(const Edge& e, const Edge& f);

// Whether e and f cross. Throws InputError for adjacent edges and
// RealizabilityError if the 4-subrotation on their endpoints is unrealizable.
bool pair_crossing(const RealizabilityTables& tables, const RotationSystem& rs,
                   const Edge& e, const Edge& f);

CrossingPairSet crossing_pairs(const RealizabilityTables& tables,
                               const RotationSystem& rs);

// Edges crossing e.
std::vector<Edge> edges_crossing(const RealizabilityTables& tables,
                                 const RotationSystem& rs, const Edge& e);

bool is_uncrossed(const RealizabilityTables& tables, const RotationSystem& rs,
                  const Edge& e);

// Five-tuple criterion; n <= 4 is decided by the k4 table directly.
bool is_realizable(const RealizabilityTables& tables, const RotationSystem& rs);

// Only the 5-subsets containing both endpoints of e (O(n^3) of them).
bool is_realizable_touching(const RealizabilityTables& tables,
                            const RotationSystem& rs, const Edge& e);

// True iff edge {u,v} crosses an even number of the edges of triangle T.
bool same_triangle_side(const RealizabilityTables& tables,
                        const RotationSystem& rs, std::array<Vertex, 3> T,
                        Vertex u, Vertex v);

// Every triangle has a side whose induced subdrawing stays inside it.
bool is_g_convex(const RealizabilityTables& tables, const RotationSystem& rs);

}  // namespace sepdraw

#endif  // SEPDRAW_REALIZABILITY_HPP_
