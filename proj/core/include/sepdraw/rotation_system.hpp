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

#ifndef SEPDRAW_ROTATION_SYSTEM_HPP_
#define SEPDRAW_ROTATION_SYSTEM_HPP_

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sepdraw {

// Vertex labels are 1-based.
using Vertex = int;

// An unordered edge, stored with a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  Edge() = default;
  Edge(Vertex u, Vertex v) : a(u < v ? u : v), b(u < v ? v : u) {}

  bool contains(Vertex v) const { return a == v || b == v; }
  bool shares_vertex(const Edge& o) const {
    return contains(o.a) || contains(o.b);
  }
  Vertex other(Vertex v) const { return v == a ? b : a; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

// An unordered pair of independent edges, stored with first < second.
struct CrossingPair {
  Edge first;
  Edge second;

  CrossingPair() = default;
  CrossingPair(Edge e, Edge f)
      : first(e < f ? e : f), second(e < f ? f : e) {}

  friend auto operator<=>(const CrossingPair&, const CrossingPair&) = default;
  friend bool operator==(const CrossingPair&, const CrossingPair&) = default;
};

using CrossingPairSet = std::set<CrossingPair>;

// Clockwise cyclic orders of the neighbours of every vertex of K_n.
//
// Rotations are stored as linear sequences with an arbitrary anchor.
// Equality compares the cyclic orders, not the linearizations.
class RotationSystem {
 public:
  RotationSystem() = default;

  // rotations[i] is the rotation of vertex i + 1. Throws InputError unless
  // every rotation is a permutation of the other labels.
  explicit RotationSystem(std::vector<std::vector<Vertex>> rotations);

  int size() const { return n_; }

  std::span<const Vertex> rotation(Vertex v) const { return rot_[v - 1]; }

  // Index of u in the stored rotation of v.
  int position(Vertex v, Vertex u) const { return pos_[index(v, u)]; }

  Vertex next_cw(Vertex v, Vertex u) const;
  Vertex next_ccw(Vertex v, Vertex u) const;

  // Reverses every rotation (reflection of the drawing).
  RotationSystem mirrored() const;

  // perm[old - 1] is the new label of old.
  RotationSystem relabeled(std::span<const Vertex> perm) const;

  // Every rotation re-anchored at its smallest label.
  RotationSystem normalized() const;

  // Replaces the rotation of v. The result is validated.
  RotationSystem with_rotation(Vertex v, std::vector<Vertex> rotation) const;

  friend bool operator==(const RotationSystem& x, const RotationSystem& y);

 private:
  std::size_t index(Vertex v, Vertex u) const {
    return static_cast<std::size_t>(v - 1) * static_cast<std::size_t>(n_ + 1) +
           static_cast<std::size_t>(u);
  }

  int n_ = 0;
  std::vector<std::vector<Vertex>> rot_;
  std::vector<int> pos_;
};

// True iff x, y, z appear in this cyclic order in the rotation of v.
bool cyclically_ordered(const RotationSystem& rs, Vertex v, Vertex x, Vertex y,
                        Vertex z);

// The rotation system of a straight-line drawing with vertices 1..n placed
// clockwise on a circle: vertex i rotates (i+1, ..., i+n-1) mod n.
RotationSystem convex_rotation_system(int n);

// Deletes all labels outside `subset` and relabels it order-preservingly to
// 1..|subset|. Throws InputError for an empty subset or invalid labels.
RotationSystem subrotation(const RotationSystem& rs,
                           std::span<const Vertex> subset);

// Orbit key under relabeling and mirroring; equal keys iff same orbit.
std::string canonical_key(const RotationSystem& rs);

// .crs text format.
std::vector<RotationSystem> parse_crs(const std::string& text);
std::string format_crs(const RotationSystem& rs);
std::string format_crs(std::span<const RotationSystem> records);

}  // namespace sepdraw

#endif  // SEPDRAW_ROTATION_SYSTEM_HPP_
