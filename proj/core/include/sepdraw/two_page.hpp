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

#ifndef SEPDRAW_TWO_PAGE_HPP_
#define SEPDRAW_TWO_PAGE_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "sepdraw/combinatorial_map.hpp"
#include "sepdraw/rotation_system.hpp"

namespace sepdraw {

enum class Page : std::uint8_t { kUpper, kLower };

// Vertices on a horizontal line in `order`, every edge a half-circle on
// its page. pages[i] is the page of edges[i].
struct TwoPageDrawing {
  std::vector<Vertex> order;
  std::vector<Edge> edges;
  std::vector<Page> pages;
};

// Planarization of the half-circle drawing. With `witnesses`, every edge
// also gets a witness curve: its mirror image on the other page.
// Throws InputError for duplicate edges, loops or an invalid order.
CombinatorialMap from_two_page(const TwoPageDrawing& drawing,
                               bool witnesses = true);

// K_n with vertices 1..n in order and every edge on the upper page.
TwoPageDrawing convex_two_page(int n);
CombinatorialMap from_convex(int n, bool witnesses = false);

// Rotation system of a 2-page drawing of the complete graph, read directly
// from the half-circle geometry.
RotationSystem two_page_rotation_system(const TwoPageDrawing& drawing);

// Random order and random pages for all edges of K_n.
TwoPageDrawing random_two_page_complete(int n, std::mt19937_64& rng);

// A random 2-page drawing of K_n minus `missing` random edges whose map
// with witnesses is connected.
TwoPageDrawing random_two_page_partial(int n, int missing,
                                       std::mt19937_64& rng);

// A random crossing-free 2-page drawing of a connected graph on n vertices.
TwoPageDrawing random_plane_two_page(int n, std::mt19937_64& rng);

}  // namespace sepdraw

#endif  // SEPDRAW_TWO_PAGE_HPP_
