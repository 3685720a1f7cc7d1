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

#ifndef SEPDRAW_SMALL_TABLES_HPP_
#define SEPDRAW_SMALL_TABLES_HPP_

#include <string>
#include <vector>

#include "sepdraw/combinatorial_map.hpp"
#include "sepdraw/realizability.hpp"
#include "sepdraw/rotation_system.hpp"

namespace sepdraw {

struct EnumeratedDrawing {
  CombinatorialMap map;
  RotationSystem rs;
  std::string key;
};

// One drawing per orbit of good drawings of K_n under relabeling and
// reflection, sorted by key. Built by inserting vertex k+1 into every face
// of every drawing of K_k and routing its edges through the planarization.
// n = 7 takes minutes and needs `extended`.
std::vector<EnumeratedDrawing> enumerate_good_drawings(int n,
                                                       bool extended = false);

// Same, but returns every level: result[k] holds K_k for 2 <= k <= n.
std::vector<std::vector<EnumeratedDrawing>> enumerate_levels(
    int n, bool extended = false);

// Orbit counts of good drawings of K_5, K_6, K_7 reported in the
// literature, for comparison with the enumerator.
int published_orbit_count(int n);

// k4 and k5 from all labelings and reflections of the given drawings.
RealizabilityTables tables_from_drawings(
    const std::vector<EnumeratedDrawing>& k4_drawings,
    const std::vector<EnumeratedDrawing>& k5_drawings);

RealizabilityTables build_tables();

// Reads a .tbl file. Throws InputError.
RealizabilityTables load_tables(const std::string& path);

// The shipped table file if it can be found, else build_tables(). Computed
// once per process.
const RealizabilityTables& default_tables();

// A map whose rotation system is exactly `rs`. Throws NotRealizableError
// when no drawing exists and InputError for n > 7.
CombinatorialMap realize(const RealizabilityTables& tables,
                         const RotationSystem& rs);

}  // namespace sepdraw

#endif  // SEPDRAW_SMALL_TABLES_HPP_
