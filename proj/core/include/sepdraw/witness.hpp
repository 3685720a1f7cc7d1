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

#ifndef SEPDRAW_WITNESS_HPP_
#define SEPDRAW_WITNESS_HPP_

#include <optional>

#include "sepdraw/combinatorial_map.hpp"

namespace sepdraw {

// Searches an arc closing graph edge e to a witness. The search walks the
// dual graph with state (face, edges crossed so far): it never crosses e,
// an edge crossing e or an edge incident to e, crosses every other graph
// edge at most once and crosses witness curves freely. Exponential in the
// worst case. Any witness of e already in the map is ignored, and the
// route refers to the map with that witness removed.
std::optional<Route> find_witness(const CombinatorialMap& map, const Edge& e);

// Removes the witness of e (if any) and draws `arc` as its new witness.
CombinatorialMap add_witness(const CombinatorialMap& map, const Edge& e,
                             const Route& arc);

}  // namespace sepdraw

#endif  // SEPDRAW_WITNESS_HPP_
