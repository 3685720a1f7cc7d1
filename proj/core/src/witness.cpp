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

#include "sepdraw/witness.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "sepdraw/errors.hpp"

namespace sepdraw {
namespace {

CombinatorialMap without_witness(const CombinatorialMap& map, const Edge& e) {
  CurveId w = map.find_curve(CurveKind::kWitness, e);
  return w < 0 ? map : remove_curve(map, w);
}

class WitnessSearch {
 public:
  WitnessSearch(const CombinatorialMap& map, const Edge& e) : map_(map) {
    CurveId ec = map.find_graph_edge(e);
    if (ec < 0) throw InputError("edge " + to_string(e) + " is not drawn");
    bit_.assign(map.curve_count(), kFree);
    int next = 0;
    for (CurveId c = 0; c < map.curve_count(); ++c) {
      const MapCurve& cv = map.curve(c);
      if (!cv.is_graph_edge()) continue;
      if (c == ec || cv.edge().shares_vertex(e) ||
          !shared_crossings(map, c, ec).empty()) {
        bit_[c] = kBarred;
      } else {
        bit_[c] = next++;
      }
    }
    crossed_.assign(next, false);
    target_ = map.real_node(e.b);
    source_ = map.real_node(e.a);
  }

  std::optional<Route> run() {
    for (const Corner& s : corners_of(map_, source_)) {
      walk_.clear();
      faces_ = {s.face};
      if (dfs(s.face)) return shortcut(s);
    }
    return std::nullopt;
  }

 private:
  static constexpr int kFree = -1;
  static constexpr int kBarred = -2;

  bool dfs(FaceId f) {
    for (const Corner& c : corners_of(map_, target_)) {
      if (c.face == f) return true;
    }
    if (!seen_.insert({f, crossed_}).second) return false;
    for (DartId d : map_.face(f)) {
      int bit = bit_[map_.curve_of(d)];
      if (bit == kBarred || (bit >= 0 && crossed_[bit])) continue;
      if (bit >= 0) crossed_[bit] = true;
      walk_.push_back(d);
      faces_.push_back(map_.face_of(map_.twin(d)));
      if (dfs(faces_.back())) return true;
      faces_.pop_back();
      walk_.pop_back();
      if (bit >= 0) crossed_[bit] = false;
    }
    return false;
  }

  // Cuts out every detour that returns to an earlier face; the result
  // crosses a subset of the curves the walk crossed.
  Route shortcut(const Corner& start) {
    std::vector<DartId> darts;
    std::vector<FaceId> faces = {faces_.front()};
    for (std::size_t i = 0; i < walk_.size(); ++i) {
      FaceId next = faces_[i + 1];
      auto it = std::find(faces.begin(), faces.end(), next);
      if (it != faces.end()) {
        std::size_t keep = static_cast<std::size_t>(it - faces.begin());
        faces.resize(keep + 1);
        darts.resize(keep);
      } else {
        darts.push_back(walk_[i]);
        faces.push_back(next);
      }
    }
    Corner end;
    for (const Corner& c : corners_of(map_, target_)) {
      if (c.face == faces.back()) {
        end = c;
        break;
      }
    }
    Corner from = start;
    for (const Corner& c : corners_of(map_, source_)) {
      if (c.face == faces.front()) {
        from = c;
        break;
      }
    }
    return Route{from, darts, end};
  }

  const CombinatorialMap& map_;
  std::vector<int> bit_;
  std::vector<bool> crossed_;
  std::set<std::pair<FaceId, std::vector<bool>>> seen_;
  std::vector<DartId> walk_;
  std::vector<FaceId> faces_;
  NodeId source_ = -1;
  NodeId target_ = -1;
};

}  // namespace

std::optional<Route> find_witness(const CombinatorialMap& map, const Edge& e) {
  CombinatorialMap clean = without_witness(map, e);
  if (clean.find_curve(CurveKind::kWitness, e) >= 0) {
    throw InputError("edge " + to_string(e) + " has several witnesses");
  }
  return WitnessSearch(clean, e).run();
}

CombinatorialMap add_witness(const CombinatorialMap& map, const Edge& e,
                             const Route& arc) {
  CombinatorialMap clean = without_witness(map, e);
  return insert_route(clean, arc, CurveKind::kWitness).first;
}

}  // namespace sepdraw
