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

#include "sepdraw/small_tables.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "sepdraw/errors.hpp"

namespace sepdraw {
namespace {

// Boundary position of a corner in its face: the corner before dart e sits
// at 2 * pos(e) - 1, the segment side of e at 2 * pos(e). -1 for the
// corner of an isolated node, which can be placed anywhere in its face.
int corner_position(const CombinatorialMap& map, const Corner& c) {
  if (c.after < 0) return -1;
  DartId e = map.sigma(c.after);
  int len = static_cast<int>(map.face(map.face_of(e)).size());
  return (2 * map.face_position(e) + 2 * len - 1) % (2 * len);
}

bool chords_interleave(int a, int b, int c, int d) {
  if (a < 0 || b < 0 || c < 0 || d < 0) return false;
  auto inside = [&](int x) { return a < b ? (a < x && x < b) : (x > a || x < b); };
  return inside(c) != inside(d);
}

// Depth-first enumeration of the routes from one of `starts` to one of
// `ends` crossing only `crossable` curves, each at most once. A route may
// pass through a face several times as long as its passes do not cross.
class RouteSearch {
 public:
  RouteSearch(const CombinatorialMap& map, std::vector<bool> crossable,
              std::vector<Corner> starts, std::vector<Corner> ends,
              int required)
      : map_(map),
        crossable_(std::move(crossable)),
        starts_(std::move(starts)),
        ends_(std::move(ends)),
        required_(required),
        crossed_(map.curve_count(), false),
        chords_(map.face_count()) {}

  // Calls emit for every route until it returns true. Returns true if
  // stopped.
  bool run(const std::function<bool(const Route&)>& emit) {
    emit_ = &emit;
    for (const Corner& s : starts_) {
      start_ = s;
      if (dfs(corner_face(map_, s), corner_position(map_, s))) return true;
    }
    return false;
  }

 private:
  bool fits(FaceId f, int p, int q) const {
    for (auto [a, b] : chords_[f]) {
      if (chords_interleave(a, b, p, q)) return false;
    }
    return true;
  }

  bool dfs(FaceId f, int p) {
    if (required_ < 0 || count_ == required_) {
      for (const Corner& e : ends_) {
        if (corner_face(map_, e) != f) continue;
        if (!fits(f, p, corner_position(map_, e))) continue;
        if ((*emit_)(Route{start_, darts_, e})) return true;
      }
    }
    if (required_ >= 0 && count_ == required_) return false;
    const auto& boundary = map_.face(f);
    for (DartId d : boundary) {
      CurveId c = map_.curve_of(d);
      if (c < 0 || !crossable_[c] || crossed_[c]) continue;
      int q = 2 * map_.face_position(d);
      if (!fits(f, p, q)) continue;
      chords_[f].emplace_back(p, q);
      crossed_[c] = true;
      ++count_;
      darts_.push_back(d);
      DartId t = map_.twin(d);
      bool stop = dfs(map_.face_of(t), 2 * map_.face_position(t));
      darts_.pop_back();
      --count_;
      crossed_[c] = false;
      chords_[f].pop_back();
      if (stop) return true;
    }
    return false;
  }

  const CombinatorialMap& map_;
  std::vector<bool> crossable_;
  std::vector<Corner> starts_;
  std::vector<Corner> ends_;
  int required_;
  std::vector<bool> crossed_;
  std::vector<std::vector<std::pair<int, int>>> chords_;
  std::vector<DartId> darts_;
  int count_ = 0;
  Corner start_;
  const std::function<bool(const Route&)>* emit_ = nullptr;
};

CombinatorialMap single_vertex() {
  MapBuilder b;
  b.add_real_node(1);
  return b.build();
}

CombinatorialMap k2_map() {
  MapBuilder b;
  NodeId u = b.add_real_node(1);
  NodeId v = b.add_real_node(2);
  auto [du, dv] = b.add_segment(u, v);
  b.set_rotation(u, {du});
  b.set_rotation(v, {dv});
  b.add_curve(CurveKind::kEdge, 1, 2, du);
  return b.build();
}

// The corner of `node` right after the dart leading to `label`.
Corner corner_after_label(const CombinatorialMap& map, NodeId node,
                          Vertex label) {
  const Vertex self = map.node(node).label;
  for (const Corner& c : corners_of(map, node)) {
    CurveId cv = map.curve_of(c.after);
    if (cv >= 0 && map.curve(cv).edge().other(self) == label) return c;
  }
  throw InvariantError("no dart towards " + std::to_string(label));
}

// Constraints derived from a target rotation system on k+1 vertices.
struct Target {
  const RealizabilityTables* tables = nullptr;
  RotationSystem rs;
};

// Adds vertex k+1 to `base` (a drawing of K_k) in every possible way and
// calls `done` on each result until it returns true.
class VertexInsertion {
 public:
  VertexInsertion(const CombinatorialMap& base, int k, const Target* target,
                  std::function<bool(const CombinatorialMap&)> done)
      : base_(base), k_(k), target_(target), done_(std::move(done)) {}

  bool run() {
    CombinatorialMap with_x = with_isolated_vertex(base_, k_ + 1);
    const int faces = std::max(with_x.face_count(), 1);
    for (FaceId f = 0; f < faces; ++f) {
      if (route(with_x, 1, f)) return true;
    }
    return false;
  }

 private:
  bool route(const CombinatorialMap& map, Vertex v, FaceId first_face) {
    if (v > k_) return done_(map);
    const Vertex x = k_ + 1;
    const NodeId xn = map.real_node(x);
    const NodeId vn = map.real_node(v);
    const int old_curves = k_ * (k_ - 1) / 2;
    const Edge e(x, v);

    std::vector<bool> crossable(map.curve_count(), false);
    int required = -1;
    for (CurveId c = 0; c < old_curves; ++c) {
      const Edge f = map.curve(c).edge();
      if (f.contains(v)) continue;
      if (target_ == nullptr) {
        crossable[c] = true;
      } else if (pair_crossing(*target_->tables, target_->rs, e, f)) {
        crossable[c] = true;
        required = std::max(required, 0) + 1;
      }
    }
    if (target_ != nullptr && required < 0) required = 0;

    std::vector<Corner> starts, ends;
    if (v == 1) {
      starts.push_back({xn, -1, first_face});
    } else if (target_ == nullptr) {
      starts = corners_of(map, xn);
    } else {
      Vertex a = target_->rs.next_ccw(x, v);
      while (a > v) a = target_->rs.next_ccw(x, a);
      starts.push_back(corner_after_label(map, xn, a));
    }
    if (target_ == nullptr) {
      ends = corners_of(map, vn);
    } else {
      ends.push_back(corner_after_label(map, vn, target_->rs.next_ccw(v, x)));
    }

    RouteSearch search(map, std::move(crossable), std::move(starts),
                       std::move(ends), required);
    return search.run([&](const Route& r) {
      auto [next, id] = insert_route(map, r, CurveKind::kEdge);
      return route(next, v + 1, first_face);
    });
  }

  const CombinatorialMap& base_;
  int k_;
  const Target* target_;
  std::function<bool(const CombinatorialMap&)> done_;
};

std::vector<Vertex> iota_labels(int n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

}  // namespace

std::vector<std::vector<EnumeratedDrawing>> enumerate_levels(int n,
                                                             bool extended) {
  if (n < 2 || n > 7) throw InputError("enumeration supports 3 <= n <= 7");
  if (n == 7 && !extended) {
    throw InputError("n = 7 enumeration requires extended mode");
  }
  std::vector<std::vector<EnumeratedDrawing>> levels(n + 1);
  {
    CombinatorialMap m = k2_map();
    RotationSystem rs = extract_rotation_system(m);
    levels[2].push_back({m, rs, canonical_key(rs)});
  }
  for (int k = 2; k < n; ++k) {
    std::map<std::string, EnumeratedDrawing> found;
    for (const auto& d : levels[k]) {
      VertexInsertion ins(d.map, k, nullptr, [&](const CombinatorialMap& m) {
        RotationSystem rs = extract_rotation_system(m);
        std::string key = canonical_key(rs);
        if (!found.count(key)) found.emplace(key, EnumeratedDrawing{m, rs, key});
        return false;
      });
      ins.run();
    }
    for (auto& [key, d] : found) levels[k + 1].push_back(std::move(d));
  }
  return levels;
}

std::vector<EnumeratedDrawing> enumerate_good_drawings(int n, bool extended) {
  if (n < 3) throw InputError("enumeration supports 3 <= n <= 7");
  return std::move(enumerate_levels(n, extended)[n]);
}

int published_orbit_count(int n) {
  switch (n) {
    case 3: return 1;
    case 4: return 2;
    case 5: return 5;
    case 6: return 102;
    case 7: return 11556;
    default: return -1;
  }
}

RealizabilityTables tables_from_drawings(
    const std::vector<EnumeratedDrawing>& k4_drawings,
    const std::vector<EnumeratedDrawing>& k5_drawings) {
  RealizabilityTables t;
  std::array<bool, kK4Keys> set{};
  for (const auto& d : k4_drawings) {
    if (d.rs.size() != 4) throw InputError("k4 drawings must have 4 vertices");
    CrossingPairSet pairs = map_crossing_pairs(d.map);
    if (pairs.size() > 1) throw InvariantError("K4 drawing with two crossings");
    std::vector<Vertex> perm = iota_labels(4);
    do {
      K4Entry entry{K4Class::kNoCrossing, 0};
      if (!pairs.empty()) {
        const CrossingPair& p = *pairs.begin();
        Edge e(perm[p.first.a - 1], perm[p.first.b - 1]);
        Edge f(perm[p.second.a - 1], perm[p.second.b - 1]);
        entry = {K4Class::kCrossing, pairing_code(e, f)};
      }
      RotationSystem rs = d.rs.relabeled(perm);
      for (const RotationSystem& r : {rs, rs.mirrored()}) {
        int idx = k4_index(r);
        if (set[idx] && !(t.k4[idx] == entry)) {
          throw InvariantError("conflicting crossings for k4 key " +
                               std::to_string(idx));
        }
        set[idx] = true;
        t.k4[idx] = entry;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  for (const auto& d : k5_drawings) {
    if (d.rs.size() != 5) throw InputError("k5 drawings must have 5 vertices");
    std::vector<Vertex> perm = iota_labels(5);
    do {
      RotationSystem rs = d.rs.relabeled(perm);
      t.k5[k5_index(rs)] = true;
      t.k5[k5_index(rs.mirrored())] = true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return t;
}

RealizabilityTables build_tables() {
  auto levels = enumerate_levels(5);
  return tables_from_drawings(levels[4], levels[5]);
}

RealizabilityTables load_tables(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read tables file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return RealizabilityTables::parse(text.str());
}

const RealizabilityTables& default_tables() {
  static const RealizabilityTables tables = [] {
    std::vector<std::string> paths;
    if (const char* env = std::getenv("SEPDRAW_TABLES")) paths.push_back(env);
#ifdef SEPDRAW_DEFAULT_TABLES
    paths.push_back(SEPDRAW_DEFAULT_TABLES);
#endif
    for (const auto& p : paths) {
      if (std::ifstream(p).good()) return load_tables(p);
    }
    return build_tables();
  }();
  return tables;
}

CombinatorialMap realize(const RealizabilityTables& tables,
                         const RotationSystem& rs) {
  const int n = rs.size();
  if (n < 1 || n > 7) throw InputError("realize supports 1 <= n <= 7");
  if (n == 1) return single_vertex();
  if (!is_realizable(tables, rs)) {
    throw NotRealizableError("rotation system is not realizable");
  }
  std::vector<Target> targets(n + 1);
  for (int k = 2; k <= n; ++k) {
    targets[k] = {&tables, subrotation(rs, iota_labels(k))};
  }
  CombinatorialMap result;
  std::function<bool(const CombinatorialMap&, int)> grow =
      [&](const CombinatorialMap& map, int k) {
        if (k == n) {
          result = map;
          return true;
        }
        VertexInsertion ins(map, k, &targets[k + 1],
                            [&](const CombinatorialMap& m) { return grow(m, k + 1); });
        return ins.run();
      };
  CombinatorialMap start = k2_map();
  if (!(extract_rotation_system(start) == targets[2].rs) || !grow(start, 2)) {
    throw NotRealizableError("no drawing with this rotation system exists");
  }
  if (!(extract_rotation_system(result) == rs)) {
    throw InvariantError("realized map has a different rotation system");
  }
  return result;
}

}  // namespace sepdraw
