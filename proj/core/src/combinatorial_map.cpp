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

#include "sepdraw/combinatorial_map.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "sepdraw/errors.hpp"

namespace sepdraw {

const char* to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::kEdge: return "edge";
    case CurveKind::kWitness: return "witness";
    case CurveKind::kInserted: return "inserted";
  }
  return "?";
}

DartId CombinatorialMap::sigma(DartId d) const {
  const auto& rot = nodes_[dart_node_[d]].rotation;
  return rot[(rot_pos_[d] + 1) % rot.size()];
}

DartId CombinatorialMap::sigma_inv(DartId d) const {
  const auto& rot = nodes_[dart_node_[d]].rotation;
  return rot[(rot_pos_[d] + rot.size() - 1) % rot.size()];
}

NodeId CombinatorialMap::real_node(Vertex label) const {
  for (NodeId i = 0; i < node_count(); ++i) {
    if (nodes_[i].kind == NodeKind::kReal && nodes_[i].label == label) return i;
  }
  return -1;
}

std::vector<Vertex> CombinatorialMap::real_labels() const {
  std::vector<Vertex> out;
  for (const auto& n : nodes_) {
    if (n.kind == NodeKind::kReal) out.push_back(n.label);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DartId> CombinatorialMap::curve_darts(CurveId c) const {
  std::vector<DartId> out;
  DartId d = curves_[c].start;
  const int limit = dart_count();
  while (d >= 0 && static_cast<int>(out.size()) <= limit) {
    out.push_back(d);
    DartId t = twin_[d];
    const MapNode& x = nodes_[dart_node_[t]];
    if (x.kind == NodeKind::kReal || x.rotation.size() != 4) break;
    d = x.rotation[(rot_pos_[t] + 2) % 4];
  }
  return out;
}

std::vector<NodeId> CombinatorialMap::curve_nodes(CurveId c) const {
  std::vector<NodeId> out;
  auto darts = curve_darts(c);
  if (darts.empty()) return out;
  out.push_back(dart_node_[darts.front()]);
  for (DartId d : darts) out.push_back(dart_node_[twin_[d]]);
  return out;
}

CurveId CombinatorialMap::find_curve(CurveKind kind, const Edge& e) const {
  for (CurveId c = 0; c < curve_count(); ++c) {
    if (curves_[c].kind == kind && curves_[c].edge() == e) return c;
  }
  return -1;
}

CurveId CombinatorialMap::find_graph_edge(const Edge& e) const {
  for (CurveId c = 0; c < curve_count(); ++c) {
    if (curves_[c].is_graph_edge() && curves_[c].edge() == e) return c;
  }
  return -1;
}

void CombinatorialMap::reindex() {
  const int nd = dart_count();
  rot_pos_.assign(nd, -1);
  for (const auto& node : nodes_) {
    for (std::size_t i = 0; i < node.rotation.size(); ++i) {
      rot_pos_[node.rotation[i]] = static_cast<int>(i);
    }
  }

  trace_problems_.clear();
  dart_curve_.assign(nd, -1);
  dart_index_.assign(nd, -1);
  dart_forward_.assign(nd, false);
  for (CurveId c = 0; c < curve_count(); ++c) {
    const MapCurve& cv = curves_[c];
    const std::string name = "curve " + std::to_string(c);
    if (cv.start < 0 || cv.start >= nd) {
      trace_problems_.push_back(name + " has no start dart");
      continue;
    }
    const MapNode& first = nodes_[dart_node_[cv.start]];
    if (first.kind != NodeKind::kReal || first.label != cv.u) {
      trace_problems_.push_back(name + " does not start at real vertex " +
                                std::to_string(cv.u));
    }
    DartId d = cv.start;
    for (int idx = 0;; ++idx) {
      DartId t = twin_[d];
      if (dart_curve_[d] != -1 || dart_curve_[t] != -1) {
        trace_problems_.push_back(name + " runs over segment " +
                                  std::to_string(d) + " twice or shares it");
        break;
      }
      dart_curve_[d] = dart_curve_[t] = c;
      dart_index_[d] = dart_index_[t] = idx;
      dart_forward_[d] = true;
      const MapNode& x = nodes_[dart_node_[t]];
      if (x.kind == NodeKind::kReal) {
        if (x.label != cv.v) {
          trace_problems_.push_back(name + " ends at vertex " +
                                    std::to_string(x.label) + ", declared " +
                                    std::to_string(cv.v));
        }
        break;
      }
      if (x.rotation.size() != 4) {
        trace_problems_.push_back(name + " reaches a cross node of degree " +
                                  std::to_string(x.rotation.size()));
        break;
      }
      d = x.rotation[(rot_pos_[t] + 2) % 4];
    }
  }
  for (DartId d = 0; d < nd; ++d) {
    if (dart_curve_[d] == -1) {
      trace_problems_.push_back("dart " + std::to_string(d) +
                                " lies on no curve");
    }
  }

  face_of_.assign(nd, -1);
  face_pos_.assign(nd, -1);
  faces_.clear();
  for (DartId d = 0; d < nd; ++d) {
    if (face_of_[d] != -1) continue;
    const FaceId f = static_cast<FaceId>(faces_.size());
    faces_.emplace_back();
    DartId x = d;
    do {
      face_of_[x] = f;
      face_pos_[x] = static_cast<int>(faces_[f].size());
      faces_[f].push_back(x);
      x = sigma(twin_[x]);
    } while (x != d);
  }
}

MapBuilder::MapBuilder(const CombinatorialMap& map)
    : map_(map),
      dead_nodes_(map.node_count(), false),
      dead_darts_(map.dart_count(), false) {}

NodeId MapBuilder::add_real_node(Vertex label) {
  map_.nodes_.push_back({NodeKind::kReal, label, {}});
  dead_nodes_.push_back(false);
  return node_count() - 1;
}

NodeId MapBuilder::add_cross_node() {
  map_.nodes_.push_back({NodeKind::kCross, 0, {}});
  dead_nodes_.push_back(false);
  return node_count() - 1;
}

DartId MapBuilder::add_dart(NodeId node) {
  map_.dart_node_.push_back(node);
  map_.twin_.push_back(-1);
  dead_darts_.push_back(false);
  return dart_count() - 1;
}

std::pair<DartId, DartId> MapBuilder::add_segment(NodeId a, NodeId b) {
  DartId da = add_dart(a);
  DartId db = add_dart(b);
  set_twin(da, db);
  return {da, db};
}

void MapBuilder::set_rotation(NodeId node, std::vector<DartId> rotation) {
  map_.nodes_[node].rotation = std::move(rotation);
}

void MapBuilder::insert_after(DartId after, DartId d) {
  auto& rot = map_.nodes_[map_.dart_node_[after]].rotation;
  auto it = std::find(rot.begin(), rot.end(), after);
  if (it == rot.end()) throw InvariantError("insert_after: dart not in rotation");
  rot.insert(it + 1, d);
}

void MapBuilder::set_twin(DartId a, DartId b) {
  map_.twin_[a] = b;
  map_.twin_[b] = a;
}

CurveId MapBuilder::add_curve(CurveKind kind, Vertex u, Vertex v, DartId start) {
  map_.curves_.push_back({kind, u, v, start});
  return static_cast<CurveId>(map_.curves_.size()) - 1;
}

void MapBuilder::set_curve(CurveId id, MapCurve curve) {
  map_.curves_[id] = curve;
}

void MapBuilder::kill_node(NodeId id) { dead_nodes_[id] = true; }

void MapBuilder::kill_dart(DartId d) {
  dead_darts_[d] = true;
  auto& rot = map_.nodes_[map_.dart_node_[d]].rotation;
  rot.erase(std::remove(rot.begin(), rot.end(), d), rot.end());
}

CombinatorialMap MapBuilder::build() const {
  CombinatorialMap out;
  const int nn = node_count();
  const int nd = dart_count();
  std::vector<NodeId> node_id(nn, -1);
  std::vector<DartId> dart_id(nd, -1);
  for (NodeId i = 0; i < nn; ++i) {
    if (dead_nodes_[i]) continue;
    node_id[i] = static_cast<NodeId>(out.nodes_.size());
    out.nodes_.push_back({});
  }
  int live = 0;
  for (DartId d = 0; d < nd; ++d) {
    if (!dead_darts_[d]) {
      if (dead_nodes_[map_.dart_node_[d]]) {
        throw InvariantError("live dart " + std::to_string(d) +
                             " on a removed node");
      }
      dart_id[d] = live++;
    }
  }
  out.dart_node_.assign(live, -1);
  out.twin_.assign(live, -1);
  for (DartId d = 0; d < nd; ++d) {
    if (dart_id[d] < 0) continue;
    DartId t = map_.twin_[d];
    if (t < 0 || t >= nd || dart_id[t] < 0 || t == d || map_.twin_[t] != d) {
      throw InputError("dart " + std::to_string(d) + " has no valid twin");
    }
    out.dart_node_[dart_id[d]] = node_id[map_.dart_node_[d]];
    out.twin_[dart_id[d]] = dart_id[t];
  }
  std::vector<int> in_rotation(live, 0);
  for (NodeId i = 0; i < nn; ++i) {
    if (node_id[i] < 0) continue;
    MapNode& node = out.nodes_[node_id[i]];
    node.kind = map_.nodes_[i].kind;
    node.label = map_.nodes_[i].label;
    for (DartId d : map_.nodes_[i].rotation) {
      if (d < 0 || d >= nd || dart_id[d] < 0 || map_.dart_node_[d] != i) {
        throw InputError("rotation of node " + std::to_string(i) +
                         " lists foreign dart " + std::to_string(d));
      }
      node.rotation.push_back(dart_id[d]);
      ++in_rotation[dart_id[d]];
    }
  }
  for (DartId d = 0; d < live; ++d) {
    if (in_rotation[d] != 1) {
      throw InputError("dart " + std::to_string(d) +
                       " must appear in exactly one rotation");
    }
  }
  for (MapCurve c : map_.curves_) {
    if (c.start >= 0 && c.start < nd) c.start = dart_id[c.start];
    out.curves_.push_back(c);
  }
  out.reindex();
  return out;
}

FaceId corner_face(const CombinatorialMap& map, const Corner& c) {
  if (c.after < 0) return c.face;
  return map.face_of(map.sigma(c.after));
}

std::vector<Corner> corners_of(const CombinatorialMap& map, NodeId node) {
  std::vector<Corner> out;
  for (DartId e : map.node(node).rotation) {
    out.push_back({node, e, map.face_of(map.sigma(e))});
  }
  return out;
}

std::pair<CombinatorialMap, CurveId> insert_route(const CombinatorialMap& map,
                                                  const Route& route,
                                                  CurveKind kind) {
  const MapNode& from = map.node(route.from.node);
  const MapNode& to = map.node(route.to.node);
  if (from.kind != NodeKind::kReal || to.kind != NodeKind::kReal ||
      route.from.node == route.to.node) {
    throw InputError("a route must join two distinct real vertices");
  }
  FaceId f = corner_face(map, route.from);
  std::vector<bool> used(map.dart_count(), false);
  for (DartId d : route.crossings) {
    if (used[d] || used[map.twin(d)]) {
      throw InvariantError("route crosses a segment twice");
    }
    used[d] = true;
    if (map.face_of(d) != f) throw InvariantError("route is not face-connected");
    f = map.face_of(map.twin(d));
  }
  if (corner_face(map, route.to) != f) {
    throw InvariantError("route does not end in the target corner's face");
  }

  MapBuilder b(map);
  std::vector<NodeId> points;
  points.push_back(route.from.node);
  std::vector<std::pair<DartId, DartId>> cross_halves;
  for (DartId d : route.crossings) {
    NodeId x = b.add_cross_node();
    DartId t = b.twin(d);
    DartId c_in = b.add_dart(x);
    DartId c_out = b.add_dart(x);
    b.set_twin(d, c_in);
    b.set_twin(t, c_out);
    cross_halves.emplace_back(c_in, c_out);
    points.push_back(x);
  }
  points.push_back(route.to.node);

  std::vector<std::pair<DartId, DartId>> segs;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    segs.push_back(b.add_segment(points[i], points[i + 1]));
  }
  for (std::size_t j = 0; j < route.crossings.size(); ++j) {
    // Crossing from the left of d to its right: walking along d the new
    // curve arrives from the left and leaves to the right.
    DartId n_from = segs[j].second;
    DartId n_to = segs[j + 1].first;
    b.set_rotation(points[j + 1], {cross_halves[j].first, n_from,
                                   cross_halves[j].second, n_to});
  }
  DartId s0 = segs.front().first;
  DartId s1 = segs.back().second;
  if (route.from.after < 0) {
    b.node(route.from.node).rotation.push_back(s0);
  } else {
    b.insert_after(route.from.after, s0);
  }
  if (route.to.after < 0) {
    b.node(route.to.node).rotation.push_back(s1);
  } else {
    b.insert_after(route.to.after, s1);
  }
  CurveId id = b.add_curve(kind, from.label, to.label, s0);
  return {b.build(), id};
}

CombinatorialMap remove_curve(const CombinatorialMap& map, CurveId c) {
  MapBuilder b(map);
  std::vector<DartId> darts = map.curve_darts(c);
  std::vector<bool> visited(map.node_count(), false);
  std::vector<DartId> real_darts;
  for (DartId d : darts) {
    for (DartId h : {d, map.twin(d)}) {
      NodeId x = map.node_of(h);
      if (map.node(x).kind == NodeKind::kReal) {
        real_darts.push_back(h);
        continue;
      }
      if (visited[x]) continue;
      visited[x] = true;
      const auto& rot = map.node(x).rotation;
      int p = map.rotation_position(h);
      DartId p1 = rot[(p + 1) % 4], p3 = rot[(p + 3) % 4];
      if (map.curve_of(p1) != c) {
        b.set_twin(b.twin(p1), b.twin(p3));
      }
      b.kill_node(x);
      for (DartId r : rot) b.kill_dart(r);
    }
  }
  for (DartId h : real_darts) b.kill_dart(h);
  b.curves().erase(b.curves().begin() + c);
  return b.build();
}

CombinatorialMap strip_witnesses(const CombinatorialMap& map) {
  CombinatorialMap out = map;
  for (CurveId c = out.curve_count() - 1; c >= 0; --c) {
    if (out.curve(c).kind == CurveKind::kWitness) out = remove_curve(out, c);
  }
  return out;
}

CombinatorialMap with_isolated_vertex(const CombinatorialMap& map,
                                      Vertex label) {
  if (map.real_node(label) >= 0) {
    throw InputError("vertex " + std::to_string(label) + " already present");
  }
  MapBuilder b(map);
  b.add_real_node(label);
  return b.build();
}

namespace {

// Curves passing through a cross node (first and second pass).
std::pair<CurveId, CurveId> passes(const CombinatorialMap& map, NodeId x) {
  const auto& rot = map.node(x).rotation;
  return {map.curve_of(rot[0]), map.curve_of(rot[1])};
}

int shared_endpoints(const MapCurve& a, const MapCurve& b) {
  int k = 0;
  for (Vertex x : {a.u, a.v}) {
    if (x == b.u || x == b.v) ++k;
  }
  return k;
}

}  // namespace

std::vector<NodeId> shared_crossings(const CombinatorialMap& map, CurveId a,
                                     CurveId b) {
  std::vector<NodeId> out;
  for (NodeId x : map.curve_nodes(a)) {
    if (map.node(x).kind != NodeKind::kCross) continue;
    auto [p, q] = passes(map, x);
    if ((p == a && q == b) || (p == b && q == a)) out.push_back(x);
  }
  if (a == b) {
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

int common_points(const CombinatorialMap& map, CurveId a, CurveId b) {
  if (a == b) return 0;
  return shared_endpoints(map.curve(a), map.curve(b)) +
         static_cast<int>(shared_crossings(map, a, b).size());
}

bool validate_witness(const CombinatorialMap& map, const Edge& e,
                      std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  CurveId w = map.find_curve(CurveKind::kWitness, e);
  if (w < 0) return fail("no witness curve for " + to_string(e));
  CurveId ec = map.find_graph_edge(e);
  if (ec < 0) return fail("no edge curve for " + to_string(e));
  if (!shared_crossings(map, w, w).empty()) {
    return fail("witness of " + to_string(e) + " crosses itself");
  }
  if (!shared_crossings(map, w, ec).empty()) {
    return fail("witness of " + to_string(e) + " crosses its edge");
  }
  for (CurveId f = 0; f < map.curve_count(); ++f) {
    if (f == ec || !map.curve(f).is_graph_edge()) continue;
    int pts = shared_endpoints(map.curve(f), map.curve(ec)) +
              static_cast<int>(shared_crossings(map, f, ec).size()) +
              static_cast<int>(shared_crossings(map, f, w).size());
    if (pts > 1) {
      return fail("closed curve of " + to_string(e) + " meets edge " +
                  to_string(map.curve(f).edge()) + " " + std::to_string(pts) +
                  " times");
    }
  }
  return true;
}

std::vector<Violation> validate_map(const CombinatorialMap& map) {
  std::vector<Violation> out;
  for (const auto& p : map.trace_problems()) out.push_back({"trace", p});

  std::map<Vertex, int> label_count;
  for (NodeId i = 0; i < map.node_count(); ++i) {
    const MapNode& n = map.node(i);
    if (n.kind == NodeKind::kReal) {
      if (n.label < 1) {
        out.push_back({"label", "node " + std::to_string(i) + " has label " +
                                    std::to_string(n.label)});
      }
      ++label_count[n.label];
    } else if (n.rotation.size() != 4) {
      out.push_back({"cross-degree", "cross node " + std::to_string(i) +
                                         " has degree " +
                                         std::to_string(n.rotation.size())});
    }
  }
  for (auto [label, count] : label_count) {
    if (count > 1) {
      out.push_back({"label", "vertex " + std::to_string(label) +
                                  " appears " + std::to_string(count) +
                                  " times"});
    }
  }
  for (CurveId c = 0; c < map.curve_count(); ++c) {
    const MapCurve& cv = map.curve(c);
    if (cv.u == cv.v || !label_count.count(cv.u) || !label_count.count(cv.v)) {
      out.push_back({"curve", "curve " + std::to_string(c) +
                                  " has invalid endpoints " +
                                  std::to_string(cv.u) + "-" +
                                  std::to_string(cv.v)});
    }
  }
  if (!out.empty()) return out;

  // Euler characteristic per connected component.
  const int nn = map.node_count();
  std::vector<int> comp(nn, -1);
  int components = 0;
  for (NodeId s = 0; s < nn; ++s) {
    if (comp[s] != -1) continue;
    std::vector<NodeId> stack = {s};
    comp[s] = components;
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      for (DartId d : map.node(x).rotation) {
        NodeId y = map.node_of(map.twin(d));
        if (comp[y] == -1) {
          comp[y] = components;
          stack.push_back(y);
        }
      }
    }
    ++components;
  }
  if (components > 1) {
    out.push_back({"disconnected",
                   "planarization has " + std::to_string(components) +
                       " components; relative placement is not encoded"});
  }
  std::vector<long> vertices(components, 0), edges(components, 0),
      face_count(components, 0);
  for (NodeId x = 0; x < nn; ++x) ++vertices[comp[x]];
  for (DartId d = 0; d < map.dart_count(); ++d) ++edges[comp[map.node_of(d)]];
  for (FaceId f = 0; f < map.face_count(); ++f) {
    ++face_count[comp[map.node_of(map.face(f).front())]];
  }
  for (int c = 0; c < components; ++c) {
    long e = edges[c] / 2;
    long chi = vertices[c] - e + face_count[c];
    bool isolated = e == 0 && vertices[c] == 1;
    if (!isolated && chi != 2) {
      out.push_back({"euler", "component " + std::to_string(c) + ": V - E + F = " +
                                  std::to_string(chi) + " (not spherical)"});
    }
  }

  for (NodeId x = 0; x < nn; ++x) {
    if (map.node(x).kind != NodeKind::kCross) continue;
    auto [p, q] = passes(map, x);
    if (p == q) {
      out.push_back({"self-crossing", "curve " + std::to_string(p) +
                                          " crosses itself at node " +
                                          std::to_string(x)});
    }
  }

  std::map<std::pair<CurveId, CurveId>, int> crossings;
  for (NodeId x = 0; x < nn; ++x) {
    if (map.node(x).kind != NodeKind::kCross) continue;
    auto [p, q] = passes(map, x);
    if (p != q) ++crossings[{std::min(p, q), std::max(p, q)}];
  }
  std::vector<CurveId> graph;
  for (CurveId c = 0; c < map.curve_count(); ++c) {
    if (map.curve(c).is_graph_edge()) graph.push_back(c);
  }
  for (std::size_t i = 0; i < graph.size(); ++i) {
    for (std::size_t j = i + 1; j < graph.size(); ++j) {
      CurveId a = graph[i], b = graph[j];
      const MapCurve &ca = map.curve(a), &cb = map.curve(b);
      if (ca.edge() == cb.edge()) {
        out.push_back({"duplicate-edge", "edge " + to_string(ca.edge()) +
                                             " is drawn twice"});
        continue;
      }
      auto it = crossings.find({a, b});
      int pts = shared_endpoints(ca, cb) + (it == crossings.end() ? 0 : it->second);
      if (pts > 1) {
        out.push_back({"simplicity", "edges " + to_string(ca.edge()) + " and " +
                                         to_string(cb.edge()) + " share " +
                                         std::to_string(pts) + " points"});
      }
    }
  }
  for (CurveId c = 0; c < map.curve_count(); ++c) {
    if (map.curve(c).kind != CurveKind::kWitness) continue;
    std::string why;
    if (!validate_witness(map, map.curve(c).edge(), &why)) {
      out.push_back({"witness", why});
    }
  }
  return out;
}

CrossingPairSet map_crossing_pairs(const CombinatorialMap& map) {
  CrossingPairSet out;
  for (NodeId x = 0; x < map.node_count(); ++x) {
    if (map.node(x).kind != NodeKind::kCross) continue;
    auto [p, q] = passes(map, x);
    if (p < 0 || q < 0 || p == q) continue;
    const MapCurve &a = map.curve(p), &b = map.curve(q);
    if (!a.is_graph_edge() || !b.is_graph_edge()) continue;
    if (a.edge().shares_vertex(b.edge())) continue;
    out.emplace(a.edge(), b.edge());
  }
  return out;
}

RotationSystem extract_rotation_system(const CombinatorialMap& map) {
  auto labels = map.real_labels();
  const int n = static_cast<int>(labels.size());
  for (int i = 0; i < n; ++i) {
    if (labels[i] != i + 1) {
      throw InputError("real vertices must be labeled 1..n");
    }
  }
  std::vector<std::vector<Vertex>> rot(n);
  for (NodeId x = 0; x < map.node_count(); ++x) {
    const MapNode& node = map.node(x);
    if (node.kind != NodeKind::kReal) continue;
    for (DartId d : node.rotation) {
      CurveId c = map.curve_of(d);
      if (c < 0 || !map.curve(c).is_graph_edge()) continue;
      rot[node.label - 1].push_back(map.curve(c).edge().other(node.label));
    }
    if (static_cast<int>(rot[node.label - 1].size()) != n - 1) {
      throw InputError("graph is not complete at vertex " +
                       std::to_string(node.label));
    }
  }
  try {
    return RotationSystem(std::move(rot));
  } catch (const InputError& e) {
    throw InputError(std::string("graph is not a simple complete graph: ") +
                     e.what());
  }
}

std::vector<std::vector<DartId>> faces(const CombinatorialMap& map) {
  std::vector<std::vector<DartId>> out;
  for (FaceId f = 0; f < map.face_count(); ++f) out.push_back(map.face(f));
  return out;
}

DualGraph dual(const CombinatorialMap& map) {
  DualGraph g;
  g.node_count = map.face_count();
  for (DartId d = 0; d < map.dart_count(); ++d) {
    g.arcs.push_back(
        {map.face_of(d), map.face_of(map.twin(d)), d, map.curve_of(d)});
  }
  return g;
}

std::string serialize_cmap(const CombinatorialMap& map) {
  std::ostringstream out;
  int real = 0;
  for (NodeId x = 0; x < map.node_count(); ++x) {
    if (map.node(x).kind == NodeKind::kReal) ++real;
  }
  out << "cmap v1\n";
  out << "real " << real << "\n";
  for (NodeId x = 0; x < map.node_count(); ++x) {
    const MapNode& n = map.node(x);
    out << "vertex " << x;
    if (n.kind == NodeKind::kReal) {
      out << " real " << n.label;
    } else {
      out << " cross";
    }
    out << " :";
    for (DartId d : n.rotation) out << ' ' << d;
    out << '\n';
  }
  for (CurveId c = 0; c < map.curve_count(); ++c) {
    auto darts = map.curve_darts(c);
    for (std::size_t i = 0; i < darts.size(); ++i) {
      out << "segment " << darts[i] << ' ' << map.twin(darts[i]) << " curve "
          << c << " idx " << i << '\n';
    }
  }
  for (DartId d = 0; d < map.dart_count(); ++d) {
    if (map.curve_of(d) < 0 && d < map.twin(d)) {
      out << "segment " << d << ' ' << map.twin(d) << " curve -1 idx 0\n";
    }
  }
  for (CurveId c = 0; c < map.curve_count(); ++c) {
    const MapCurve& cv = map.curve(c);
    out << "curve " << c << ' ' << to_string(cv.kind) << ' ' << cv.u << '-'
        << cv.v << '\n';
  }
  return out.str();
}

namespace {

[[noreturn]] void cmap_error(int line, const std::string& what) {
  throw InputError("cmap line " + std::to_string(line) + ": " + what);
}

int to_int(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    cmap_error(line, "expected an integer, got '" + tok + "'");
  }
}

}  // namespace

CombinatorialMap parse_cmap(const std::string& text) {
  struct VertexLine {
    bool real = false;
    Vertex label = 0;
    std::vector<DartId> darts;
  };
  struct SegmentLine {
    DartId a, b;
    CurveId curve;
    int idx;
    int line;
  };
  struct CurveLine {
    CurveKind kind;
    Vertex u, v;
  };
  std::map<NodeId, VertexLine> vertices;
  std::vector<SegmentLine> segments;
  std::map<CurveId, CurveLine> curve_lines;
  int declared_real = -1;
  bool header = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line;
    for (char ch : raw) {
      if (ch == ':') line += " : ";
      else if (ch == '#') break;
      else line += ch;
    }
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!header) {
      if (tok.size() != 2 || tok[0] != "cmap" || tok[1] != "v1") {
        cmap_error(lineno, "expected 'cmap v1' header");
      }
      header = true;
      continue;
    }
    if (tok[0] == "real") {
      if (tok.size() != 2) cmap_error(lineno, "expected 'real <k>'");
      declared_real = to_int(tok[1], lineno);
    } else if (tok[0] == "vertex") {
      if (tok.size() < 4) cmap_error(lineno, "truncated vertex line");
      NodeId id = to_int(tok[1], lineno);
      VertexLine v;
      std::size_t k = 2;
      if (tok[k] == "real") {
        if (tok.size() < 5) cmap_error(lineno, "truncated vertex line");
        v.real = true;
        v.label = to_int(tok[k + 1], lineno);
        k += 2;
      } else if (tok[k] == "cross") {
        k += 1;
      } else {
        cmap_error(lineno, "vertex kind must be 'real' or 'cross'");
      }
      if (tok[k] != ":") cmap_error(lineno, "expected ':' before dart list");
      for (++k; k < tok.size(); ++k) v.darts.push_back(to_int(tok[k], lineno));
      if (id < 0 || !vertices.emplace(id, std::move(v)).second) {
        cmap_error(lineno, "duplicate or negative vertex id");
      }
    } else if (tok[0] == "segment") {
      if (tok.size() != 7 || tok[3] != "curve" || tok[5] != "idx") {
        cmap_error(lineno, "expected 'segment <a> <b> curve <c> idx <i>'");
      }
      segments.push_back({to_int(tok[1], lineno), to_int(tok[2], lineno),
                          to_int(tok[4], lineno), to_int(tok[6], lineno),
                          lineno});
    } else if (tok[0] == "curve") {
      if (tok.size() != 4) cmap_error(lineno, "expected 'curve <c> <kind> <u>-<v>'");
      CurveId id = to_int(tok[1], lineno);
      CurveLine c;
      if (tok[2] == "edge") c.kind = CurveKind::kEdge;
      else if (tok[2] == "witness") c.kind = CurveKind::kWitness;
      else if (tok[2] == "inserted") c.kind = CurveKind::kInserted;
      else cmap_error(lineno, "unknown curve kind '" + tok[2] + "'");
      auto dash = tok[3].find('-');
      if (dash == std::string::npos) cmap_error(lineno, "expected <u>-<v>");
      c.u = to_int(tok[3].substr(0, dash), lineno);
      c.v = to_int(tok[3].substr(dash + 1), lineno);
      if (id < 0 || !curve_lines.emplace(id, c).second) {
        cmap_error(lineno, "duplicate or negative curve id");
      }
    } else {
      cmap_error(lineno, "unknown record '" + tok[0] + "'");
    }
  }
  if (!header) cmap_error(lineno, "empty input");

  const int nn = static_cast<int>(vertices.size());
  if (!vertices.empty() && vertices.rbegin()->first != nn - 1) {
    cmap_error(lineno, "vertex ids must be 0..N-1");
  }
  const int nc = static_cast<int>(curve_lines.size());
  if (!curve_lines.empty() && curve_lines.rbegin()->first != nc - 1) {
    cmap_error(lineno, "curve ids must be 0..C-1");
  }
  int real = 0;
  int nd = 0;
  for (const auto& [id, v] : vertices) {
    real += v.real ? 1 : 0;
    nd += static_cast<int>(v.darts.size());
  }
  if (declared_real >= 0 && declared_real != real) {
    cmap_error(lineno, "'real " + std::to_string(declared_real) + "' but " +
                           std::to_string(real) + " real vertices listed");
  }

  MapBuilder b;
  for (const auto& [id, v] : vertices) {
    if (v.real) b.add_real_node(v.label);
    else b.add_cross_node();
  }
  std::vector<NodeId> owner(nd, -1);
  for (const auto& [id, v] : vertices) {
    for (DartId d : v.darts) {
      if (d < 0 || d >= nd || owner[d] != -1) {
        cmap_error(lineno, "dart ids must be 0..D-1, each listed once");
      }
      owner[d] = id;
    }
  }
  for (DartId d = 0; d < nd; ++d) b.add_dart(owner[d]);
  for (const auto& [id, v] : vertices) b.set_rotation(id, v.darts);

  std::vector<bool> paired(nd, false);
  std::map<CurveId, DartId> starts;
  for (const auto& s : segments) {
    if (s.a < 0 || s.a >= nd || s.b < 0 || s.b >= nd || s.a == s.b ||
        paired[s.a] || paired[s.b]) {
      cmap_error(s.line, "segment darts invalid or reused");
    }
    paired[s.a] = paired[s.b] = true;
    b.set_twin(s.a, s.b);
    if (s.curve >= nc || s.curve < -1) cmap_error(s.line, "unknown curve id");
    if (s.curve >= 0 && s.idx == 0) {
      if (!starts.emplace(s.curve, s.a).second) {
        cmap_error(s.line, "curve has two segments with idx 0");
      }
    }
  }
  for (DartId d = 0; d < nd; ++d) {
    if (!paired[d]) cmap_error(lineno, "dart " + std::to_string(d) + " is in no segment");
  }
  for (const auto& [id, c] : curve_lines) {
    auto it = starts.find(id);
    if (it == starts.end()) {
      cmap_error(lineno, "curve " + std::to_string(id) + " has no segment idx 0");
    }
    b.add_curve(c.kind, c.u, c.v, it->second);
  }
  CombinatorialMap map = b.build();
  for (const auto& s : segments) {
    if (s.curve < 0) continue;
    if (map.curve_of(s.a) != s.curve || map.segment_index(s.a) != s.idx ||
        !map.is_forward(s.a)) {
      cmap_error(s.line, "segment disagrees with the traced curve " +
                             std::to_string(s.curve));
    }
  }
  return map;
}

}  // namespace sepdraw
