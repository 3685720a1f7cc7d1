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

#include "sepdraw/extension.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <utility>

#include "sepdraw/errors.hpp"

namespace sepdraw {
namespace {

using Cost = std::pair<long, long>;

long primary_cost(CurveKind kind, RoutingMetric metric) {
  switch (kind) {
    case CurveKind::kEdge: return 1;
    case CurveKind::kWitness: return metric == RoutingMetric::kWitnessSet ? 1 : 0;
    case CurveKind::kInserted: return 0;
  }
  return 0;
}

Cost cross_cost(const CombinatorialMap& map, DartId d, RoutingMetric metric) {
  CurveId c = map.curve_of(d);
  if (c < 0) throw InvariantError("dart on no curve");
  return {primary_cost(map.curve(c).kind, metric), 1};
}

NodeId node_for(const CombinatorialMap& map, Vertex x) {
  NodeId n = map.real_node(x);
  if (n < 0) throw InputError("vertex " + std::to_string(x) + " is not drawn");
  if (map.node(n).rotation.empty()) {
    throw InputError("vertex " + std::to_string(x) + " is isolated");
  }
  return n;
}

void check_new_edge(const CombinatorialMap& map, Vertex u, Vertex v) {
  if (u == v) throw InputError("an edge needs two distinct endpoints");
  node_for(map, u);
  node_for(map, v);
  if (map.find_graph_edge(Edge(u, v)) >= 0) {
    throw InputError("edge " + to_string(Edge(u, v)) + " is already drawn");
  }
}

void check_witnesses(const CombinatorialMap& map) {
  for (const MapCurve& c : map.curves()) {
    if (c.kind != CurveKind::kEdge) continue;
    std::string why;
    if (!validate_witness(map, c.edge(), &why)) throw InputError(why);
  }
}

// Edge-kind curves that the curve c meets more than once.
std::vector<CurveId> double_contacts(const CombinatorialMap& map, CurveId c) {
  std::vector<CurveId> out;
  for (CurveId f = 0; f < map.curve_count(); ++f) {
    if (f == c || map.curve(f).kind != CurveKind::kEdge) continue;
    if (common_points(map, c, f) > 1) out.push_back(f);
  }
  return out;
}

InsertionResult insert_with(const CombinatorialMap& map, Vertex u, Vertex v,
                            RoutingMetric metric) {
  check_new_edge(map, u, v);
  Route r = min_cost_route(map, u, v, metric);
  InsertionCost cost = route_cost(map, r);
  auto [next, id] = insert_route(map, r, CurveKind::kInserted);
  return {std::move(next), id, cost};
}

// ---- fix-up moves ----------------------------------------------------------

struct CurvePath {
  std::vector<DartId> darts;  // forward
  std::vector<NodeId> nodes;  // darts.size() + 1
  int index_of(NodeId x) const {
    auto it = std::find(nodes.begin(), nodes.end(), x);
    return it == nodes.end() ? -1 : static_cast<int>(it - nodes.begin());
  }
};

CurvePath path_of(const CombinatorialMap& map, CurveId c) {
  return {map.curve_darts(c), map.curve_nodes(c)};
}

// Darts of the curve at the node with index i, pointing towards index j
// (inner) and away from it (outer).
std::pair<DartId, DartId> inner_outer(const CombinatorialMap& map,
                                      const CurvePath& p, int i, int j) {
  if (i < j) return {p.darts[i], map.twin(p.darts[i - 1])};
  return {map.twin(p.darts[i - 1]), p.darts[i]};
}

bool counted(CurveKind kind, RoutingMetric metric) {
  return primary_cost(kind, metric) > 0;
}

// Metric crossings strictly between node indices i and j of a curve.
long piece_cost(const CombinatorialMap& map, CurveId c, const CurvePath& p,
                int i, int j, RoutingMetric metric) {
  long cost = 0;
  for (int k = std::min(i, j) + 1; k < std::max(i, j); ++k) {
    for (DartId d : map.node(p.nodes[k]).rotation) {
      CurveId o = map.curve_of(d);
      if (o != c && counted(map.curve(o).kind, metric)) {
        ++cost;
        break;
      }
    }
  }
  return cost;
}

// Points (shared endpoints and crossings) of curves a and b, as indices
// along a, ascending.
std::vector<int> common_indices(const CombinatorialMap& map, CurveId a,
                                CurveId b, const CurvePath& pa) {
  std::vector<int> out;
  const MapCurve &ca = map.curve(a), &cb = map.curve(b);
  if (ca.u == cb.u || ca.u == cb.v) out.push_back(0);
  for (NodeId x : shared_crossings(map, a, b)) out.push_back(pa.index_of(x));
  if (ca.v == cb.u || ca.v == cb.v) {
    out.push_back(static_cast<int>(pa.nodes.size()) - 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Follows a curve in the builder from a dart at a real node; returns the
// dart it arrives with at the far real node and marks visited darts.
DartId trace(MapBuilder& b, DartId d, std::vector<bool>* seen) {
  for (int guard = 0; guard <= b.dart_count(); ++guard) {
    DartId t = b.twin(d);
    (*seen)[d] = (*seen)[t] = true;
    const MapNode& x = b.node(b.node_of(t));
    if (x.kind == NodeKind::kReal) return t;
    auto it = std::find(x.rotation.begin(), x.rotation.end(), t);
    if (x.rotation.size() != 4 || it == x.rotation.end()) break;
    d = x.rotation[(it - x.rotation.begin() + 2) % 4];
  }
  throw InvariantError("curve does not end at a vertex");
}

void dissolve(MapBuilder& b, const CombinatorialMap& map, NodeId x,
              std::pair<DartId, DartId> p, std::pair<DartId, DartId> q) {
  b.set_twin(b.twin(p.first), b.twin(p.second));
  b.set_twin(b.twin(q.first), b.twin(q.second));
  b.kill_node(x);
  for (DartId d : map.node(x).rotation) b.kill_dart(d);
}

// Exchanges the pieces of curves a and b between the common points at
// indices i < j along a; both crossings become touchings and are smoothed.
CombinatorialMap exchange(const CombinatorialMap& map, CurveId a, CurveId b,
                          int i, int j, RoutingMetric metric) {
  CurvePath pa = path_of(map, a), pb = path_of(map, b);
  const NodeId x1 = pa.nodes[i], x2 = pa.nodes[j];
  const int bi = pb.index_of(x1), bj = pb.index_of(x2);
  if (bi < 0 || bj < 0) throw InvariantError("common point not on both curves");
  long ca = piece_cost(map, a, pa, i, j, metric);
  long cb = piece_cost(map, b, pb, bi, bj, metric);
  if (ca != cb) {
    throw InvariantError("pieces between consecutive common points of " +
                         to_string(map.curve(a).edge()) + " and " +
                         to_string(map.curve(b).edge()) +
                         " have different costs (" + std::to_string(ca) +
                         " vs " + std::to_string(cb) + ")");
  }
  MapBuilder builder(map);
  const int last_a = static_cast<int>(pa.nodes.size()) - 1;
  const int last_b = static_cast<int>(pb.nodes.size()) - 1;
  for (auto [ia, ja, ib, jb] : {std::tuple{i, j, bi, bj}, std::tuple{j, i, bj, bi}}) {
    NodeId x = pa.nodes[ia];
    if (map.node(x).kind == NodeKind::kReal) continue;
    if (ia == 0 || ia == last_a || ib == 0 || ib == last_b) {
      throw InvariantError("crossing at a curve end");
    }
    auto [a_in, a_out] = inner_outer(map, pa, ia, ja);
    auto [b_in, b_out] = inner_outer(map, pb, ib, jb);
    dissolve(builder, map, x, {a_out, b_in}, {b_out, a_in});
  }
  // The two new curves, each from one of the four end darts. With a
  // shared endpoint, b's old start dart may now begin the first curve.
  std::vector<bool> on_first(builder.dart_count(), false), unused(on_first);
  const DartId a_start = pa.darts.front();
  const DartId a_end = trace(builder, a_start, &on_first);
  DartId b_start = -1;
  for (DartId d : {pb.darts.front(), map.twin(pb.darts.back()),
                   map.twin(pa.darts.back())}) {
    if (!on_first[d]) {
      b_start = d;
      break;
    }
  }
  if (b_start < 0) throw InvariantError("exchange lost a curve");
  const DartId b_end = trace(builder, b_start, &unused);
  auto label = [&](DartId d) { return builder.node(builder.node_of(d)).label; };
  MapCurve na = map.curve(a), nb = map.curve(b);
  na.u = label(a_start);
  na.v = label(a_end);
  nb.start = b_start;
  nb.u = label(b_start);
  nb.v = label(b_end);
  builder.set_curve(a, na);
  builder.set_curve(b, nb);
  return builder.build();
}

// Removes the shortest loop of a self-crossing curve. Returns false if the
// curve does not cross itself.
bool remove_one_loop(CombinatorialMap& map, CurveId c) {
  CurvePath p = path_of(map, c);
  int best_i = -1, best_j = -1;
  for (int i = 1; i + 1 < static_cast<int>(p.nodes.size()); ++i) {
    for (int j = i + 1; j + 1 < static_cast<int>(p.nodes.size()); ++j) {
      if (p.nodes[i] != p.nodes[j]) continue;
      if (best_i < 0 || j - i < best_j - best_i) best_i = i, best_j = j;
      break;
    }
  }
  if (best_i < 0) return false;
  MapBuilder b(map);
  const int i = best_i, j = best_j;
  for (int k = i + 1; k < j; ++k) {
    NodeId z = p.nodes[k];
    DartId in = map.twin(p.darts[k - 1]);
    const auto& rot = map.node(z).rotation;
    int pos = map.rotation_position(in);
    dissolve(b, map, z, {rot[(pos + 1) % 4], rot[(pos + 3) % 4]},
             {in, p.darts[k]});
  }
  NodeId y = p.nodes[i];
  DartId in1 = map.twin(p.darts[i - 1]);
  DartId out2 = p.darts[j];
  b.set_twin(b.twin(in1), b.twin(out2));
  b.kill_node(y);
  for (DartId d : map.node(y).rotation) b.kill_dart(d);
  for (int k = i; k < j; ++k) {
    b.kill_dart(p.darts[k]);
    b.kill_dart(map.twin(p.darts[k]));
  }
  map = b.build();
  return true;
}

int cross_node_count(const CombinatorialMap& map) {
  int n = 0;
  for (NodeId x = 0; x < map.node_count(); ++x) {
    n += map.node(x).kind == NodeKind::kCross ? 1 : 0;
  }
  return n;
}

Potential potential(const CombinatorialMap& map, RoutingMetric metric) {
  Potential p;
  for (NodeId x = 0; x < map.node_count(); ++x) {
    const MapNode& node = map.node(x);
    if (node.kind != NodeKind::kCross) continue;
    ++p.secondary;
    CurveId c1 = map.curve_of(node.rotation[0]);
    CurveId c2 = map.curve_of(node.rotation[1]);
    for (auto [mine, other] : {std::pair{c1, c2}, std::pair{c2, c1}}) {
      if (map.curve(mine).kind == CurveKind::kInserted &&
          counted(map.curve(other).kind, metric)) {
        ++p.primary;
      }
    }
  }
  return p;
}

// First pair of graph-edge curves, at least one inserted, sharing two or
// more points.
std::optional<std::pair<CurveId, CurveId>> violating_pair(
    const CombinatorialMap& map) {
  for (CurveId a = 0; a < map.curve_count(); ++a) {
    if (!map.curve(a).is_graph_edge()) continue;
    for (CurveId b = a + 1; b < map.curve_count(); ++b) {
      if (!map.curve(b).is_graph_edge()) continue;
      if (map.curve(a).kind != CurveKind::kInserted &&
          map.curve(b).kind != CurveKind::kInserted) {
        continue;
      }
      if (common_points(map, a, b) > 1) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

ExtensionReport extend(const CombinatorialMap& input, RoutingMetric metric,
                       const PotentialLog& log) {
  const bool separable = metric == RoutingMetric::kWitnessSet;
  CombinatorialMap map = separable ? input : strip_witnesses(input);
  for (const auto& v : validate_map(map)) {
    throw InputError("invalid input map: " + v.message);
  }
  if (separable) check_witnesses(map);
  auto labels = map.real_labels();
  const int n = static_cast<int>(labels.size());
  for (int i = 0; i < n; ++i) {
    if (labels[i] != i + 1) throw InputError("vertices must be labeled 1..n");
  }

  ExtensionReport report;
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) {
      if (map.find_graph_edge(Edge(a, b)) >= 0) continue;
      InsertionResult r = insert_with(map, a, b, metric);
      map = std::move(r.map);
      ++report.inserted;
      auto bad = double_contacts(map, r.curve);
      if (!bad.empty()) {
        std::string msg = "inserted edge " + to_string(Edge(a, b)) +
                          " meets edge " +
                          to_string(map.curve(bad.front()).edge()) + " twice";
        if (separable) throw InvariantError(msg);
        throw NotSimpleError(msg + "; the input is not crossing-minimizing");
      }
    }
  }
  Potential current = potential(map, metric);
  report.potentials.push_back(current);
  if (log) log(current, "insert");

  auto step = [&](const char* move) {
    Potential next = potential(map, metric);
    if (!(next < current)) {
      throw InvariantError(
          "potential did not decrease after " + std::string(move) + ": (" +
          std::to_string(current.primary) + "," +
          std::to_string(current.secondary) + ") -> (" +
          std::to_string(next.primary) + "," + std::to_string(next.secondary) +
          ")");
    }
    current = next;
    report.potentials.push_back(current);
    if (log) log(current, move);
  };

  const long limit = static_cast<long>(cross_node_count(map)) + 1;
  for (long iter = 0;; ++iter) {
    if (iter > limit) throw InvariantError("fix-up did not terminate");
    bool looped = false;
    for (CurveId c = 0; c < map.curve_count(); ++c) {
      if (map.curve(c).kind != CurveKind::kInserted) continue;
      while (remove_one_loop(map, c)) {
        ++report.loop_removals;
        step("loop");
        looped = true;
      }
    }
    if (looped) continue;
    auto pair = violating_pair(map);
    if (!pair) break;
    auto [a, b] = *pair;
    if (map.curve(a).kind != CurveKind::kInserted ||
        map.curve(b).kind != CurveKind::kInserted) {
      std::string msg = "inserted edge meets input edge " +
                        to_string(map.curve(a).edge()) + " / " +
                        to_string(map.curve(b).edge()) + " twice";
      if (separable) throw InvariantError(msg);
      throw NotSimpleError(msg + "; the input is not crossing-minimizing");
    }
    CurvePath pa = path_of(map, a);
    std::vector<int> common = common_indices(map, a, b, pa);
    map = exchange(map, a, b, common[0], common[1], metric);

    ++report.exchanges;
    step("exchange");
  }

  if (separable) map = strip_witnesses(map);
  auto violations = validate_map(map);
  if (!violations.empty()) {
    std::string msg = "extension is not simple: " + violations.front().message;
    if (separable) throw InvariantError(msg);
    throw NotSimpleError(msg);
  }
  extract_rotation_system(map);
  report.map = std::move(map);
  return report;
}

}  // namespace

Route min_cost_route(const CombinatorialMap& map, Vertex u, Vertex v,
                     RoutingMetric metric) {
  const NodeId un = node_for(map, u), vn = node_for(map, v);
  const int nf = map.face_count();
  const Cost inf{std::numeric_limits<long>::max(), 0};
  std::vector<Cost> dist(nf, inf);
  std::vector<bool> is_target(nf, false);
  using Item = std::pair<Cost, FaceId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (const Corner& c : corners_of(map, vn)) {
    is_target[c.face] = true;
    if (dist[c.face] != Cost{0, 0}) {
      dist[c.face] = {0, 0};
      queue.push({{0, 0}, c.face});
    }
  }
  // Distances to the target, over reversed dual arcs.
  while (!queue.empty()) {
    auto [d, g] = queue.top();
    queue.pop();
    if (d != dist[g]) continue;
    for (DartId t : map.face(g)) {
      DartId cross = map.twin(t);
      FaceId f = map.face_of(cross);
      Cost step = cross_cost(map, cross, metric);
      Cost nd{d.first + step.first, d.second + step.second};
      if (nd < dist[f]) {
        dist[f] = nd;
        queue.push({nd, f});
      }
    }
  }
  Corner start;
  for (const Corner& c : corners_of(map, un)) {
    if (start.node < 0 || dist[c.face] < dist[start.face] ||
        (dist[c.face] == dist[start.face] && c.face < start.face)) {
      start = c;
    }
  }
  if (dist[start.face] == inf) throw InvariantError("target face unreachable");
  Route route;
  route.from = start;
  FaceId f = start.face;
  while (!is_target[f]) {
    DartId best = -1;
    FaceId best_face = -1;
    for (DartId d : map.face(f)) {
      FaceId g = map.face_of(map.twin(d));
      Cost step = cross_cost(map, d, metric);
      Cost via{step.first + dist[g].first, step.second + dist[g].second};
      if (dist[g] == inf || via != dist[f]) continue;
      if (best < 0 || g < best_face || (g == best_face && d < best)) {
        best = d;
        best_face = g;
      }
    }
    if (best < 0) throw InvariantError("shortest route reconstruction failed");
    route.crossings.push_back(best);
    f = best_face;
  }
  for (const Corner& c : corners_of(map, vn)) {
    if (c.face == f) {
      route.to = c;
      break;
    }
  }
  return route;
}

InsertionCost route_cost(const CombinatorialMap& map, const Route& route) {
  InsertionCost cost;
  for (DartId d : route.crossings) {
    switch (map.curve(map.curve_of(d)).kind) {
      case CurveKind::kEdge:
        ++cost.graph_edges;
        ++cost.witness_set;
        break;
      case CurveKind::kWitness:
        ++cost.witness_arcs;
        ++cost.witness_set;
        break;
      case CurveKind::kInserted:
        ++cost.inserted;
        break;
    }
  }
  return cost;
}

InsertionResult insert_min_witness_crossings(const CombinatorialMap& map,
                                             Vertex u, Vertex v) {
  check_witnesses(map);
  InsertionResult r = insert_with(map, u, v, RoutingMetric::kWitnessSet);
  auto bad = double_contacts(r.map, r.curve);
  if (!bad.empty()) {
    throw InvariantError("inserted edge meets edge " +
                         to_string(r.map.curve(bad.front()).edge()) + " twice");
  }
  return r;
}

InsertionResult insert_min_crossings(const CombinatorialMap& map, Vertex u,
                                     Vertex v) {
  InsertionResult r =
      insert_with(strip_witnesses(map), u, v, RoutingMetric::kCrossings);
  auto bad = double_contacts(r.map, r.curve);
  if (!bad.empty()) {
    throw NotSimpleError("inserted edge meets edge " +
                         to_string(r.map.curve(bad.front()).edge()) +
                         " twice; the input is not crossing-minimizing");
  }
  return r;
}

ExtensionReport extend_to_complete_separable(const CombinatorialMap& map,
                                             const PotentialLog& log) {
  return extend(map, RoutingMetric::kWitnessSet, log);
}

ExtensionReport extend_to_complete_crossmin(const CombinatorialMap& map,
                                            const PotentialLog& log) {
  return extend(map, RoutingMetric::kCrossings, log);
}

}  // namespace sepdraw
