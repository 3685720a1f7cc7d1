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

#ifndef SEPDRAW_COMBINATORIAL_MAP_HPP_
#define SEPDRAW_COMBINATORIAL_MAP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepdraw/rotation_system.hpp"

namespace sepdraw {

using DartId = int;
using NodeId = int;
using CurveId = int;
using FaceId = int;

enum class NodeKind : std::uint8_t { kReal, kCross };
enum class CurveKind : std::uint8_t { kEdge, kWitness, kInserted };

const char* to_string(CurveKind kind);

struct MapNode {
  NodeKind kind = NodeKind::kReal;
  Vertex label = 0;                // real nodes only
  std::vector<DartId> rotation;    // clockwise
};

// A curve runs from real vertex u to real vertex v. Edge and inserted curves
// are edges of the drawn graph; a witness curve for edge {u,v} is the arc
// closing that edge to a simple closed curve.
struct MapCurve {
  CurveKind kind = CurveKind::kEdge;
  Vertex u = 0;
  Vertex v = 0;
  DartId start = -1;  // dart at u leaving along the curve

  Edge edge() const { return Edge(u, v); }
  bool is_graph_edge() const { return kind != CurveKind::kWitness; }
};

// Planarization of a drawing on the sphere.
//
// Darts are half-segments. twin() is the segment involution and sigma() the
// clockwise successor around a node. Cross nodes have degree four and every
// curve passes straight through them: a curve entering via dart d leaves
// via the dart opposite d in the rotation. Curve membership and segment
// indices are derived by tracing each curve from its start dart.
class CombinatorialMap {
 public:
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int dart_count() const { return static_cast<int>(twin_.size()); }
  int segment_count() const { return dart_count() / 2; }
  int curve_count() const { return static_cast<int>(curves_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  const MapNode& node(NodeId id) const { return nodes_[id]; }
  const MapCurve& curve(CurveId id) const { return curves_[id]; }
  const std::vector<MapCurve>& curves() const { return curves_; }

  NodeId node_of(DartId d) const { return dart_node_[d]; }
  DartId twin(DartId d) const { return twin_[d]; }
  DartId sigma(DartId d) const;
  DartId sigma_inv(DartId d) const;
  int rotation_position(DartId d) const { return rot_pos_[d]; }

  // Owning curve (-1 if no curve traces this dart).
  CurveId curve_of(DartId d) const { return dart_curve_[d]; }
  // Segment index along the owning curve.
  int segment_index(DartId d) const { return dart_index_[d]; }
  // True if d points in the direction of its curve.
  bool is_forward(DartId d) const { return dart_forward_[d]; }

  // Faces are the orbits of d -> sigma(twin(d)); face_of(d) lies on the
  // left of d.
  FaceId face_of(DartId d) const { return face_of_[d]; }
  int face_position(DartId d) const { return face_pos_[d]; }
  const std::vector<DartId>& face(FaceId f) const { return faces_[f]; }

  // -1 if the label is absent.
  NodeId real_node(Vertex label) const;
  std::vector<Vertex> real_labels() const;

  // Nodes visited by a curve, endpoints included.
  std::vector<NodeId> curve_nodes(CurveId c) const;
  // Darts of a curve in order, each pointing forward.
  std::vector<DartId> curve_darts(CurveId c) const;

  // First curve of the given kind joining u and v, or -1.
  CurveId find_curve(CurveKind kind, const Edge& e) const;
  // Edge or inserted curve joining u and v, or -1.
  CurveId find_graph_edge(const Edge& e) const;

  // Problems found while tracing curves (uncovered darts, curves not ending
  // at their declared endpoint, cross nodes of the wrong degree, ...).
  const std::vector<std::string>& trace_problems() const {
    return trace_problems_;
  }

 private:
  friend class MapBuilder;

  void reindex();

  std::vector<MapNode> nodes_;
  std::vector<NodeId> dart_node_;
  std::vector<DartId> twin_;
  std::vector<MapCurve> curves_;

  std::vector<int> rot_pos_;
  std::vector<CurveId> dart_curve_;
  std::vector<int> dart_index_;
  std::vector<bool> dart_forward_;
  std::vector<FaceId> face_of_;
  std::vector<int> face_pos_;
  std::vector<std::vector<DartId>> faces_;
  std::vector<std::string> trace_problems_;
};

// Mutable construction and editing of maps. build() checks that the
// rotations partition the darts and twin() is a fixed-point-free involution
// (InputError otherwise); everything else is left to validate_map.
class MapBuilder {
 public:
  MapBuilder() = default;
  explicit MapBuilder(const CombinatorialMap& map);

  NodeId add_real_node(Vertex label);
  NodeId add_cross_node();
  // A dart at `node` with no twin yet.
  DartId add_dart(NodeId node);
  // Two new darts, at a and at b, twinned. Rotations are not touched.
  std::pair<DartId, DartId> add_segment(NodeId a, NodeId b);
  void set_rotation(NodeId node, std::vector<DartId> rotation);
  // Inserts d right after `after` in the rotation of node_of(after).
  void insert_after(DartId after, DartId d);
  void set_twin(DartId a, DartId b);
  CurveId add_curve(CurveKind kind, Vertex u, Vertex v, DartId start);
  void set_curve(CurveId id, MapCurve curve);

  int node_count() const { return static_cast<int>(map_.nodes_.size()); }
  int dart_count() const { return static_cast<int>(map_.twin_.size()); }
  MapNode& node(NodeId id) { return map_.nodes_[id]; }
  NodeId node_of(DartId d) const { return map_.dart_node_[d]; }
  DartId twin(DartId d) const { return map_.twin_[d]; }
  std::vector<MapCurve>& curves() { return map_.curves_; }

  // Drops dead darts/nodes (nodes with `dead` set via kill_node, darts whose
  // twin is -1) and renumbers everything densely.
  void kill_node(NodeId id);
  void kill_dart(DartId d);

  CombinatorialMap build() const;

 private:
  CombinatorialMap map_;
  std::vector<bool> dead_nodes_;
  std::vector<bool> dead_darts_;
};

// A corner of a node: the angle between dart `after` and its clockwise
// successor. `after` is -1 for an isolated node, whose single corner is the
// face `face`.
struct Corner {
  NodeId node = -1;
  DartId after = -1;
  FaceId face = -1;
};

FaceId corner_face(const CombinatorialMap& map, const Corner& c);
std::vector<Corner> corners_of(const CombinatorialMap& map, NodeId node);

// A curve drawn through the map: leaves `from`, crosses the segment of each
// listed dart d going from face_of(d) to face_of(twin(d)), ends in `to`.
struct Route {
  Corner from;
  std::vector<DartId> crossings;
  Corner to;
};

// Draws `route` as a new curve; returns the new map and the curve id.
std::pair<CombinatorialMap, CurveId> insert_route(const CombinatorialMap& map,
                                                  const Route& route,
                                                  CurveKind kind);

// Removes a curve; its crossings dissolve into the curves they crossed.
CombinatorialMap remove_curve(const CombinatorialMap& map, CurveId c);

// Removes every witness curve.
CombinatorialMap strip_witnesses(const CombinatorialMap& map);

// Adds an isolated real vertex (for incremental construction).
CombinatorialMap with_isolated_vertex(const CombinatorialMap& map,
                                      Vertex label);

// Number of points (shared real endpoints plus crossings) two curves have in
// common; a curve crossing itself counts toward neither.
int common_points(const CombinatorialMap& map, CurveId a, CurveId b);

// Cross nodes where curves a and b meet.
std::vector<NodeId> shared_crossings(const CombinatorialMap& map, CurveId a,
                                     CurveId b);

struct Violation {
  std::string code;
  std::string message;
};

std::vector<Violation> validate_map(const CombinatorialMap& map);

// Witness conditions for the witness curve of e; on failure `why` (if given)
// receives the reason.
bool validate_witness(const CombinatorialMap& map, const Edge& e,
                      std::string* why = nullptr);

// Crossing pairs of graph-edge curves.
CrossingPairSet map_crossing_pairs(const CombinatorialMap& map);

// Clockwise order of graph edges at every real vertex. Throws InputError
// unless the graph edges form a complete graph on labels 1..n.
RotationSystem extract_rotation_system(const CombinatorialMap& map);

struct DualArc {
  FaceId from = -1;
  FaceId to = -1;
  DartId dart = -1;  // crossing this dart's segment leads from -> to
  CurveId curve = -1;
};

struct DualGraph {
  int node_count = 0;
  std::vector<DualArc> arcs;  // two per segment, one per direction
};

std::vector<std::vector<DartId>> faces(const CombinatorialMap& map);
DualGraph dual(const CombinatorialMap& map);

// `cmap v1` text format.
std::string serialize_cmap(const CombinatorialMap& map);
CombinatorialMap parse_cmap(const std::string& text);

}  // namespace sepdraw

#endif  // SEPDRAW_COMBINATORIAL_MAP_HPP_
