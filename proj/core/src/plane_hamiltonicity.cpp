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

#include "sepdraw/plane_hamiltonicity.hpp"

#include <algorithm>
#include <optional>

#include "sepdraw/errors.hpp"
#include "sepdraw/separability.hpp"

namespace sepdraw {
namespace {

std::string set_name(const std::vector<Vertex>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += (i ? "," : "") + std::to_string(s[i]);
  }
  return out + "}";
}

// Separator edge evidence on the subdrawing induced by `set`, translated
// back to original labels as a pair of sides.
struct Split {
  Edge edge;
  std::vector<Vertex> side1;
  std::vector<Vertex> side2;
};

std::vector<Vertex> lift(const std::vector<Vertex>& set,
                         const std::vector<Vertex>& local) {
  std::vector<Vertex> out;
  for (Vertex x : local) out.push_back(set[x - 1]);
  return out;
}

std::optional<Split> split_at(const RealizabilityTables& tables,
                              const RotationSystem& sub,
                              const std::vector<Vertex>& set, int i, int j) {
  auto ev = is_separator_edge(tables, sub, Edge(i + 1, j + 1));
  if (!ev) return std::nullopt;
  auto [v1, v2] = side_partition(sub, *ev);
  return Split{Edge(set[i], set[j]), lift(set, v1), lift(set, v2)};
}

class Builder {
 public:
  Builder(const RealizabilityTables& tables, const RotationSystem& rs)
      : tables_(tables), rs_(rs) {}

  std::vector<Vertex> path(const std::vector<Vertex>& set, Vertex v, Vertex w,
                           bool reversed_once = false) {
    if (set.size() == 2) return {v, w};
    RotationSystem sub = subrotation(rs_, set);
    const int iv = index(set, v);
    for (int j = 0; j < static_cast<int>(set.size()); ++j) {
      if (set[j] == v || set[j] == w) continue;
      auto split = split_at(tables_, sub, set, iv, j);
      if (!split) continue;
      const Vertex vp = set[j];
      bool w_in_first = std::binary_search(split->side1.begin(),
                                           split->side1.end(), w);
      std::vector<Vertex> d1 = w_in_first ? split->side2 : split->side1;
      std::vector<Vertex> d2 = w_in_first ? split->side1 : split->side2;
      d2.erase(std::find(d2.begin(), d2.end(), v));
      std::vector<Vertex> p1 = path(d1, v, vp);
      std::vector<Vertex> p2 = path(d2, vp, w);
      p1.insert(p1.end(), p2.begin() + 1, p2.end());
      return p1;
    }
    if (!reversed_once) {
      std::vector<Vertex> p = path(set, w, v, true);
      std::reverse(p.begin(), p.end());
      return p;
    }
    throw NoSeparatorEdgeError("no separator edge at " + std::to_string(w) +
                               " or " + std::to_string(v) + " in the subdrawing on " +
                               set_name(set));
  }

  std::vector<Edge> matching(const std::vector<Vertex>& set) {
    if (set.size() < 2) return {};
    RotationSystem sub = subrotation(rs_, set);
    const int m = static_cast<int>(set.size());
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        auto split = split_at(tables_, sub, set, i, j);
        if (!split) continue;
        std::vector<Edge> out = {split->edge};
        for (auto* side : {&split->side1, &split->side2}) {
          std::vector<Vertex> rest;
          for (Vertex x : *side) {
            if (!split->edge.contains(x)) rest.push_back(x);
          }
          auto part = matching(rest);
          out.insert(out.end(), part.begin(), part.end());
        }
        return out;
      }
    }
    throw NoSeparatorEdgeError("no separator edge in the subdrawing on " +
                               set_name(set));
  }

 private:
  static int index(const std::vector<Vertex>& set, Vertex v) {
    return static_cast<int>(std::find(set.begin(), set.end(), v) - set.begin());
  }

  const RealizabilityTables& tables_;
  const RotationSystem& rs_;
};

std::vector<Vertex> all_vertices(int n) {
  std::vector<Vertex> s(n);
  for (int i = 0; i < n; ++i) s[i] = i + 1;
  return s;
}

}  // namespace

std::vector<Edge> PlanePath::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    out.emplace_back(vertices[i], vertices[i + 1]);
  }
  return out;
}

std::vector<Edge> PlaneCycle::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
  }
  return out;
}

PlanePath ham_path(const RealizabilityTables& tables, const RotationSystem& rs,
                   Vertex v, Vertex w) {
  const int n = rs.size();
  if (v < 1 || v > n || w < 1 || w > n || v == w) {
    throw InputError("ham_path needs two distinct vertices of 1.." +
                     std::to_string(n));
  }
  return {Builder(tables, rs).path(all_vertices(n), v, w)};
}

PlaneCycle ham_cycle(const RealizabilityTables& tables,
                     const RotationSystem& rs) {
  const int n = rs.size();
  if (n < 3) throw InputError("a Hamiltonian cycle needs n >= 3");
  auto ev = find_any_separator_edge(tables, rs);
  if (!ev) {
    throw NoSeparatorEdgeError("no separator edge in the subdrawing on " +
                               set_name(all_vertices(n)));
  }
  auto [v1, v2] = side_partition(rs, *ev);
  const Vertex v = ev->edge.a, w = ev->edge.b;
  Builder b(tables, rs);
  std::vector<Vertex> p1 = b.path(v1, v, w);
  std::vector<Vertex> p2 = b.path(v2, v, w);
  // p1 runs v..w; return along p2 from w back to v.
  for (auto it = p2.rbegin() + 1; it + 1 != p2.rend(); ++it) p1.push_back(*it);
  return {p1};
}

PlaneMatching plane_matching(const RealizabilityTables& tables,
                             const RotationSystem& rs) {
  PlaneMatching m{Builder(tables, rs).matching(all_vertices(rs.size()))};
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

bool verify_crossing_free(const RealizabilityTables& tables,
                          const RotationSystem& rs,
                          const std::vector<Edge>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].shares_vertex(edges[j])) continue;
      if (pair_crossing(tables, rs, edges[i], edges[j])) return false;
    }
  }
  return true;
}

}  // namespace sepdraw
