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

#include "sepdraw/separability.hpp"

#include <algorithm>

#include "sepdraw/errors.hpp"

namespace sepdraw {
namespace {

void check_edge(const RotationSystem& rs, const Edge& e) {
  if (e.a < 1 || e.b > rs.size() || e.a == e.b) {
    throw InputError("invalid edge " + to_string(e));
  }
}

bool disjoint(std::vector<Edge> x, std::vector<Edge> y) {
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  std::vector<Edge> both;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                        std::back_inserter(both));
  return both.empty();
}

}  // namespace

std::vector<FlipCandidate> flip_candidates(const RotationSystem& rs,
                                           const Edge& e) {
  check_edge(rs, e);
  const int n = rs.size();
  const Vertex v = e.b, w = e.a;
  std::vector<char> odd(n + 1, 0);
  int count = 0;
  auto toggle = [&](Vertex x) {
    odd[x] ^= 1;
    count += odd[x] ? 1 : -1;
  };
  std::vector<FlipCandidate> out;
  std::vector<Vertex> swept;
  Vertex p = w, q = v;
  for (int i = 1; i <= n - 2; ++i) {
    p = rs.next_ccw(v, p);
    q = rs.next_cw(w, q);
    toggle(p);
    toggle(q);
    swept.push_back(p);
    if (count == 0) {
      FlipCandidate c{e, v, w, p, q, swept};
      std::sort(c.swept.begin(), c.swept.end());
      out.push_back(std::move(c));
    }
  }
  return out;
}

RotationSystem apply_flip(const RotationSystem& rs, const FlipCandidate& c) {
  auto moved = [](std::span<const Vertex> rot, Vertex x, Vertex anchor,
                  bool before) {
    std::vector<Vertex> r;
    for (Vertex y : rot) {
      if (y != x) r.push_back(y);
    }
    auto it = std::find(r.begin(), r.end(), anchor);
    r.insert(before ? it : it + 1, x);
    return r;
  };
  // Counter-clockwise after p is clockwise before p.
  RotationSystem out =
      rs.with_rotation(c.v, moved(rs.rotation(c.v), c.w, c.after_v, true));
  return out.with_rotation(c.w, moved(rs.rotation(c.w), c.v, c.after_w, false));
}

std::vector<Flip> valid_flips(const RealizabilityTables& tables,
                              const RotationSystem& rs, const Edge& e) {
  std::vector<Flip> out;
  std::vector<Edge> before = edges_crossing(tables, rs, e);
  for (const FlipCandidate& c : flip_candidates(rs, e)) {
    RotationSystem next = apply_flip(rs, c);
    if (!is_realizable_touching(tables, next, e)) continue;
    if (!disjoint(before, edges_crossing(tables, next, e))) continue;
    out.push_back({e, c.v, c.w, c.swept, std::move(next)});
  }
  return out;
}

std::optional<SeparatorEvidence> is_separator_edge(
    const RealizabilityTables& tables, const RotationSystem& rs,
    const Edge& e) {
  check_edge(rs, e);
  std::vector<Edge> before = edges_crossing(tables, rs, e);
  if (before.empty()) return SeparatorEvidence{e, SeparatorKind::kUncrossed, {}};
  for (const FlipCandidate& c : flip_candidates(rs, e)) {
    RotationSystem next = apply_flip(rs, c);
    if (!is_realizable_touching(tables, next, e)) continue;
    if (!disjoint(before, edges_crossing(tables, next, e))) continue;
    return SeparatorEvidence{e, SeparatorKind::kFlip,
                             Flip{e, c.v, c.w, c.swept, std::move(next)}};
  }
  return std::nullopt;
}

SeparabilityResult is_separable(const RealizabilityTables& tables,
                                const RotationSystem& rs) {
  SeparabilityResult result;
  const int n = rs.size();
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) {
      if (auto ev = is_separator_edge(tables, rs, Edge(a, b))) {
        result.certificate.push_back(std::move(*ev));
      } else {
        result.failing.emplace_back(a, b);
      }
    }
  }
  result.separable = result.failing.empty();
  return result;
}

std::pair<std::vector<Vertex>, std::vector<Vertex>> side_partition(
    const RotationSystem& rs, const Flip& flip) {
  std::vector<Vertex> v1 = flip.swept, v2;
  v1.push_back(flip.v);
  v1.push_back(flip.w);
  std::sort(v1.begin(), v1.end());
  for (Vertex x = 1; x <= rs.size(); ++x) {
    if (x == flip.v || x == flip.w ||
        !std::binary_search(flip.swept.begin(), flip.swept.end(), x)) {
      v2.push_back(x);
    }
  }
  return {v1, v2};
}

std::pair<std::vector<Vertex>, std::vector<Vertex>> side_partition(
    const RotationSystem& rs, const SeparatorEvidence& evidence) {
  if (evidence.kind == SeparatorKind::kFlip) {
    return side_partition(rs, *evidence.flip);
  }
  std::vector<Vertex> all(rs.size());
  for (int i = 0; i < rs.size(); ++i) all[i] = i + 1;
  return {{evidence.edge.a, evidence.edge.b}, all};
}

std::vector<int> separator_degrees(const RealizabilityTables& tables,
                                   const RotationSystem& rs) {
  const int n = rs.size();
  std::vector<int> deg(n, 0);
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) {
      if (is_separator_edge(tables, rs, Edge(a, b))) {
        ++deg[a - 1];
        ++deg[b - 1];
      }
    }
  }
  return deg;
}

std::optional<SeparatorEvidence> find_any_separator_edge(
    const RealizabilityTables& tables, const RotationSystem& rs) {
  const int n = rs.size();
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) {
      if (auto ev = is_separator_edge(tables, rs, Edge(a, b))) return ev;
    }
  }
  return std::nullopt;
}

}  // namespace sepdraw
