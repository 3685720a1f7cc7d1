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

#include "sepdraw/realizability.hpp"

#include <algorithm>
#include <sstream>

#include "sepdraw/errors.hpp"

namespace sepdraw {

int RealizabilityTables::k5_count() const {
  return static_cast<int>(std::count(k5.begin(), k5.end(), true));
}

std::string RealizabilityTables::serialize() const {
  std::ostringstream out;
  out << "tables v1\n";
  for (int i = 0; i < kK4Keys; ++i) {
    out << "k4 " << i << ' ';
    switch (k4[i].cls) {
      case K4Class::kUnrealizable: out << "unreal"; break;
      case K4Class::kNoCrossing: out << "none"; break;
      case K4Class::kCrossing: out << "cross " << k4[i].pairing; break;
    }
    out << '\n';
  }
  out << "k5 " << k5_count() << '\n';
  for (int i = 0; i < kK5Keys; ++i) {
    if (k5[i]) out << i << '\n';
  }
  return out.str();
}

RealizabilityTables RealizabilityTables::parse(const std::string& text) {
  RealizabilityTables t;
  std::istringstream in(text);
  std::string word, version;
  if (!(in >> word >> version) || word != "tables" || version != "v1") {
    throw InputError("tables: missing 'tables v1' header");
  }
  std::array<bool, kK4Keys> seen{};
  for (int i = 0; i < kK4Keys; ++i) {
    int idx = -1;
    std::string cls;
    if (!(in >> word >> idx >> cls) || word != "k4" || idx < 0 ||
        idx >= kK4Keys || seen[idx]) {
      throw InputError("tables: bad k4 record " + std::to_string(i));
    }
    seen[idx] = true;
    if (cls == "unreal") {
      t.k4[idx] = {K4Class::kUnrealizable, 0};
    } else if (cls == "none") {
      t.k4[idx] = {K4Class::kNoCrossing, 0};
    } else if (cls == "cross") {
      int code = -1;
      if (!(in >> code) || code < 0 || code > 2) {
        throw InputError("tables: bad pairing code in k4 record " +
                         std::to_string(idx));
      }
      t.k4[idx] = {K4Class::kCrossing, code};
    } else {
      throw InputError("tables: unknown k4 class '" + cls + "'");
    }
  }
  int count = -1;
  if (!(in >> word >> count) || word != "k5" || count < 0 || count > kK5Keys) {
    throw InputError("tables: bad k5 header");
  }
  int prev = -1;
  for (int i = 0; i < count; ++i) {
    int idx = -1;
    if (!(in >> idx) || idx <= prev || idx >= kK5Keys) {
      throw InputError("tables: k5 indices must be sorted and in range");
    }
    t.k5[idx] = true;
    prev = idx;
  }
  if (in >> word) throw InputError("tables: trailing data '" + word + "'");
  return t;
}

int k4_index(const RotationSystem& rs, std::span<const Vertex, 4> s) {
  int index = 0;
  for (int i = 0; i < 4; ++i) {
    Vertex o[3];
    int k = 0;
    for (int j = 0; j < 4; ++j) {
      if (j != i) o[k++] = s[j];
    }
    if (!cyclically_ordered(rs, s[i], o[0], o[1], o[2])) index |= 1 << i;
  }
  return index;
}

int k5_index(const RotationSystem& rs, std::span<const Vertex, 5> s) {
  const int len = rs.size() - 1;
  int index = 0;
  int scale = 1;
  for (int i = 0; i < 5; ++i) {
    Vertex o[4];
    int k = 0;
    for (int j = 0; j < 5; ++j) {
      if (j != i) o[k++] = s[j];
    }
    const int base = rs.position(s[i], o[0]);
    int rel[3];
    for (int j = 0; j < 3; ++j) {
      rel[j] = (rs.position(s[i], o[j + 1]) - base + len) % len;
    }
    // Rank of the order of o[1..3] after o[0], among the 6 permutations in
    // lexicographic order.
    int first = 0;
    for (int j = 1; j < 3; ++j) {
      if (rel[j] < rel[first]) first = j;
    }
    int a = first == 0 ? 1 : 0;
    int b = first == 2 ? 1 : 2;
    int digit = first * 2 + (rel[a] < rel[b] ? 0 : 1);
    index += digit * scale;
    scale *= 6;
  }
  return index;
}

int k4_index(const RotationSystem& rs) {
  if (rs.size() != 4) throw InputError("k4_index needs 4 vertices");
  static constexpr Vertex s[4] = {1, 2, 3, 4};
  return k4_index(rs, std::span<const Vertex, 4>(s));
}

int k5_index(const RotationSystem& rs) {
  if (rs.size() != 5) throw InputError("k5_index needs 5 vertices");
  static constexpr Vertex s[5] = {1, 2, 3, 4, 5};
  return k5_index(rs, std::span<const Vertex, 5>(s));
}

RotationSystem k4_rotation_system(int index) {
  if (index < 0 || index >= kK4Keys) throw InputError("k4 index out of range");
  std::vector<std::vector<Vertex>> rot(4);
  for (int i = 0; i < 4; ++i) {
    for (Vertex u = 1; u <= 4; ++u) {
      if (u != i + 1) rot[i].push_back(u);
    }
    if (index & (1 << i)) std::swap(rot[i][1], rot[i][2]);
  }
  return RotationSystem(std::move(rot));
}

RotationSystem k5_rotation_system(int index) {
  if (index < 0 || index >= kK5Keys) throw InputError("k5 index out of range");
  static constexpr int kPerm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::vector<Vertex>> rot(5);
  for (int i = 0; i < 5; ++i) {
    Vertex o[4];
    int k = 0;
    for (Vertex u = 1; u <= 5; ++u) {
      if (u != i + 1) o[k++] = u;
    }
    int digit = index % 6;
    index /= 6;
    rot[i] = {o[0], o[1 + kPerm[digit][0]], o[1 + kPerm[digit][1]],
              o[1 + kPerm[digit][2]]};
  }
  return RotationSystem(std::move(rot));
}

int pairing_code(const Edge& e, const Edge& f) {
  Vertex s[4] = {e.a, e.b, f.a, f.b};
  std::sort(s, s + 4);
  Vertex partner = e.contains(s[0]) ? e.other(s[0]) : f.other(s[0]);
  for (int i = 1; i < 4; ++i) {
    if (s[i] == partner) return i - 1;
  }
  throw InvariantError("pairing_code: inconsistent edges");
}

bool pair_crossing(const RealizabilityTables& tables, const RotationSystem& rs,
                   const Edge& e, const Edge& f) {
  const int n = rs.size();
  for (Vertex x : {e.a, e.b, f.a, f.b}) {
    if (x < 1 || x > n) throw InputError("edge label out of range");
  }
  if (e.a == e.b || f.a == f.b) throw InputError("degenerate edge");
  if (e.shares_vertex(f)) {
    throw InputError("adjacent edges " + to_string(e) + " and " +
                     to_string(f) + " never cross");
  }
  Vertex s[4] = {e.a, e.b, f.a, f.b};
  std::sort(s, s + 4);
  const K4Entry& entry = tables.k4[k4_index(rs, std::span<const Vertex, 4>(s))];
  switch (entry.cls) {
    case K4Class::kUnrealizable:
      throw RealizabilityError("unrealizable 4-tuple {" + std::to_string(s[0]) +
                               "," + std::to_string(s[1]) + "," +
                               std::to_string(s[2]) + "," +
                               std::to_string(s[3]) + "}");
    case K4Class::kNoCrossing:
      return false;
    case K4Class::kCrossing:
      return entry.pairing == pairing_code(e, f);
  }
  return false;
}

CrossingPairSet crossing_pairs(const RealizabilityTables& tables,
                               const RotationSystem& rs) {
  CrossingPairSet out;
  const int n = rs.size();
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) {
      for (Vertex c = a + 1; c <= n; ++c) {
        if (c == b) continue;
        for (Vertex d = c + 1; d <= n; ++d) {
          if (d == b) continue;
          Edge e(a, b), f(c, d);
          if (pair_crossing(tables, rs, e, f)) out.emplace(e, f);
        }
      }
    }
  }
  return out;
}

std::vector<Edge> edges_crossing(const RealizabilityTables& tables,
                                 const RotationSystem& rs, const Edge& e) {
  std::vector<Edge> out;
  const int n = rs.size();
  for (Vertex c = 1; c <= n; ++c) {
    if (e.contains(c)) continue;
    for (Vertex d = c + 1; d <= n; ++d) {
      if (e.contains(d)) continue;
      Edge f(c, d);
      if (pair_crossing(tables, rs, e, f)) out.push_back(f);
    }
  }
  return out;
}

bool is_uncrossed(const RealizabilityTables& tables, const RotationSystem& rs,
                  const Edge& e) {
  const int n = rs.size();
  for (Vertex c = 1; c <= n; ++c) {
    if (e.contains(c)) continue;
    for (Vertex d = c + 1; d <= n; ++d) {
      if (!e.contains(d) && pair_crossing(tables, rs, e, Edge(c, d))) {
        return false;
      }
    }
  }
  return true;
}

bool is_realizable(const RealizabilityTables& tables,
                   const RotationSystem& rs) {
  const int n = rs.size();
  if (n <= 3) return true;
  if (n == 4) return tables.k4[k4_index(rs)].cls != K4Class::kUnrealizable;
  Vertex s[5];
  for (s[0] = 1; s[0] <= n; ++s[0])
    for (s[1] = s[0] + 1; s[1] <= n; ++s[1])
      for (s[2] = s[1] + 1; s[2] <= n; ++s[2])
        for (s[3] = s[2] + 1; s[3] <= n; ++s[3])
          for (s[4] = s[3] + 1; s[4] <= n; ++s[4])
            if (!tables.k5[k5_index(rs, std::span<const Vertex, 5>(s))]) {
              return false;
            }
  return true;
}

bool is_realizable_touching(const RealizabilityTables& tables,
                            const RotationSystem& rs, const Edge& e) {
  const int n = rs.size();
  if (n <= 3) return true;
  if (n == 4) return tables.k4[k4_index(rs)].cls != K4Class::kUnrealizable;
  std::vector<Vertex> others;
  for (Vertex v = 1; v <= n; ++v) {
    if (!e.contains(v)) others.push_back(v);
  }
  const int m = static_cast<int>(others.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        Vertex s[5] = {e.a, e.b, others[i], others[j], others[k]};
        std::sort(s, s + 5);
        if (!tables.k5[k5_index(rs, std::span<const Vertex, 5>(s))]) {
          return false;
        }
      }
  return true;
}

namespace {

void check_label(const RotationSystem& rs, Vertex v) {
  if (v < 1 || v > rs.size()) {
    throw InputError("invalid vertex label " + std::to_string(v));
  }
}

int triangle_crossings(const RealizabilityTables& tables,
                       const RotationSystem& rs, const std::array<Vertex, 3>& t,
                       const Edge& f) {
  int count = 0;
  for (int i = 0; i < 3; ++i) {
    Edge side(t[i], t[(i + 1) % 3]);
    if (!side.shares_vertex(f) && pair_crossing(tables, rs, side, f)) ++count;
  }
  return count;
}

}  // namespace

bool same_triangle_side(const RealizabilityTables& tables,
                        const RotationSystem& rs, std::array<Vertex, 3> t,
                        Vertex u, Vertex v) {
  for (Vertex x : t) check_label(rs, x);
  check_label(rs, u);
  check_label(rs, v);
  if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
    throw InputError("triangle vertices must be distinct");
  }
  if (u == v) throw InputError("same_triangle_side needs u != v");
  for (Vertex x : t) {
    if (x == u || x == v) throw InputError("u and v must lie off the triangle");
  }
  return triangle_crossings(tables, rs, t, Edge(u, v)) % 2 == 0;
}

bool is_g_convex(const RealizabilityTables& tables, const RotationSystem& rs) {
  const int n = rs.size();
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      for (Vertex c = b + 1; c <= n; ++c) {
        const std::array<Vertex, 3> t = {a, b, c};
        std::vector<Vertex> side[2];
        Vertex ref = 0;
        for (Vertex u = 1; u <= n; ++u) {
          if (u == a || u == b || u == c) continue;
          if (ref == 0) {
            ref = u;
            side[0].push_back(u);
          } else {
            side[same_triangle_side(tables, rs, t, ref, u) ? 0 : 1].push_back(u);
          }
        }
        auto convex = [&](std::vector<Vertex> s) {
          s.insert(s.end(), t.begin(), t.end());
          for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) {
              if (i >= s.size() - 3 && j >= s.size() - 3) continue;
              if (triangle_crossings(tables, rs, t, Edge(s[i], s[j])) > 0) {
                return false;
              }
            }
          return true;
        };
        if (!convex(side[0]) && !convex(side[1])) return false;
      }
  return true;
}

}  // namespace sepdraw
