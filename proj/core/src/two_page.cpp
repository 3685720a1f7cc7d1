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

#include "sepdraw/two_page.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "sepdraw/errors.hpp"

namespace sepdraw {
namespace {

__extension__ using Wide = __int128;

struct Arc {
  int left = 0;   // position index
  int right = 0;
  Page page = Page::kUpper;
  CurveKind kind = CurveKind::kEdge;
};

// x = num / den with den > 0.
struct Rational {
  Wide num = 0;
  Wide den = 1;
};

int compare(const Rational& x, const Rational& y) {
  Wide l = x.num * y.den;
  Wide r = y.num * x.den;
  return l < r ? -1 : (l > r ? 1 : 0);
}

bool interleave(const Arc& p, const Arc& q) {
  return (p.left < q.left && q.left < p.right && p.right < q.right) ||
         (q.left < p.left && p.left < q.right && q.right < p.right);
}

// Sort key of an arc end at a vertex, in clockwise order starting east.
std::pair<int, int> rotation_key(Page page, int here, int there) {
  const int dist = std::abs(there - here);
  if (page == Page::kUpper) {
    return there > here ? std::pair{0, dist} : std::pair{1, -dist};
  }
  return there < here ? std::pair{2, dist} : std::pair{3, -dist};
}

std::vector<int> positions_of(const TwoPageDrawing& d, int n) {
  std::vector<int> pos(n + 1, -1);
  for (std::size_t i = 0; i < d.order.size(); ++i) {
    Vertex v = d.order[i];
    if (v < 1 || v > n || pos[v] != -1) {
      throw InputError("order must be a permutation of 1.." + std::to_string(n));
    }
    pos[v] = static_cast<int>(i);
  }
  return pos;
}

void check_edges(const TwoPageDrawing& d, int n) {
  if (d.pages.size() != d.edges.size()) {
    throw InputError("every edge needs a page");
  }
  std::set<Edge> seen;
  for (const Edge& e : d.edges) {
    if (e.a == e.b || e.a < 1 || e.b > n) {
      throw InputError("invalid edge " + to_string(e));
    }
    if (!seen.insert(e).second) {
      throw InputError("duplicate edge " + to_string(e));
    }
  }
}

// Attempts the planarization for one choice of coordinates. Returns false
// if three arcs meet in a point.
bool planarize(const std::vector<Arc>& arcs, const std::vector<Vertex>& order,
               const std::vector<std::int64_t>& x, CombinatorialMap* out) {
  const int na = static_cast<int>(arcs.size());
  struct Crossing {
    int a, b;
    Rational at;
  };
  std::vector<Crossing> crossings;
  std::vector<std::vector<int>> on_arc(na);
  for (int i = 0; i < na; ++i) {
    for (int j = i + 1; j < na; ++j) {
      if (arcs[i].page != arcs[j].page || !interleave(arcs[i], arcs[j])) continue;
      Wide a1 = x[arcs[i].left], b1 = x[arcs[i].right];
      Wide a2 = x[arcs[j].left], b2 = x[arcs[j].right];
      Rational r{a2 * b2 - a1 * b1, a2 + b2 - a1 - b1};
      if (r.den < 0) r = {-r.num, -r.den};
      on_arc[i].push_back(static_cast<int>(crossings.size()));
      on_arc[j].push_back(static_cast<int>(crossings.size()));
      crossings.push_back({i, j, r});
    }
  }
  for (auto& list : on_arc) {
    std::sort(list.begin(), list.end(), [&](int p, int q) {
      return compare(crossings[p].at, crossings[q].at) < 0;
    });
    for (std::size_t k = 1; k < list.size(); ++k) {
      if (compare(crossings[list[k - 1]].at, crossings[list[k]].at) == 0) {
        return false;
      }
    }
  }

  MapBuilder b;
  for (Vertex v : order) b.add_real_node(v);
  const int nv = static_cast<int>(order.size());
  for (std::size_t k = 0; k < crossings.size(); ++k) b.add_cross_node();

  // Per crossing: forward and backward dart of each of its two arcs.
  std::vector<std::array<DartId, 4>> cross_darts(crossings.size());
  std::vector<std::vector<std::pair<std::pair<int, int>, DartId>>> at_vertex(nv);
  for (int i = 0; i < na; ++i) {
    const Arc& arc = arcs[i];
    std::vector<NodeId> pts = {arc.left};
    for (int k : on_arc[i]) pts.push_back(nv + k);
    pts.push_back(arc.right);
    DartId first = -1, last = -1;
    for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
      auto [da, db] = b.add_segment(pts[s], pts[s + 1]);
      if (s == 0) first = da;
      last = db;
      if (s > 0) {
        int k = on_arc[i][s - 1];
        cross_darts[k][crossings[k].a == i ? 0 : 2] = da;
      }
      if (s + 1 < pts.size() - 1) {
        int k = on_arc[i][s];
        cross_darts[k][crossings[k].a == i ? 1 : 3] = db;
      }
    }
    at_vertex[arc.left].push_back(
        {rotation_key(arc.page, arc.left, arc.right), first});
    at_vertex[arc.right].push_back(
        {rotation_key(arc.page, arc.right, arc.left), last});
    b.add_curve(arc.kind, order[arc.left], order[arc.right], first);
  }
  for (int v = 0; v < nv; ++v) {
    std::sort(at_vertex[v].begin(), at_vertex[v].end());
    std::vector<DartId> rot;
    for (auto& [key, d] : at_vertex[v]) rot.push_back(d);
    b.set_rotation(v, rot);
  }
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    const Arc& p = arcs[crossings[k].a];
    const Arc& q = arcs[crossings[k].b];
    // Cross product of the forward tangents has the sign of
    // y * (center_q - center_p).
    std::int64_t dc = (x[q.left] + x[q.right]) - (x[p.left] + x[p.right]);
    bool q_ccw = (p.page == Page::kUpper) == (dc > 0);
    auto [pf, pb, qf, qb] = cross_darts[k];
    b.set_rotation(nv + static_cast<int>(k),
                   q_ccw ? std::vector<DartId>{pf, qf, pb, qb}
                         : std::vector<DartId>{pf, qb, pb, qf});
  }
  *out = b.build();
  return true;
}

}  // namespace

CombinatorialMap from_two_page(const TwoPageDrawing& drawing, bool witnesses) {
  const int n = static_cast<int>(drawing.order.size());
  std::vector<int> pos = positions_of(drawing, n);
  check_edges(drawing, n);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < drawing.edges.size(); ++i) {
    int p = pos[drawing.edges[i].a], q = pos[drawing.edges[i].b];
    arcs.push_back({std::min(p, q), std::max(p, q), drawing.pages[i],
                    CurveKind::kEdge});
  }
  if (witnesses) {
    const std::size_t m = arcs.size();
    for (std::size_t i = 0; i < m; ++i) {
      Arc w = arcs[i];
      w.page = w.page == Page::kUpper ? Page::kLower : Page::kUpper;
      w.kind = CurveKind::kWitness;
      arcs.push_back(w);
    }
  }
  std::mt19937_64 jitter(0x5eedULL);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::int64_t> x(n);
    for (int i = 0; i < n; ++i) {
      x[i] = (static_cast<std::int64_t>(i) << 20) +
             static_cast<std::int64_t>(jitter() % (1u << 19));
    }
    CombinatorialMap map;
    if (planarize(arcs, drawing.order, x, &map)) return map;
  }
  throw InvariantError("could not place vertices in general position");
}

TwoPageDrawing convex_two_page(int n) {
  TwoPageDrawing d;
  d.order.resize(n);
  std::iota(d.order.begin(), d.order.end(), 1);
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) {
      d.edges.emplace_back(a, b);
      d.pages.push_back(Page::kUpper);
    }
  }
  return d;
}

CombinatorialMap from_convex(int n, bool witnesses) {
  return from_two_page(convex_two_page(n), witnesses);
}

RotationSystem two_page_rotation_system(const TwoPageDrawing& drawing) {
  const int n = static_cast<int>(drawing.order.size());
  std::vector<int> pos = positions_of(drawing, n);
  check_edges(drawing, n);
  if (drawing.edges.size() != static_cast<std::size_t>(n) * (n - 1) / 2) {
    throw InputError("a 2-page rotation system needs the complete graph");
  }
  std::vector<std::vector<std::pair<std::pair<int, int>, Vertex>>> keyed(n);
  for (std::size_t i = 0; i < drawing.edges.size(); ++i) {
    const Edge& e = drawing.edges[i];
    keyed[e.a - 1].push_back(
        {rotation_key(drawing.pages[i], pos[e.a], pos[e.b]), e.b});
    keyed[e.b - 1].push_back(
        {rotation_key(drawing.pages[i], pos[e.b], pos[e.a]), e.a});
  }
  std::vector<std::vector<Vertex>> rot(n);
  for (int v = 0; v < n; ++v) {
    std::sort(keyed[v].begin(), keyed[v].end());
    for (auto& [key, u] : keyed[v]) rot[v].push_back(u);
  }
  return RotationSystem(std::move(rot));
}

TwoPageDrawing random_two_page_complete(int n, std::mt19937_64& rng) {
  TwoPageDrawing d = convex_two_page(n);
  std::shuffle(d.order.begin(), d.order.end(), rng);
  std::bernoulli_distribution coin(0.5);
  for (auto& p : d.pages) p = coin(rng) ? Page::kUpper : Page::kLower;
  return d;
}

namespace {

bool connected_graph(int n, const std::vector<Edge>& edges) {
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int parts = n;
  for (const Edge& e : edges) {
    int a = find(e.a), b = find(e.b);
    if (a != b) parent[a] = b, --parts;
  }
  return parts == 1;
}

bool connected_map(const CombinatorialMap& map) {
  for (const auto& v : validate_map(map)) {
    if (v.code == "disconnected") return false;
  }
  return true;
}

}  // namespace

TwoPageDrawing random_two_page_partial(int n, int missing,
                                       std::mt19937_64& rng) {
  const int m = n * (n - 1) / 2;
  if (missing < 0 || missing > m - (n - 1)) {
    throw InputError("cannot remove that many edges and stay connected");
  }
  for (int attempt = 0; attempt < 1000; ++attempt) {
    TwoPageDrawing d = random_two_page_complete(n, rng);
    std::vector<std::size_t> idx(d.edges.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(d.edges.size() - missing);
    std::sort(idx.begin(), idx.end());
    TwoPageDrawing out;
    out.order = d.order;
    for (std::size_t i : idx) {
      out.edges.push_back(d.edges[i]);
      out.pages.push_back(d.pages[i]);
    }
    if (connected_map(from_two_page(out, true))) return out;
  }
  throw InvariantError("no connected sample found");
}

TwoPageDrawing random_plane_two_page(int n, std::mt19937_64& rng) {
  TwoPageDrawing d = convex_two_page(n);
  std::shuffle(d.order.begin(), d.order.end(), rng);
  std::vector<int> pos(n + 1);
  for (int i = 0; i < n; ++i) pos[d.order[i]] = i;
  std::vector<Edge> all = d.edges;
  std::shuffle(all.begin(), all.end(), rng);

  TwoPageDrawing out;
  out.order = d.order;
  std::bernoulli_distribution coin(0.5);
  for (const Edge& e : all) {
    Arc arc{std::min(pos[e.a], pos[e.b]), std::max(pos[e.a], pos[e.b])};
    Page first = coin(rng) ? Page::kUpper : Page::kLower;
    for (Page page : {first, first == Page::kUpper ? Page::kLower : Page::kUpper}) {
      bool free = true;
      for (std::size_t i = 0; i < out.edges.size() && free; ++i) {
        if (out.pages[i] != page) continue;
        const Edge& f = out.edges[i];
        Arc other{std::min(pos[f.a], pos[f.b]), std::max(pos[f.a], pos[f.b])};
        free = !interleave(arc, other);
      }
      if (free) {
        out.edges.push_back(e);
        out.pages.push_back(page);
        break;
      }
    }
  }
  // Thin out while keeping the graph connected.
  const int spare = static_cast<int>(out.edges.size()) - (n - 1);
  int drop = spare > 0 ? std::uniform_int_distribution<int>(0, spare)(rng) : 0;
  for (int tries = 0; drop > 0 && tries < 8 * n * n; ++tries) {
    std::size_t i = std::uniform_int_distribution<std::size_t>(
        0, out.edges.size() - 1)(rng);
    std::vector<Edge> rest = out.edges;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (!connected_graph(n, rest)) continue;
    out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(i));
    out.pages.erase(out.pages.begin() + static_cast<std::ptrdiff_t>(i));
    --drop;
  }
  return out;
}

}  // namespace sepdraw
