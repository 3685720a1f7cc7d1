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

#include "sepdraw/rotation_system.hpp"

#include <algorithm>
#include <sstream>

#include "sepdraw/errors.hpp"

namespace sepdraw {

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "}";
}

RotationSystem::RotationSystem(std::vector<std::vector<Vertex>> rotations)
    : n_(static_cast<int>(rotations.size())), rot_(std::move(rotations)) {
  if (n_ < 1) throw InputError("rotation system needs at least one vertex");
  pos_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ + 1),
              -1);
  for (Vertex v = 1; v <= n_; ++v) {
    const auto& r = rot_[v - 1];
    if (static_cast<int>(r.size()) != n_ - 1) {
      throw InputError("rotation of vertex " + std::to_string(v) + " has " +
                       std::to_string(r.size()) + " entries, expected " +
                       std::to_string(n_ - 1));
    }
    for (int i = 0; i < n_ - 1; ++i) {
      Vertex u = r[i];
      if (u < 1 || u > n_ || u == v) {
        throw InputError("invalid label " + std::to_string(u) +
                         " in rotation of vertex " + std::to_string(v));
      }
      if (pos_[index(v, u)] != -1) {
        throw InputError("label " + std::to_string(u) +
                         " repeated in rotation of vertex " +
                         std::to_string(v));
      }
      pos_[index(v, u)] = i;
    }
  }
}

Vertex RotationSystem::next_cw(Vertex v, Vertex u) const {
  const auto& r = rot_[v - 1];
  return r[(position(v, u) + 1) % r.size()];
}

Vertex RotationSystem::next_ccw(Vertex v, Vertex u) const {
  const auto& r = rot_[v - 1];
  return r[(position(v, u) + r.size() - 1) % r.size()];
}

RotationSystem RotationSystem::mirrored() const {
  auto rot = rot_;
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  return RotationSystem(std::move(rot));
}

RotationSystem RotationSystem::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw InputError("relabeling has wrong size");
  }
  std::vector<std::vector<Vertex>> rot(n_);
  for (Vertex v = 1; v <= n_; ++v) {
    auto& r = rot[perm[v - 1] - 1];
    r.reserve(n_ - 1);
    for (Vertex u : rot_[v - 1]) r.push_back(perm[u - 1]);
  }
  return RotationSystem(std::move(rot));
}

RotationSystem RotationSystem::normalized() const {
  auto rot = rot_;
  for (auto& r : rot) {
    if (!r.empty()) std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
  }
  return RotationSystem(std::move(rot));
}

RotationSystem RotationSystem::with_rotation(Vertex v,
                                             std::vector<Vertex> rotation) const {
  auto rot = rot_;
  rot.at(v - 1) = std::move(rotation);
  return RotationSystem(std::move(rot));
}

bool operator==(const RotationSystem& x, const RotationSystem& y) {
  if (x.n_ != y.n_) return false;
  for (Vertex v = 1; v <= x.n_; ++v) {
    const auto& a = x.rot_[v - 1];
    if (a.empty()) continue;
    // Compare cyclically, anchored at the first entry of x.
    int offset = y.position(v, a[0]);
    const auto& b = y.rot_[v - 1];
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[(offset + i) % b.size()]) return false;
    }
  }
  return true;
}

bool cyclically_ordered(const RotationSystem& rs, Vertex v, Vertex x, Vertex y,
                        Vertex z) {
  int px = rs.position(v, x), py = rs.position(v, y), pz = rs.position(v, z);
  return (px < py && py < pz) || (py < pz && pz < px) || (pz < px && px < py);
}

RotationSystem convex_rotation_system(int n) {
  if (n < 1) throw InputError("n must be positive");
  std::vector<std::vector<Vertex>> rot(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 1; k < n; ++k) rot[i].push_back((i + k) % n + 1);
  }
  return RotationSystem(std::move(rot));
}

RotationSystem subrotation(const RotationSystem& rs,
                           std::span<const Vertex> subset) {
  if (subset.empty()) throw InputError("subrotation of an empty vertex set");
  const int n = rs.size();
  std::vector<Vertex> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("subrotation: repeated vertex");
  }
  std::vector<Vertex> local(n + 1, 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    Vertex v = sorted[i];
    if (v < 1 || v > n) {
      throw InputError("subrotation: invalid label " + std::to_string(v));
    }
    local[v] = static_cast<Vertex>(i + 1);
  }
  std::vector<std::vector<Vertex>> rot(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    rot[i].reserve(sorted.size() - 1);
    for (Vertex u : rs.rotation(sorted[i])) {
      if (local[u] != 0) rot[i].push_back(local[u]);
    }
  }
  return RotationSystem(std::move(rot));
}

namespace {

// Serialization of rs relabeled so that root -> 1, start -> 2 and the rest
// of the root's rotation (read clockwise, or counter-clockwise when
// mirrored) -> 3, 4, ...; every rotation is written in the matching
// orientation starting at its smallest label.
void rooted_serialization(const RotationSystem& rs, Vertex root, Vertex start,
                          bool mirror, std::vector<Vertex>& label,
                          std::string& out) {
  const int n = rs.size();
  const auto rr = rs.rotation(root);
  const int m = static_cast<int>(rr.size());
  label[root] = 1;
  int p = rs.position(root, start);
  for (int k = 0; k < m; ++k) {
    int idx = mirror ? (p - k + m) % m : (p + k) % m;
    label[rr[idx]] = k + 2;
  }
  out.assign(static_cast<std::size_t>(1 + n * (n - 1)), '\0');
  out[0] = static_cast<char>(n);
  for (Vertex v = 1; v <= n; ++v) {
    const auto r = rs.rotation(v);
    int best = 0;
    for (int i = 1; i < m; ++i) {
      if (label[r[i]] < label[r[best]]) best = i;
    }
    std::size_t base = 1 + static_cast<std::size_t>(label[v] - 1) * (n - 1);
    for (int k = 0; k < m; ++k) {
      int idx = mirror ? (best - k + m) % m : (best + k) % m;
      out[base + k] = static_cast<char>(label[r[idx]]);
    }
  }
}

}  // namespace

std::string canonical_key(const RotationSystem& rs) {
  const int n = rs.size();
  if (n > 255) throw InputError("canonical_key supports at most 255 vertices");
  if (n == 1) return std::string(1, '\x01');
  std::vector<Vertex> label(n + 1, 0);
  std::string best, cur;
  for (Vertex root = 1; root <= n; ++root) {
    for (Vertex start : rs.rotation(root)) {
      for (bool mirror : {false, true}) {
        rooted_serialization(rs, root, start, mirror, label, cur);
        if (best.empty() || cur < best) best = cur;
      }
    }
  }
  return best;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void crs_error(int line, const std::string& what) {
  throw InputError("crs line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::vector<RotationSystem> parse_crs(const std::string& text) {
  std::vector<RotationSystem> out;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  int n = -1;
  std::vector<std::vector<Vertex>> rot;
  std::vector<bool> seen;
  int filled = 0;

  auto finish = [&](int line) {
    if (n < 0) return;
    if (filled != n) crs_error(line, "record has " + std::to_string(filled) +
                                         " rotation lines, expected " +
                                         std::to_string(n));
    out.emplace_back(std::move(rot));
    rot.clear();
    n = -1;
    filled = 0;
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (!line.empty() && line[0] == '#') continue;
    if (line.empty()) {
      if (n >= 0 && filled == n) finish(lineno);
      continue;
    }
    if (line.rfind("n=", 0) == 0 || line.rfind("n =", 0) == 0) {
      finish(lineno);
      std::string num = trim(line.substr(line.find('=') + 1));
      try {
        std::size_t used = 0;
        n = std::stoi(num, &used);
        if (used != num.size()) throw std::invalid_argument(num);
      } catch (const std::exception&) {
        crs_error(lineno, "bad vertex count '" + num + "'");
      }
      if (n < 1 || n > 255) crs_error(lineno, "vertex count out of range");
      rot.assign(n, {});
      seen.assign(n + 1, false);
      continue;
    }
    if (n < 0) crs_error(lineno, "rotation line before 'n=' header");
    auto colon = line.find(':');
    if (colon == std::string::npos) crs_error(lineno, "missing ':'");
    std::istringstream head(line.substr(0, colon));
    std::istringstream body(line.substr(colon + 1));
    int v = 0;
    std::string extra;
    if (!(head >> v) || (head >> extra)) crs_error(lineno, "bad vertex label");
    if (v < 1 || v > n) crs_error(lineno, "vertex label out of range");
    if (seen[v]) crs_error(lineno, "duplicate rotation for vertex " + std::to_string(v));
    seen[v] = true;
    std::string tok;
    while (body >> tok) {
      try {
        std::size_t used = 0;
        int u = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        rot[v - 1].push_back(u);
      } catch (const std::exception&) {
        crs_error(lineno, "bad label '" + tok + "'");
      }
    }
    ++filled;
  }
  finish(lineno + 1);
  return out;
}

std::string format_crs(const RotationSystem& rs) {
  std::string s = "n=" + std::to_string(rs.size()) + "\n";
  for (Vertex v = 1; v <= rs.size(); ++v) {
    s += std::to_string(v) + ":";
    for (Vertex u : rs.rotation(v)) s += " " + std::to_string(u);
    s += "\n";
  }
  return s;
}

std::string format_crs(std::span<const RotationSystem> records) {
  std::string s;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i > 0) s += "\n";
    s += format_crs(records[i]);
  }
  return s;
}

}  // namespace sepdraw
