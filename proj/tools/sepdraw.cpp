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

// sepdraw: command-line front end.
//
// Exit codes: 0 success / positive answer, 1 negative answer, 2 input or
// usage error, 3 internal invariant violation.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sepdraw/combinatorial_map.hpp"
#include "sepdraw/errors.hpp"
#include "sepdraw/extension.hpp"
#include "sepdraw/plane_hamiltonicity.hpp"
#include "sepdraw/realizability.hpp"
#include "sepdraw/rotation_system.hpp"
#include "sepdraw/separability.hpp"
#include "sepdraw/small_tables.hpp"
#include "sepdraw/two_page.hpp"
#include "sepdraw/witness.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace sepdraw;

enum ExitCode { kOk = 0, kNegative = 1, kUsage = 2, kInvariant = 3 };

struct Options {
  std::string input;
  std::string out;
  std::string edge;
  std::string mode = "separable";
  std::string tables;
  bool json = false;
  bool verify = false;
  bool certificate = false;
  bool extended = false;
  bool log_potential = false;
  bool timing = false;
  int from = 0;
  int to = 0;
  int n = 0;
  std::uint64_t seed = 0;
};

std::string read_file(const std::string& path) {
  if (path.empty()) throw InputError("--input is required");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

Edge parse_edge(const std::string& text) {
  std::istringstream in(text);
  int u = 0, v = 0;
  char comma = 0;
  if (!(in >> u >> comma >> v) || comma != ',' || !in.eof() || u == v) {
    throw InputError("--edge expects two distinct labels u,v");
  }
  return Edge(u, v);
}

json to_json(const Edge& e) { return json::array({e.a, e.b}); }

json to_json(const std::vector<Edge>& edges) {
  json a = json::array();
  for (const Edge& e : edges) a.push_back(to_json(e));
  return a;
}

std::string edge_list(const std::vector<Edge>& edges) {
  std::string s;
  for (const Edge& e : edges) s += (s.empty() ? "" : " ") + to_string(e);
  return s;
}

std::string vertex_list(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

// One report per invocation; text goes to stdout unless --json is given,
// in which case stdout carries exactly one JSON document.
class Run {
 public:
  Run(std::string command, const Options& opt)
      : command_(std::move(command)), opt_(opt),
        start_(std::chrono::steady_clock::now()) {}

  const Options& opt() const { return opt_; }
  json& result() { return result_; }
  std::ostringstream& text() { return text_; }

  std::string input() {
    std::string bytes = read_file(opt_.input);
    digest_ = fnv1a(bytes);
    return bytes;
  }

  std::vector<RotationSystem> records() {
    auto rs = parse_crs(input());
    if (rs.empty()) throw InputError("no rotation system in " + opt_.input);
    return rs;
  }

  RotationSystem single_record() {
    auto rs = records();
    if (rs.size() != 1) {
      throw InputError("expected exactly one rotation system, got " +
                       std::to_string(rs.size()));
    }
    return rs.front();
  }

  const RealizabilityTables& tables() {
    if (opt_.tables.empty()) return default_tables();
    if (!loaded_) loaded_ = load_tables(opt_.tables);
    return *loaded_;
  }

  void require_realizable(const RotationSystem& rs) {
    if (!is_realizable(tables(), rs)) {
      throw NotRealizableError("input rotation system is not realizable");
    }
  }

  void set_verified(bool ok) { verified_ = ok; }

  int finish(int code) {
    if (verified_ && !*verified_) {
      text_ << "verification FAILED\n";
      code = kInvariant;
    }
    if (!opt_.json) {
      std::cout << text_.str();
      return code;
    }
    std::cerr << text_.str();
    json report;
    report["command"] = command_;
    report["input_digest"] = digest_.empty() ? json(nullptr) : json(digest_);
    report["status"] = code == kOk ? "ok" : code == kNegative ? "negative"
                                                              : "error";
    report["result"] = result_;
    if (verified_) report["verified"] = *verified_;
    if (opt_.timing) report["timing_ms"] = elapsed_ms();
    std::cout << report.dump(2) << "\n";
    return code;
  }

  int fail(int code, const std::string& kind, const std::string& message) {
    std::cerr << "sepdraw " << command_ << ": " << message << "\n";
    if (opt_.json) {
      json report;
      report["command"] = command_;
      report["input_digest"] =
          digest_.empty() ? json(nullptr) : json(digest_);
      report["status"] = code == kNegative ? "negative" : "error";
      report["error"] = {{"kind", kind}, {"message", message}};
      std::cout << report.dump(2) << "\n";
    }
    return code;
  }

 private:
  double elapsed_ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

  std::string command_;
  const Options& opt_;
  std::chrono::steady_clock::time_point start_;
  json result_ = json::object();
  std::ostringstream text_;
  std::string digest_;
  std::optional<bool> verified_;
  std::optional<RealizabilityTables> loaded_;
};

json evidence_json(const SeparatorEvidence& ev) {
  json j;
  j["edge"] = to_json(ev.edge);
  if (ev.kind == SeparatorKind::kUncrossed) {
    j["evidence"] = "uncrossed";
    return j;
  }
  const Flip& f = *ev.flip;
  j["evidence"] = "flip";
  j["swept"] = f.swept;
  json rot;
  for (Vertex x : {f.edge.a, f.edge.b}) {
    auto r = f.new_rs.rotation(x);
    rot[std::to_string(x)] = std::vector<Vertex>(r.begin(), r.end());
  }
  j["new_rotations"] = rot;
  return j;
}

int cmd_recognize(Run& run) {
  json records = json::array();
  bool all = true;
  int index = 0;
  for (const auto& rs : run.records()) {
    ++index;
    run.require_realizable(rs);
    SeparabilityResult r = is_separable(run.tables(), rs);
    all = all && r.separable;
    json j;
    j["n"] = rs.size();
    j["separable"] = r.separable;
    j["separator_edges"] = r.certificate.size();
    j["failing"] = to_json(r.failing);
    if (run.opt().certificate) {
      json cert = json::array();
      for (const auto& ev : r.certificate) cert.push_back(evidence_json(ev));
      j["certificate"] = cert;
    }
    records.push_back(j);

    auto& t = run.text();
    t << "record " << index << ": n=" << rs.size() << " "
      << (r.separable ? "separable" : "not separable") << " ("
      << r.certificate.size() << " separator edges)\n";
    if (!r.failing.empty()) t << "  not separator: " << edge_list(r.failing) << "\n";
    if (run.opt().certificate) {
      for (const auto& ev : r.certificate) {
        t << "  " << to_string(ev.edge) << " ";
        if (ev.kind == SeparatorKind::kUncrossed) {
          t << "uncrossed\n";
        } else {
          t << "flip sweeping {" << vertex_list(ev.flip->swept) << "}\n";
        }
      }
    }
  }
  run.result()["records"] = records;
  return all ? kOk : kNegative;
}

int cmd_flips(Run& run) {
  RotationSystem rs = run.single_record();
  run.require_realizable(rs);
  const Edge e = parse_edge(run.opt().edge);
  if (e.a < 1 || e.b > rs.size()) throw InputError("edge label out of range");
  const auto& tables = run.tables();
  auto before = edges_crossing(tables, rs, e);
  std::set<Edge> old_set(before.begin(), before.end());

  json cands = json::array();
  int valid = 0;
  auto& t = run.text();
  t << "edge " << to_string(e) << " crosses " << before.size() << " edges\n";
  for (const auto& c : flip_candidates(rs, e)) {
    RotationSystem next = apply_flip(rs, c);
    json j;
    j["swept"] = c.swept;
    bool realizable = is_realizable_touching(tables, next, e);
    bool disjoint = false;
    if (realizable) {
      disjoint = true;
      for (const Edge& f : edges_crossing(tables, next, e)) {
        if (old_set.count(f)) disjoint = false;
      }
    }
    const bool ok = realizable && disjoint;
    valid += ok;
    j["realizable"] = realizable;
    j["disjoint_crossings"] = disjoint;
    j["valid"] = ok;
    if (ok) {
      json rot;
      for (Vertex x : {e.a, e.b}) {
        auto r = next.rotation(x);
        rot[std::to_string(x)] = std::vector<Vertex>(r.begin(), r.end());
      }
      j["new_rotations"] = rot;
    }
    cands.push_back(j);
    t << "  sweep {" << vertex_list(c.swept) << "}: "
      << (ok ? "valid" : realizable ? "crossings overlap" : "not realizable")
      << "\n";
  }
  run.result()["edge"] = to_json(e);
  run.result()["uncrossed"] = before.empty();
  run.result()["candidates"] = cands;
  run.result()["valid_flips"] = valid;
  return valid > 0 ? kOk : kNegative;
}

bool hamiltonian(const std::vector<Vertex>& vs, int n) {
  std::vector<bool> seen(n + 1, false);
  for (Vertex v : vs) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  return static_cast<int>(vs.size()) == n;
}

int cmd_hampath(Run& run) {
  RotationSystem rs = run.single_record();
  run.require_realizable(rs);
  const int n = rs.size();
  const Vertex v = run.opt().from, w = run.opt().to;
  if (v < 1 || v > n || w < 1 || w > n || v == w) {
    throw InputError("--from and --to must be distinct labels in 1.." +
                     std::to_string(n));
  }
  PlanePath p = ham_path(run.tables(), rs, v, w);
  run.result()["from"] = v;
  run.result()["to"] = w;
  run.result()["path"] = p.vertices;
  run.text() << "path: " << vertex_list(p.vertices) << "\n";
  if (run.opt().verify) {
    run.set_verified(hamiltonian(p.vertices, n) && p.vertices.front() == v &&
                     p.vertices.back() == w &&
                     verify_crossing_free(run.tables(), rs, p.edges()));
  }
  return kOk;
}

int cmd_hamcycle(Run& run) {
  RotationSystem rs = run.single_record();
  run.require_realizable(rs);
  PlaneCycle c = ham_cycle(run.tables(), rs);
  run.result()["cycle"] = c.vertices;
  run.text() << "cycle: " << vertex_list(c.vertices) << "\n";
  if (run.opt().verify) {
    run.set_verified(hamiltonian(c.vertices, rs.size()) &&
                     verify_crossing_free(run.tables(), rs, c.edges()));
  }
  return kOk;
}

int cmd_matching(Run& run) {
  RotationSystem rs = run.single_record();
  run.require_realizable(rs);
  PlaneMatching m = plane_matching(run.tables(), rs);
  const int bound = rs.size() / 4;
  run.result()["edges"] = to_json(m.edges);
  run.result()["size"] = m.edges.size();
  run.result()["bound"] = bound;
  run.text() << "matching (" << m.edges.size() << " edges): "
             << edge_list(m.edges) << "\n";
  if (run.opt().verify) {
    std::vector<bool> used(rs.size() + 1, false);
    bool disjoint = true;
    for (const Edge& e : m.edges) {
      if (used[e.a] || used[e.b]) disjoint = false;
      used[e.a] = used[e.b] = true;
    }
    run.set_verified(disjoint &&
                     static_cast<int>(m.edges.size()) >= bound &&
                     verify_crossing_free(run.tables(), rs, m.edges));
  }
  return kOk;
}

int cmd_gconvex(Run& run) {
  json records = json::array();
  bool all = true;
  int index = 0;
  for (const auto& rs : run.records()) {
    ++index;
    run.require_realizable(rs);
    bool g = is_g_convex(run.tables(), rs);
    all = all && g;
    records.push_back({{"n", rs.size()}, {"g_convex", g}});
    run.text() << "record " << index << ": "
               << (g ? "g-convex" : "not g-convex") << "\n";
  }
  run.result()["records"] = records;
  return all ? kOk : kNegative;
}

int cmd_enumerate(Run& run) {
  const Options& opt = run.opt();
  if (opt.n < 3 || opt.n > 7) throw InputError("--n must be in 3..7");
  if (opt.n == 7 && !opt.extended) {
    throw InputError("n = 7 needs --extended");
  }
  auto levels = enumerate_levels(opt.n, opt.extended);
  json orbits, published;
  for (int k = 3; k <= opt.n; ++k) {
    orbits[std::to_string(k)] = levels[k].size();
    published[std::to_string(k)] = published_orbit_count(k);
    run.text() << "K" << k << ": " << levels[k].size() << " orbits"
               << (static_cast<int>(levels[k].size()) ==
                           published_orbit_count(k)
                       ? ""
                       : " (published count differs)")
               << "\n";
  }
  run.result()["n"] = opt.n;
  run.result()["orbits"] = orbits;
  run.result()["published"] = published;

  std::vector<RotationSystem> rs;
  for (const auto& d : levels[opt.n]) rs.push_back(d.rs);
  std::string crs = format_crs(rs);
  if (!opt.out.empty()) {
    write_file(opt.out, crs);
    run.result()["out"] = opt.out;
  } else if (!opt.json) {
    run.text() << "\n" << crs;
  }
  return kOk;
}

int cmd_tables(Run& run) {
  RealizabilityTables t = build_tables();
  int counts[3] = {0, 0, 0};
  for (const auto& e : t.k4) ++counts[static_cast<int>(e.cls)];
  run.result()["k4"] = {{"unrealizable", counts[0]},
                        {"no_crossing", counts[1]},
                        {"crossing", counts[2]}};
  run.result()["k5"] = t.k5_count();
  run.text() << "k4: " << counts[0] << " unrealizable, " << counts[1]
             << " no crossing, " << counts[2] << " crossing\n"
             << "k5: " << t.k5_count() << " of " << kK5Keys
             << " realizable\n";
  const std::string text = t.serialize();
  if (!run.opt().out.empty()) {
    std::filesystem::path dir(run.opt().out);
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "tables.tbl").string();
    write_file(path, text);
    run.result()["path"] = path;
    run.text() << "wrote " << path << "\n";
  } else if (!run.opt().json) {
    run.text() << text;
  }
  return kOk;
}

CombinatorialMap load_map(Run& run) { return parse_cmap(run.input()); }

// Graph curves crossed by curve c, in order along c.
std::vector<CurveId> crossed_curves(const CombinatorialMap& map, CurveId c) {
  std::vector<CurveId> out;
  for (NodeId x : map.curve_nodes(c)) {
    if (map.node(x).kind != NodeKind::kCross) continue;
    for (DartId d : map.node(x).rotation) {
      CurveId o = map.curve_of(d);
      if (o != c) {
        out.push_back(o);
        break;
      }
    }
  }
  return out;
}

int cmd_witness(Run& run) {
  CombinatorialMap map = load_map(run);
  const Edge e = parse_edge(run.opt().edge);
  if (map.find_curve(CurveKind::kEdge, e) < 0) {
    throw InputError("edge " + to_string(e) + " is not drawn");
  }
  run.result()["edge"] = to_json(e);
  auto route = find_witness(map, e);
  run.result()["found"] = route.has_value();
  if (!route) {
    run.text() << "edge " << to_string(e) << " has no witness\n";
    return kNegative;
  }
  CombinatorialMap with = add_witness(map, e, *route);
  CurveId c = with.find_curve(CurveKind::kWitness, e);
  json crossed = json::array();
  std::vector<Edge> crossed_edges;
  for (CurveId o : crossed_curves(with, c)) {
    const MapCurve& oc = with.curve(o);
    crossed.push_back({{"kind", to_string(oc.kind)}, {"edge", to_json(oc.edge())}});
    if (oc.is_graph_edge()) crossed_edges.push_back(oc.edge());
  }
  run.result()["crossings"] = crossed;
  run.text() << "witness of " << to_string(e) << " crosses "
             << crossed.size() << " curves; edges: "
             << (crossed_edges.empty() ? "none" : edge_list(crossed_edges))
             << "\n";
  if (run.opt().verify) {
    std::string why;
    bool ok = validate_witness(with, e, &why) && validate_map(with).empty();
    if (!ok) run.text() << why << "\n";
    run.set_verified(ok);
  }
  if (!run.opt().out.empty()) write_file(run.opt().out, serialize_cmap(with));
  return kOk;
}

int cmd_verify(Run& run) {
  CombinatorialMap map = load_map(run);
  auto violations = validate_map(map);
  int kinds[3] = {0, 0, 0};
  for (const auto& c : map.curves()) ++kinds[static_cast<int>(c.kind)];
  int cross = 0;
  for (NodeId x = 0; x < map.node_count(); ++x) {
    cross += map.node(x).kind == NodeKind::kCross;
  }
  json vs = json::array();
  for (const auto& v : violations) {
    vs.push_back({{"code", v.code}, {"message", v.message}});
  }
  json& r = run.result();
  r["valid"] = violations.empty();
  r["real_vertices"] = map.node_count() - cross;
  r["crossings"] = cross;
  r["faces"] = map.face_count();
  r["curves"] = {{"edge", kinds[0]}, {"witness", kinds[1]},
                 {"inserted", kinds[2]}};
  r["violations"] = vs;
  auto& t = run.text();
  t << (violations.empty() ? "valid" : "INVALID") << ": "
    << map.node_count() - cross << " vertices, " << cross << " crossings, "
    << map.face_count() << " faces, " << kinds[0] + kinds[2] << " edges, "
    << kinds[1] << " witnesses\n";
  for (const auto& v : violations) t << "  " << v.code << ": " << v.message << "\n";
  return violations.empty() ? kOk : kNegative;
}

int cmd_extend(Run& run) {
  const Options& opt = run.opt();
  if (opt.mode != "separable" && opt.mode != "crossmin") {
    throw InputError("--mode must be separable or crossmin");
  }
  CombinatorialMap map = load_map(run);
  PotentialLog log;
  if (opt.log_potential) {
    log = [](const Potential& p, const char* move) {
      std::cerr << "potential " << p.primary << " " << p.secondary << " "
                << move << "\n";
    };
  }
  ExtensionReport rep = opt.mode == "separable"
                            ? extend_to_complete_separable(map, log)
                            : extend_to_complete_crossmin(map, log);
  int cross = 0;
  for (NodeId x = 0; x < rep.map.node_count(); ++x) {
    cross += rep.map.node(x).kind == NodeKind::kCross;
  }
  json& r = run.result();
  r["mode"] = opt.mode;
  r["inserted"] = rep.inserted;
  r["exchanges"] = rep.exchanges;
  r["loop_removals"] = rep.loop_removals;
  r["crossings"] = cross;
  if (opt.log_potential) {
    json ps = json::array();
    for (const auto& p : rep.potentials) ps.push_back({p.primary, p.secondary});
    r["potentials"] = ps;
  }
  run.text() << "inserted " << rep.inserted << " edges, " << rep.exchanges
             << " exchanges, " << rep.loop_removals << " loop removals, "
             << cross << " crossings\n";
  if (opt.verify) {
    bool ok = validate_map(rep.map).empty();
    if (ok) extract_rotation_system(rep.map);
    run.set_verified(ok);
  }
  const std::string text = serialize_cmap(rep.map);
  if (!opt.out.empty()) {
    write_file(opt.out, text);
  } else if (!opt.json) {
    run.text() << text;
  }
  return kOk;
}

int cmd_generate(Run& run) {
  const Options& opt = run.opt();
  const int n = opt.n;
  if (n < 2 || n > 64) throw InputError("--n must be in 2..64");
  std::mt19937_64 rng(opt.seed);
  std::string text;
  if (opt.mode == "convex") {
    text = format_crs(convex_rotation_system(n));
  } else if (opt.mode == "two-page") {
    text = format_crs(two_page_rotation_system(random_two_page_complete(n, rng)));
  } else if (opt.mode == "partial") {
    const int missing =
        std::uniform_int_distribution<int>(1, std::max(1, n - 1))(rng);
    text = serialize_cmap(from_two_page(random_two_page_partial(n, missing, rng)));
  } else if (opt.mode == "plane") {
    text = serialize_cmap(from_two_page(random_plane_two_page(n, rng), false));
  } else {
    throw InputError("--mode must be convex, two-page, partial or plane");
  }
  run.result()["mode"] = opt.mode;
  run.result()["n"] = n;
  run.result()["seed"] = opt.seed;
  if (!opt.out.empty()) {
    write_file(opt.out, text);
    run.result()["out"] = opt.out;
  } else if (!opt.json) {
    run.text() << text;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separable simple drawings of complete graphs", "sepdraw"};
  app.require_subcommand(1);
  Options opt;

  struct Command {
    const char* name;
    const char* help;
    std::function<int(Run&)> fn;
  };
  const std::vector<Command> commands = {
      {"recognize", "Decide separability of rotation systems", cmd_recognize},
      {"flips", "List flip candidates of one edge", cmd_flips},
      {"hampath", "Crossing-free Hamiltonian path", cmd_hampath},
      {"hamcycle", "Crossing-free Hamiltonian cycle", cmd_hamcycle},
      {"matching", "Crossing-free matching", cmd_matching},
      {"gconvex", "Test g-convexity", cmd_gconvex},
      {"enumerate", "Enumerate good drawings of K_n", cmd_enumerate},
      {"tables", "Build realizability tables", cmd_tables},
      {"witness", "Search a witness arc for an edge", cmd_witness},
      {"verify", "Validate a combinatorial map", cmd_verify},
      {"extend", "Extend a drawing to a simple drawing of K_n", cmd_extend},
      {"generate", "Write a seeded random test drawing", cmd_generate},
  };

  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--input", opt.input, "Input file (.crs or .cmap)");
    sub->add_option("--out", opt.out, "Output file or directory");
    sub->add_flag("--json", opt.json, "Emit a JSON report on stdout");
    sub->add_flag("--verify", opt.verify, "Re-check the result");
    sub->add_flag("--certificate", opt.certificate, "Print certificates");
    sub->add_option("--edge", opt.edge, "Edge as u,v");
    sub->add_option("--from", opt.from, "Path start vertex");
    sub->add_option("--to", opt.to, "Path end vertex");
    sub->add_option("--n", opt.n, "Number of vertices");
    sub->add_flag("--extended", opt.extended, "Allow n = 7 enumeration");
    sub->add_option("--mode", opt.mode, "separable or crossmin");
    sub->add_option("--tables", opt.tables, "Realizability tables file");
    sub->add_option("--seed", opt.seed, "Seed for random generators");
    sub->add_flag("--log-potential", opt.log_potential,
                  "Log the fix-up potential");
    sub->add_flag("--timing", opt.timing, "Add wall time to the report");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  for (const auto& c : commands) {
    if (!app.got_subcommand(c.name)) continue;
    Run run(c.name, opt);
    try {
      return run.finish(c.fn(run));
    } catch (const NoSeparatorEdgeError& e) {
      return run.fail(kNegative, "no_separator_edge", e.what());
    } catch (const NotSimpleError& e) {
      return run.fail(kNegative, "not_simple", e.what());
    } catch (const InvariantError& e) {
      return run.fail(kInvariant, "invariant", e.what());
    } catch (const Error& e) {
      return run.fail(kUsage, "input", e.what());
    } catch (const std::exception& e) {
      return run.fail(kInvariant, "internal", e.what());
    }
  }
  return kUsage;
}
