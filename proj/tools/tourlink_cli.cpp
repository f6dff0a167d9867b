// Copyright 2026 The tourlink Authors
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


// Command-line front end. Every command prints one JSON report on stdout;
// build commands can also write the structure they built (--out) so that
// `verify` can re-check it later against the same tournament file.
//
// Exit status: 0 when the requested construction and verification passed,
// 1 when a construction failed or a verifier rejected, 2 on usage errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tourlink/classic.hpp"
#include "tourlink/io.hpp"
#include "tourlink/oracle.hpp"
#include "tourlink/pipeline.hpp"

using namespace tourlink;

namespace {

constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kDotBackgroundLimit = 300;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Where the tournament comes from: a file, or generator flags.
struct HostOptions {
  std::string file;
  std::string model = "uniform";
  int n = 0;
  std::string base = "near";
  int blocks = 0;
  int width = 0;
  int block_size = 4;
};

struct Common {
  std::int64_t seed = -1;
  std::string profile = "desk";
  std::string out;
  std::string dot;
  bool timings = false;
};

void add_host_flags(CLI::App* cmd, HostOptions& h, bool positional_file) {
  if (positional_file)
    cmd->add_option("file", h.file, "tournament file (omit to generate)");
  cmd->add_option("--model", h.model, "uniform | paley | blowup");
  cmd->add_option("--n", h.n, "vertices (uniform, paley)");
  cmd->add_option("--base", h.base, "blowup base: near | circulant");
  cmd->add_option("--blocks", h.blocks, "blowup: base vertices");
  cmd->add_option("--width", h.width, "blowup, near base: backward arc span");
  cmd->add_option("--block-size", h.block_size, "blowup: vertices per block");
}

std::uint64_t need_seed(const Common& c, const std::string& what) {
  if (c.seed < 0) throw UsageError(what + " is randomized and needs an explicit --seed");
  return static_cast<std::uint64_t>(c.seed);
}

Tournament make_host(const HostOptions& h, const Common& c) {
  if (!h.file.empty()) return load_tournament(h.file);
  const Model model = parse_model(h.model);
  if (model == Model::kPaley) {
    if (h.n < 3) throw UsageError("--n is required for paley");
    return paley_tournament(h.n);
  }
  const std::uint64_t seed = need_seed(c, "tournament generation");
  if (model == Model::kUniform) {
    if (h.n < 1) throw UsageError("--n is required for uniform");
    return uniform_tournament(h.n, seed);
  }
  if (h.blocks < 1 || h.block_size < 1) throw UsageError("blowup needs --blocks and --block-size");
  Tournament base;
  if (h.base == "near") {
    if (h.width < 1 || h.width >= h.blocks) throw UsageError("near base needs 1 <= --width < --blocks");
    base = near_transitive_tournament(h.blocks, h.width);
  } else if (h.base == "circulant") {
    base = circulant_tournament(h.blocks);
  } else {
    throw UsageError("unknown --base " + h.base);
  }
  return blowup(base, std::vector<int>(h.blocks, h.block_size), seed);
}

ParamProfile make_profile(const Common& c) {
  ParamProfile p = parse_profile_mode(c.profile) == ProfileMode::kPaper ? ParamProfile::paper()
                                                                        : ParamProfile::desk();
  if (c.seed >= 0) p.seed = static_cast<std::uint64_t>(c.seed);
  return p;
}

// Drops wall-clock fields so that reports are byte-identical across runs.
void strip_timings(Json& j) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end();) {
      if (it.key().find("seconds") != std::string::npos) {
        it = j.erase(it);
      } else {
        strip_timings(it.value());
        ++it;
      }
    }
  } else if (j.is_array()) {
    for (auto& e : j) strip_timings(e);
  }
}

int emit(Json report, const Common& c, bool ok) {
  if (!c.timings) strip_timings(report);
  report["ok"] = ok;
  std::cout << report.dump(2) << "\n";
  return ok ? 0 : kFailed;
}

void save_structure(const Common& c, const std::string& kind, const Json& body) {
  if (c.out.empty()) return;
  Json j;
  j["kind"] = kind;
  j["structure"] = body;
  std::ofstream os(c.out);
  if (!os) throw UsageError("cannot write " + c.out);
  os << j.dump(1) << "\n";
}

void save_dot(const Common& c, const Tournament& t, const std::vector<int>& highlight,
              const std::vector<Path>& paths) {
  if (c.dot.empty()) return;
  std::ofstream os(c.dot);
  if (!os) throw UsageError("cannot write " + c.dot);
  // Past a few hundred vertices the grey arcs swamp the drawing (and the
  // disk), so large hosts get the highlighted structure only.
  write_dot(os, t, highlight, paths, t.n() <= kDotBackgroundLimit);
}

Json paths_json(const std::vector<Path>& ps) {
  Json a = Json::array();
  for (const Path& p : ps) a.push_back(p.vertices);
  return a;
}

std::vector<Path> paths_from(const Json& a) {
  std::vector<Path> ps;
  for (const auto& p : a) ps.emplace_back(p.get<std::vector<int>>());
  return ps;
}

// A closed cycle drawn as a path that returns to its start.
std::vector<Path> closed(const std::vector<Path>& cycles) {
  std::vector<Path> out;
  for (Path c : cycles) {
    if (!c.empty()) c.vertices.push_back(c.front());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::pair<int, int>> parse_pairs(const std::vector<std::string>& items) {
  std::vector<std::pair<int, int>> pairs;
  for (const std::string& s : items) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw UsageError("pair '" + s + "' is not x:y");
    try {
      pairs.emplace_back(std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1)));
    } catch (const std::exception&) {
      throw UsageError("pair '" + s + "' is not x:y");
    }
  }
  return pairs;
}

Side parse_side(const std::string& s) {
  if (s == "in") return Side::kIn;
  if (s == "out") return Side::kOut;
  throw UsageError("--side must be in or out");
}

// ------------------------------------------------------------- commands

int cmd_gen(const HostOptions& h, const Common& c) {
  const Tournament t = make_host(h, c);
  if (c.out.empty()) {
    write_tournament(std::cout, t);
  } else {
    save_tournament(c.out, t);
  }
  save_dot(c, t, {}, {});
  return 0;
}

int cmd_analyze(const HostOptions& h, const Common& c, bool list) {
  const Tournament t = make_host(h, c);
  Json r;
  r["n"] = t.n();
  int min_out = t.n(), max_out = 0, min_in = t.n(), max_in = 0;
  for (int v = 0; v < t.n(); ++v) {
    min_out = std::min(min_out, t.out_degree(v));
    max_out = std::max(max_out, t.out_degree(v));
    min_in = std::min(min_in, t.in_degree(v));
    max_in = std::max(max_in, t.in_degree(v));
  }
  r["strongly_connected"] = is_strongly_connected(t);
  r["strong_connectivity"] = strong_connectivity(t);
  r["out_degree"] = {{"min", min_out}, {"max", max_out}};
  r["in_degree"] = {{"min", min_in}, {"max", max_in}};
  const auto large_out = large_degree_vertices(t, Side::kOut);
  const auto large_in = large_degree_vertices(t, Side::kIn);
  r["large_out_count"] = large_out.size();
  r["large_in_count"] = large_in.size();
  if (list) {
    r["large_out"] = large_out;
    r["large_in"] = large_in;
  }
  save_dot(c, t, large_out, {});
  return emit(r, c, true);
}

// Dominator parameters: the paper profile's, or the small desk defaults,
// with any flag given on the command line taking precedence.
struct DominatorFlags {
  int m = 0, M = 0;
  double p = 0;
  std::int64_t L = 0;
};

int cmd_dominate(const HostOptions& h, const Common& c, const std::string& side,
                 const std::vector<int>& avoid, const DominatorFlags& f) {
  const Tournament t = make_host(h, c);
  const ParamProfile profile = make_profile(c);
  DominatorParams params = profile.is_paper() ? profile.dominator_params() : DominatorParams{};
  if (f.m > 0) params.m = f.m;
  if (f.M > 0) params.M = f.M;
  if (f.p > 0) params.p = f.p;
  if (f.L > 0) params.L = f.L;
  auto built = build_dominator(t, parse_side(side), avoid, params);
  Json r;
  r["command"] = "dominate";
  if (!built) {
    r["certificate"] = built.certificate().to_json();
    return emit(r, c, false);
  }
  const auto rep = verify_dominator(t, *built);
  r["dominator"] = to_json(*built);
  r["verification"] = rep.to_json();
  save_structure(c, "dominator", to_json(*built));
  save_dot(c, t, built->vertices(), {});
  return emit(r, c, rep.passed());
}

int cmd_connect(const HostOptions& h, const Common& c, const std::vector<int>& xs,
                const std::vector<int>& ys, const std::vector<int>& avoid, int budget,
                int restarts, int auto_count) {
  const Tournament t = make_host(h, c);
  std::vector<int> sources = xs, sinks = ys;
  if (auto_count > 0) {
    // Large out-degree sources and large in-degree sinks, each list
    // skipping vertices that are large on both sides.
    const auto lo = large_degree_vertices(t, Side::kOut);
    const auto li = large_degree_vertices(t, Side::kIn);
    sources.clear();
    sinks.clear();
    for (int v : lo)
      if (static_cast<int>(sources.size()) < auto_count && !std::binary_search(li.begin(), li.end(), v))
        sources.push_back(v);
    for (int v : li)
      if (static_cast<int>(sinks.size()) < auto_count && !std::binary_search(lo.begin(), lo.end(), v))
        sinks.push_back(v);
    const std::size_t both = std::min(sources.size(), sinks.size());
    sources.resize(both);
    sinks.resize(both);
  }
  if (sources.empty() || sources.size() != sinks.size())
    throw UsageError("give --xs and --ys of equal length, or --auto");
  if (budget <= 0) budget = static_cast<int>(sources.size());
  SearchOptions opts;
  opts.restarts = restarts;
  opts.seed = need_seed(c, "connect");
  auto built = build_connector(t, avoid, sources, sinks, budget, opts);
  Json r;
  r["command"] = "connect";
  if (!built) {
    r["certificate"] = built.certificate().to_json();
    return emit(r, c, false);
  }
  const auto rep = verify_connector(t, *built);
  r["connector"] = to_json(*built);
  r["verification"] = rep.to_json();
  save_structure(c, "connector", to_json(*built));
  save_dot(c, t, built->vertices, built->witness5.paths);
  return emit(r, c, rep.passed());
}

int cmd_linker(const HostOptions& h, const Common& c, int k, int t_width) {
  need_seed(c, "linker");
  const Tournament t = make_host(h, c);
  ParamProfile p = make_profile(c);
  if (t_width > 0) p.t = t_width;
  auto built = build_linkers(t, k, p.t, p);
  Json r;
  r["command"] = "linker";
  r["stats"] = built.stats;
  bool ok = built.ok();
  if (!ok) r["certificate"] = built.failure->to_json();
  Json ls = Json::array(), reps = Json::array();
  std::vector<int> shown;
  for (const Linker& l : built.linkers) {
    const auto rep = verify_linker(t, l);
    ok = ok && rep.passed();
    ls.push_back(to_json(l));
    reps.push_back(rep.to_json());
    for (int v : l.vertices()) shown.push_back(v);
  }
  r["verification"] = reps;
  save_structure(c, "linkers", ls);
  save_dot(c, t, shown, {});
  return emit(r, c, ok);
}

int cmd_hamdecomp(const HostOptions& h, const Common& c, int k, int family_size) {
  need_seed(c, "hamdecomp");
  const Tournament t = make_host(h, c);
  ParamProfile p = make_profile(c);
  p.family_size = family_size;
  const Decomposition d = edge_disjoint_ham_cycles(t, k, p);
  Json r;
  r["command"] = "hamdecomp";
  r["method"] = "linker pipeline";
  r["n"] = t.n();
  r["k"] = k;
  r["stats"] = d.stats;
  const auto rep = verify_decomposition(t, d.cycles);
  r["cycles_found"] = d.cycles.size();
  r["verification"] = rep.to_json();
  if (!d.ok()) r["certificate"] = d.failure->to_json();
  save_structure(c, "decomposition", paths_json(d.cycles));
  save_dot(c, t, {}, closed(d.cycles));
  const bool ok = d.ok() && static_cast<int>(d.cycles.size()) == k && rep.passed();
  return emit(r, c, ok);
}

// Plain check of a vertex-disjoint x_i -> y_i routing.
VerificationReport verify_pairs(const Tournament& t, const std::vector<std::pair<int, int>>& pairs,
                                const std::vector<Path>& paths) {
  VerificationReport rep("linkage");
  rep.add("count", paths.size() == pairs.size(),
          std::to_string(paths.size()) + " paths for " + std::to_string(pairs.size()) + " pairs");
  std::vector<int> seen(t.n(), 0);
  for (std::size_t i = 0; i < paths.size() && i < pairs.size(); ++i) {
    const Path& q = paths[i];
    const std::string name = "path " + std::to_string(i + 1);
    rep.add(name + " endpoints",
            !q.empty() && q.front() == pairs[i].first && q.back() == pairs[i].second);
    bool arcs = !q.empty();
    for (int v : q) arcs = arcs && v >= 0 && v < t.n();
    for (std::size_t j = 1; arcs && j < q.size(); ++j) arcs = t.arc(q.vertices[j - 1], q.vertices[j]);
    rep.add(name + " arcs", arcs);
    if (arcs)
      for (int v : q) ++seen[v];
  }
  rep.add("vertex-disjoint", std::all_of(seen.begin(), seen.end(), [](int s) { return s <= 1; }));
  return rep;
}

int cmd_linkpairs(const HostOptions& h, const Common& c, const std::vector<std::string>& items) {
  need_seed(c, "linkpairs");
  const Tournament t = make_host(h, c);
  const auto pairs = parse_pairs(items);
  auto built = link_pairs(t, pairs, make_profile(c));
  Json r;
  r["command"] = "linkpairs";
  if (!built) {
    r["certificate"] = built.certificate().to_json();
    return emit(r, c, false);
  }
  const auto rep = verify_pairs(t, pairs, built->paths);
  r["paths"] = paths_json(built->paths);
  r["verification"] = rep.to_json();
  Json body;
  body["pairs"] = Json::array();
  for (auto [x, y] : pairs) body["pairs"].push_back({x, y});
  body["paths"] = paths_json(built->paths);
  save_structure(c, "linkage", body);
  save_dot(c, t, {}, built->paths);
  return emit(r, c, rep.passed());
}

int cmd_audit(const Common& c, int k) {
  const ParamProfile p = parse_profile_mode(c.profile) == ProfileMode::kPaper
                             ? ParamProfile::paper()
                             : ParamProfile::desk();
  const ConstantsAudit a = audit_constants(k, p);
  return emit(a.to_json(), c, a.passed());
}

int cmd_verify(const std::string& tfile, const std::string& sfile, const Common& c) {
  const Tournament t = load_tournament(tfile);
  std::ifstream is(sfile);
  if (!is) throw UsageError("cannot read " + sfile);
  const Json j = Json::parse(is);
  const std::string kind = j.at("kind").get<std::string>();
  const Json& s = j.at("structure");
  VerificationReport rep("verify");
  if (kind == "dominator") {
    rep = verify_dominator(t, dominator_from_json(s));
  } else if (kind == "connector") {
    rep = verify_connector(t, connector_from_json(s));
  } else if (kind == "linkers") {
    for (std::size_t i = 0; i < s.size(); ++i)
      rep.merge(verify_linker(t, linker_from_json(s[i])), "linker " + std::to_string(i + 1) + ": ");
  } else if (kind == "decomposition") {
    rep = verify_decomposition(t, paths_from(s));
  } else if (kind == "linkage") {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : s.at("pairs")) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    rep = verify_pairs(t, pairs, paths_from(s.at("paths")));
  } else {
    throw UsageError("unknown structure kind " + kind);
  }
  Json r;
  r["kind"] = kind;
  r["verification"] = rep.to_json();
  return emit(r, c, rep.passed());
}

int cmd_oracle(const std::string& what, const HostOptions& h, const Common& c, int x, int y,
               int max_len) {
  const Tournament t = make_host(h, c);
  Json r;
  r["oracle"] = what;
  r["n"] = t.n();
  if (what == "ham-cycle") {
    const auto cyc = brute_ham_cycle(t);
    r["exists"] = cyc.has_value();
    if (cyc) r["cycle"] = cyc->vertices;
  } else if (what == "ham-path") {
    const auto p = brute_ham_path(t, x, y);
    r["exists"] = p.has_value();
    if (p) r["path"] = p->vertices;
  } else if (what == "connectivity") {
    r["strong_connectivity"] = brute_strong_connectivity(t);
  } else if (what == "disjoint-paths") {
    r["count"] = brute_disjoint_paths(t, x, y, max_len);
  } else if (what == "transitive") {
    r["max_transitive"] = max_transitive_size(t);
  } else if (what == "independence") {
    r["independence_number"] = independence_number(WorkingDigraph(t));
  } else {
    throw UsageError("unknown oracle " + what);
  }
  return emit(r, c, true);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tourlink: linkage structures and edge-disjoint Hamiltonian cycles in tournaments"};
  app.require_subcommand(1);
  HostOptions host;
  Common common;
  auto add_common = [&](CLI::App* cmd, bool with_out) {
    cmd->add_option("--seed", common.seed, "random seed (required for randomized steps)");
    cmd->add_option("--profile", common.profile, "desk | paper");
    cmd->add_option("--dot", common.dot, "write a Graphviz rendering here");
    cmd->add_flag("--timings", common.timings, "keep wall-clock fields in the report");
    if (with_out) cmd->add_option("--out", common.out, "write the built structure here");
  };

  auto* gen = app.add_subcommand("gen", "generate a tournament file");
  add_host_flags(gen, host, false);
  add_common(gen, true);

  bool list = false;
  auto* analyze = app.add_subcommand("analyze", "connectivity, degrees and large-degree sets");
  add_host_flags(analyze, host, true);
  add_common(analyze, false);
  analyze->add_flag("--list", list, "list the large-degree vertices");

  std::string side = "in";
  std::vector<int> avoid;
  auto* dominate = app.add_subcommand("dominate", "build and verify a dominator");
  add_host_flags(dominate, host, true);
  add_common(dominate, true);
  dominate->add_option("--side", side, "in | out");
  dominate->add_option("--avoid", avoid, "vertices the dominator must avoid")->delimiter(',');
  DominatorFlags dflags;
  dominate->add_option("--m", dflags.m, "core layer size m");
  dominate->add_option("--M", dflags.M, "outer layer size M");
  dominate->add_option("--p", dflags.p, "expansion parameter p");
  dominate->add_option("--L", dflags.L, "exceptional set bound L");

  std::vector<int> xs, ys;
  int budget = 0, restarts = 64, auto_count = 0;
  auto* connect = app.add_subcommand("connect", "build and verify a connector");
  add_host_flags(connect, host, true);
  add_common(connect, true);
  connect->add_option("--xs", xs, "candidate sources x_i")->delimiter(',');
  connect->add_option("--ys", ys, "candidate sinks y_i, paired with --xs")->delimiter(',');
  connect->add_option("--auto", auto_count, "take this many large-degree sources and sinks");
  connect->add_option("--avoid", avoid, "vertices to avoid")->delimiter(',');
  connect->add_option("--budget", budget, "pairs to route (default: all)");
  connect->add_option("--restarts", restarts, "reshuffled attempts");

  int k = 1, t_width = 0, family_size = 0;
  auto* linker = app.add_subcommand("linker", "build and verify k disjoint t-linkers");
  add_host_flags(linker, host, true);
  add_common(linker, true);
  linker->add_option("--k", k, "number of linkers");
  linker->add_option("--t", t_width, "linker width (default from the profile)");

  auto* hamdecomp = app.add_subcommand("hamdecomp", "k edge-disjoint Hamiltonian cycles");
  add_host_flags(hamdecomp, host, true);
  add_common(hamdecomp, true);
  hamdecomp->add_option("--k", k, "number of cycles");
  hamdecomp->add_option("--family-size", family_size, "linkers per round (0: one per cover path)");

  std::vector<std::string> pair_items;
  auto* linkpairs = app.add_subcommand("linkpairs", "vertex-disjoint x_i -> y_i paths");
  add_host_flags(linkpairs, host, true);
  add_common(linkpairs, true);
  linkpairs->add_option("--pairs", pair_items, "x:y pairs")->delimiter(',')->required();

  std::string audit_profile = "paper";
  auto* audit = app.add_subcommand("audit", "exact audit of the connectivity constants");
  audit->add_option("--k", k, "number of cycles");
  audit->add_option("--profile", audit_profile, "paper | desk");

  std::string tfile, sfile;
  auto* verify = app.add_subcommand("verify", "re-verify a structure written with --out");
  verify->add_option("tournament", tfile, "tournament file")->required();
  verify->add_option("structure", sfile, "structure file")->required();

  std::string what;
  int ox = 0, oy = 1, max_len = 3;
  auto* oracle = app.add_subcommand("oracle", "exhaustive oracles on small tournaments");
  oracle->add_option("what", what,
                     "ham-cycle | ham-path | connectivity | disjoint-paths | transitive | independence")
      ->required();
  add_host_flags(oracle, host, true);
  add_common(oracle, false);
  oracle->add_option("--x", ox, "path start / source");
  oracle->add_option("--y", oy, "path end / target");
  oracle->add_option("--max-len", max_len, "longest path counted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  try {
    if (*gen) return cmd_gen(host, common);
    if (*analyze) return cmd_analyze(host, common, list);
    if (*dominate) return cmd_dominate(host, common, side, avoid, dflags);
    if (*connect) return cmd_connect(host, common, xs, ys, avoid, budget, restarts, auto_count);
    if (*linker) return cmd_linker(host, common, k, t_width);
    if (*hamdecomp) return cmd_hamdecomp(host, common, k, family_size);
    if (*linkpairs) return cmd_linkpairs(host, common, pair_items);
    if (*audit) {
      common.profile = audit_profile;
      return cmd_audit(common, k);
    }
    if (*verify) return cmd_verify(tfile, sfile, common);
    if (*oracle) return cmd_oracle(what, host, common, ox, oy, max_len);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
