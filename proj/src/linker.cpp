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


// The linker structure: verification, serialization, the canonical
// fixture and the Hamiltonian weave.

#include <algorithm>
#include <map>
#include <set>

#include "tourlink/linkage.hpp"
#include "tourlink/oracle.hpp"

namespace tourlink {
namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string arc_name(int u, int v) { return std::to_string(u) + "->" + std::to_string(v); }

// First (u, v) with u in `from`, v in `to` and no arc u->v.
std::optional<std::pair<int, int>> missing_arc(const Tournament& t, const std::vector<int>& from,
                                               const std::vector<int>& to) {
  for (int u : from)
    for (int v : to)
      if (u != v && !t.arc(u, v)) return std::make_pair(u, v);
  return std::nullopt;
}

std::vector<int> connector_sources(const Connector& c) { return {c.sources.begin(), c.sources.end()}; }
std::vector<int> connector_sinks(const Connector& c) { return {c.sinks.begin(), c.sinks.end()}; }

}  // namespace

std::vector<int> Linker::essential_vertices() const {
  std::vector<int> v;
  for (const auto* side : {&in, &out})
    for (const Dominator& d : *side) {
      auto dv = d.vertices();
      v.insert(v.end(), dv.begin(), dv.end());
    }
  for (const Connector& c : connectors) v.insert(v.end(), c.vertices.begin(), c.vertices.end());
  return sorted_unique(std::move(v));
}

std::vector<int> Linker::path_vertices() const {
  std::vector<int> v;
  for (const Path& p : q) v.insert(v.end(), p.begin(), p.end());
  return sorted_unique(std::move(v));
}

std::vector<int> Linker::vertices() const {
  std::vector<int> v = essential_vertices();
  std::vector<int> p = path_vertices();
  v.insert(v.end(), p.begin(), p.end());
  return sorted_unique(std::move(v));
}

VerificationReport verify_linker(const Tournament& tt, const Linker& l) {
  VerificationReport r("linker");
  const int t = l.t();
  const bool shape = t >= 1 && static_cast<int>(l.out.size()) == t &&
                     static_cast<int>(l.connectors.size()) == t &&
                     static_cast<int>(l.q.size()) == 5 * t;
  r.add("shape", shape,
        "t=" + std::to_string(t) + " with " + std::to_string(l.out.size()) + " outdominators, " +
            std::to_string(l.connectors.size()) + " connectors, " + std::to_string(l.q.size()) +
            " paths");
  if (!shape) return r;

  bool orient = true;
  for (const Dominator& d : l.in) orient = orient && d.orientation == Side::kIn;
  for (const Dominator& d : l.out) orient = orient && d.orientation == Side::kOut;
  r.add("orientations", orient, "indominators must be in-oriented, outdominators out-oriented");

  // (L1): every listed part, pairwise disjoint.
  std::map<int, std::string> owner;
  std::string clash;
  auto claim = [&](const std::vector<int>& vs, const std::string& name) {
    for (int v : vs) {
      auto [it, fresh] = owner.emplace(v, name);
      if (!fresh && clash.empty())
        clash = "vertex " + std::to_string(v) + " in " + it->second + " and " + name;
    }
  };
  for (int i = 0; i < t; ++i) {
    claim(l.in[i].vertices(), "indominator " + std::to_string(i + 1));
    claim(l.out[i].vertices(), "outdominator " + std::to_string(i + 1));
    claim(l.connectors[i].vertices, "connector " + std::to_string(i + 1));
  }
  for (int j = 0; j < 5 * t; ++j) claim(sorted_unique(l.q[j].vertices), "Q" + std::to_string(j + 1));
  r.add("(L1) disjoint", clash.empty(), clash);

  std::string bad;
  for (int j = 0; j < 5 * t && bad.empty(); ++j)
    if (l.q[j].empty() || !is_path(tt, l.q[j])) bad = "Q" + std::to_string(j + 1) + " is not a path";
  r.add("Q paths", bad.empty(), bad);

  // (L2): one exceptional set containing every essential vertex.
  const std::vector<int> x = sorted_unique(l.exceptional);
  bad.clear();
  for (const auto* side : {&l.in, &l.out})
    for (const Dominator& d : *side)
      if (sorted_unique(d.exceptional) != x && bad.empty())
        bad = "a dominator's exceptional set differs from the linker's";
  for (int v : l.essential_vertices())
    if (!std::binary_search(x.begin(), x.end(), v) && bad.empty())
      bad = "essential vertex " + std::to_string(v) + " outside X";
  r.add("(L2) common exceptional set", bad.empty(), bad);

  // (L3)/(L4) compare uncovered sets by size.
  auto sizes = [](const std::vector<Dominator>& ds) {
    std::vector<std::size_t> s;
    for (const Dominator& d : ds) s.push_back(d.uncovered.size());
    return s;
  };
  const auto em = sizes(l.in), ep = sizes(l.out);
  r.add("(L3) |E-| non-increasing", std::is_sorted(em.rbegin(), em.rend()));
  r.add("(L3) |E+| non-increasing", std::is_sorted(ep.rbegin(), ep.rend()));
  r.add("(L4) uncovered sizes comparable", em.back() >= ep.front() || ep.back() >= em.front(),
        "|E-_t|=" + std::to_string(em.back()) + " |E+_1|=" + std::to_string(ep.front()) +
            " |E+_t|=" + std::to_string(ep.back()) + " |E-_1|=" + std::to_string(em.front()));

  // (L5) forced arcs.
  std::optional<std::pair<int, int>> miss;
  auto scan = [&](const std::string& name, auto&& pairs) {
    miss.reset();
    pairs();
    r.add(name, !miss, miss ? "missing arc " + arc_name(miss->first, miss->second) : "");
  };
  auto note = [&](const std::vector<int>& a, const std::vector<int>& b) {
    if (!miss) miss = missing_arc(tt, a, b);
  };
  scan("(L5) connector sinks to A1", [&] {
    for (const Connector& c : l.connectors)
      for (const Dominator& d : l.in) note(connector_sinks(c), d.sets[0]);
  });
  scan("(L5) B1 to connector sources", [&] {
    for (const Connector& c : l.connectors)
      for (const Dominator& d : l.out) note(d.sets[0], connector_sources(c));
  });
  scan("(L5) A4 to path starts", [&] {
    for (const Path& p : l.q)
      for (const Dominator& d : l.in)
        if (!p.empty()) note(d.sets[3], {p.front()});
  });
  scan("(L5) path ends to B4", [&] {
    for (const Path& p : l.q)
      for (const Dominator& d : l.out)
        if (!p.empty()) note({p.back()}, d.sets[3]);
  });

  for (int i = 0; i < t; ++i) {
    r.merge(verify_dominator(tt, l.in[i]), "indominator " + std::to_string(i + 1) + ": ");
    r.merge(verify_dominator(tt, l.out[i]), "outdominator " + std::to_string(i + 1) + ": ");
    r.merge(verify_connector(tt, l.connectors[i]), "connector " + std::to_string(i + 1) + ": ");
  }
  return r;
}

Json to_json(const Linker& l) {
  // The exceptional set is stored once; dominators share it.
  auto dom = [](const Dominator& d) {
    Json j = to_json(d);
    j.erase("exceptional");
    return j;
  };
  Json j;
  j["t"] = l.t();
  Json in = Json::array(), out = Json::array(), con = Json::array(), q = Json::array();
  for (const Dominator& d : l.in) in.push_back(dom(d));
  for (const Dominator& d : l.out) out.push_back(dom(d));
  for (const Connector& c : l.connectors) con.push_back(to_json(c));
  for (const Path& p : l.q) q.push_back(p.vertices);
  j["indominators"] = in;
  j["outdominators"] = out;
  j["connectors"] = con;
  j["q"] = q;
  j["exceptional"] = sorted_unique(l.exceptional);
  return j;
}

Linker linker_from_json(const Json& j) {
  Linker l;
  l.exceptional = j.at("exceptional").get<std::vector<int>>();
  auto dom = [&](Json d) {
    d["exceptional"] = l.exceptional;
    return dominator_from_json(d);
  };
  for (const auto& d : j.at("indominators")) l.in.push_back(dom(d));
  for (const auto& d : j.at("outdominators")) l.out.push_back(dom(d));
  for (const auto& c : j.at("connectors")) l.connectors.push_back(connector_from_json(c));
  for (const auto& p : j.at("q")) l.q.emplace_back(p.get<std::vector<int>>());
  return l;
}

std::vector<std::pair<int, int>> linker_arcs(const Tournament& t, const Linker& l) {
  std::set<std::pair<int, int>> arcs;
  auto inside = [&](const std::vector<int>& vs) {
    for (int u : vs)
      for (int v : vs)
        if (u != v && t.arc(u, v)) arcs.emplace(u, v);
  };
  auto across = [&](const std::vector<int>& a, const std::vector<int>& b) {
    for (int u : a)
      for (int v : b)
        if (u != v && t.arc(u, v)) arcs.emplace(u, v);
  };
  for (const auto* side : {&l.in, &l.out})
    for (const Dominator& d : *side) inside(d.vertices());
  for (const Connector& c : l.connectors) inside(c.vertices);
  for (const Path& p : l.q)
    for (std::size_t i = 1; i < p.size(); ++i) arcs.emplace(p.vertices[i - 1], p.vertices[i]);
  for (const Connector& c : l.connectors) {
    for (const Dominator& d : l.in) across(connector_sinks(c), d.sets[0]);
    for (const Dominator& d : l.out) across(d.sets[0], connector_sources(c));
  }
  for (const Path& p : l.q) {
    for (const Dominator& d : l.in) across(d.sets[3], {p.front()});
    for (const Dominator& d : l.out) across({p.back()}, d.sets[3]);
  }
  return {arcs.begin(), arcs.end()};
}

// ------------------------------------------------------------ canonical_linker

CanonicalLinker canonical_linker(int t, std::uint64_t seed, const CanonicalShape& shape) {
  if (t < 1) throw PreconditionError("canonical_linker needs t >= 1");
  if (shape.layer < 1 || shape.q_length < 0 || shape.slack < 0)
    throw PreconditionError("canonical_linker: bad shape");
  const int per_dom = 4 * shape.layer;
  const int per_q = shape.q_length + 1;
  const int n = t * (2 * per_dom + 10 + 5 * per_q) + shape.slack;

  Linker l;
  int next = 0;
  auto take = [&](int count) {
    std::vector<int> v(count);
    for (int& x : v) x = next++;
    return v;
  };
  for (int i = 0; i < t; ++i)
    for (Side side : {Side::kIn, Side::kOut}) {
      Dominator d;
      d.orientation = side;
      d.m = d.M = shape.layer;
      d.p = 8;
      // Ids increase along the transitive order of the whole dominator:
      // A1 A2 A3 A4 for the in side, B4 B3 B2 B1 for the out side.
      for (int s = 0; s < 4; ++s) d.sets[side == Side::kIn ? s : 3 - s] = take(shape.layer);
      (side == Side::kIn ? l.in : l.out).push_back(std::move(d));
    }
  for (int i = 0; i < t; ++i) {
    Connector c;
    // Transitive order x1..x5 y5 y1..y4. With y5 last it could not be
    // covered by four paths.
    c.vertices = take(10);
    for (int k = 0; k < 5; ++k) {
      c.sources[k] = c.vertices[k];
      c.sinks[k] = c.vertices[k == 4 ? 5 : 6 + k];
      c.witness5.paths.push_back(Path{c.sources[k], c.sinks[k]});
    }
    c.witness4.paths.push_back(Path{c.sources[0], c.sources[4], c.sinks[4], c.sinks[0]});
    for (int k = 1; k < 4; ++k) c.witness4.paths.push_back(Path{c.sources[k], c.sinks[k]});
    l.connectors.push_back(std::move(c));
  }
  for (int j = 0; j < 5 * t; ++j) l.q.emplace_back(take(per_q));
  const std::vector<int> slack = take(shape.slack);

  // forced[u][v] = 1 asks for u->v.
  std::vector<std::vector<signed char>> forced(n, std::vector<signed char>(n, 0));
  auto force = [&](int u, int v) {
    if (forced[v][u]) throw std::logic_error("canonical_linker: conflicting arcs");
    forced[u][v] = 1;
  };
  auto chain = [&](const std::vector<int>& vs) {
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b) force(vs[a], vs[b]);
  };
  for (const auto* side : {&l.in, &l.out})
    for (const Dominator& d : *side) {
      std::vector<int> all = d.vertices();  // ids follow the transitive order
      chain(all);
    }
  for (const Connector& c : l.connectors) chain(c.vertices);
  for (const Path& p : l.q)
    for (std::size_t i = 1; i < p.size(); ++i) force(p.vertices[i - 1], p.vertices[i]);
  for (const Connector& c : l.connectors) {
    for (const Dominator& d : l.in)
      for (int u : c.sinks)
        for (int v : d.sets[0]) force(u, v);
    for (const Dominator& d : l.out)
      for (int u : d.sets[0])
        for (int v : c.sources) force(u, v);
  }
  for (const Path& p : l.q) {
    for (const Dominator& d : l.in)
      for (int u : d.sets[3]) force(u, p.front());
    for (const Dominator& d : l.out)
      for (int v : d.sets[3]) force(p.back(), v);
  }
  // Every vertex outside X is dominated by every core, so E stays empty.
  std::vector<int> outside = l.path_vertices();
  outside.insert(outside.end(), slack.begin(), slack.end());
  for (int w : outside) {
    for (const Dominator& d : l.in)
      if (!forced[d.sets[1][0]][w]) force(w, d.sets[1][0]);
    for (const Dominator& d : l.out)
      if (!forced[w][d.sets[1][0]]) force(d.sets[1][0], w);
  }

  CoinStream coins(seed);
  Tournament host = Tournament::build(n, [&](int u, int v) {
    if (forced[u][v]) return true;
    if (forced[v][u]) return false;
    return coins.next();
  });
  l.exceptional = l.essential_vertices();
  for (auto* side : {&l.in, &l.out})
    for (Dominator& d : *side) d.exceptional = l.exceptional;
  return {std::move(host), std::move(l)};
}

// ------------------------------------------------------------ linker_ham_path

namespace {

struct Split {
  Path special;
  std::vector<Path> paths;
};

// Splits layered sets (given in path order, each in transitive order) into
// a path through `sp` plus k paths running from the first layer to the
// last. The special path starts at sp when `from_sp`, otherwise ends there.
Split split_layers(const std::vector<std::vector<int>>& layers, int k, int sp, bool from_sp) {
  const int nl = static_cast<int>(layers.size());
  std::vector<std::vector<int>> rest = layers;
  Split out;
  if (sp >= 0) {
    int ls = -1;
    for (int i = 0; i < nl; ++i)
      if (std::find(layers[i].begin(), layers[i].end(), sp) != layers[i].end()) ls = i;
    if (ls < 0) throw std::logic_error("weave: special vertex outside the dominator");
    std::erase(rest[ls], sp);
    if (from_sp) {
      out.special.vertices.push_back(sp);
      for (int i = ls + 1; i < nl; ++i) {
        out.special.vertices.push_back(rest[i].front());
        rest[i].erase(rest[i].begin());
      }
    } else {
      for (int i = 0; i < ls; ++i) {
        out.special.vertices.push_back(rest[i].back());
        rest[i].pop_back();
      }
      out.special.vertices.push_back(sp);
    }
  }
  out.paths.assign(k, Path{});
  for (const auto& layer : rest) {
    const int r = static_cast<int>(layer.size());
    if (r < k) throw std::logic_error("weave: a dominator set is too small to split");
    int pos = 0;
    for (int g = 0; g < k; ++g) {
      const int len = r / k + (g < r % k ? 1 : 0);
      for (int c = 0; c < len; ++c) out.paths[g].vertices.push_back(layer[pos++]);
    }
  }
  return out;
}

std::vector<std::vector<int>> in_layers(const Dominator& d) {
  return {d.sets[0], d.sets[1], d.sets[2], d.sets[3]};
}
std::vector<std::vector<int>> out_layers(const Dominator& d) {
  return {d.sets[3], d.sets[2], d.sets[1], d.sets[0]};
}

// Hamiltonian path of one 1-linker from `start` (in the indominator) to
// `end`: a vertex of the outdominator, or a connector sink when to_sink.
Path weave_one(const Dominator& din, const Dominator& dout, const Connector& c,
               const std::vector<Path>& q, int start, int end, bool to_sink) {
  Split pin = split_layers(in_layers(din), 4, start, true);
  Split pout = to_sink ? split_layers(out_layers(dout), 5, -1, false)
                       : split_layers(out_layers(dout), 4, end, false);
  std::vector<Path> r;
  if (to_sink) {
    Path last;
    for (const Path& w : c.witness5.paths) {
      if (w.back() == end)
        last = w;
      else
        r.push_back(w);
    }
    if (last.empty()) throw std::logic_error("weave: end is not a connector sink");
    r.push_back(last);
  } else {
    r = c.witness4.paths;
  }
  Path out = pin.special;
  for (int i = 0; i < 4; ++i) {
    out.append(q[i]);
    out.append(pout.paths[i]);
    out.append(r[i]);
    out.append(pin.paths[i]);
  }
  out.append(q[4]);
  if (to_sink) {
    out.append(pout.paths[4]);
    out.append(r[4]);
  } else {
    out.append(pout.special);
  }
  return out;
}

int find_in(const std::vector<Dominator>& ds, int v) {
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const auto vs = ds[i].vertices();
    if (std::binary_search(vs.begin(), vs.end(), v)) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

Path linker_ham_path(const Tournament& tt, const Linker& l, int x, int y) {
  const int t = l.t();
  if (t < 1 || static_cast<int>(l.q.size()) != 5 * t)
    throw PreconditionError("linker_ham_path: malformed linker");
  if (x == y) throw PreconditionError("linker_ham_path: x and y must differ");
  const int a = find_in(l.in, x);
  if (a < 0) throw PreconditionError("linker_ham_path: x is not in an indominator");
  int b = find_in(l.out, y);
  const bool to_sink = b < 0;
  if (to_sink) {
    const auto& s = l.connectors[0].sinks;
    if (t != 1 || std::find(s.begin(), s.end(), y) == s.end())
      throw PreconditionError("linker_ham_path: y is not in an outdominator (or a sink for t = 1)");
  }
  for (const auto* side : {&l.in, &l.out})
    for (const Dominator& d : *side) {
      if (!is_layered(tt, d)) throw std::logic_error("linker_ham_path: dominator is not layered");
      for (const auto& s : d.sets)
        if (s.size() < 5) throw std::logic_error("linker_ham_path: dominator set below 5 vertices");
    }

  // Pair dominators into 1-linkers so the first holds x and the last y.
  std::vector<int> ins{a}, outs;
  for (int i = 0; i < t; ++i) {
    if (i != a) ins.push_back(i);
    if (i != b) outs.push_back(i);
  }
  if (!to_sink) outs.push_back(b);

  Path path;
  for (int k = 0; k < t; ++k) {
    const Dominator& din = l.in[ins[k]];
    const int start = k == 0 ? x : din.sets[0].front();
    const bool last = k == t - 1;
    const int end = last ? y : l.connectors[k].sinks[4];
    std::vector<Path> q(l.q.begin() + 5 * k, l.q.begin() + 5 * k + 5);
    path.append(weave_one(din, l.out[outs[k]], l.connectors[k], q, start, end, !last || to_sink));
  }

  std::vector<int> seen = path.vertices;
  std::sort(seen.begin(), seen.end());
  if (seen != l.vertices() || !is_path(tt, path) || path.front() != x || path.back() != y)
    throw std::logic_error("linker_ham_path: weave is not a Hamiltonian x-y path of L");
  return path;
}

}  // namespace tourlink
