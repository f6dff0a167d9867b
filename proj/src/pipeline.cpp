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


#include "tourlink/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <unordered_set>

#include "tourlink/classic.hpp"

namespace tourlink {
namespace {

Path drop_front(const Path& p) { return Path(std::vector<int>(p.begin() + 1, p.end())); }
Path drop_back(const Path& p) { return Path(std::vector<int>(p.begin(), p.end() - 1)); }

Certificate wrap(const std::string& stage, const std::string& reason, const Certificate& inner) {
  Certificate c{stage, reason};
  c.witness["inner_stage"] = inner.stage;
  c.witness["inner_reason"] = inner.reason;
  if (!inner.witness.empty()) c.witness["inner_witness"] = inner.witness;
  return c;
}

std::uint64_t arc_key(int u, int v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

bool reaches_indominator(const WorkingDigraph& d, const Linker& l, int x) {
  for (const Dominator& dom : l.in)
    for (const auto& s : dom.sets)
      for (int u : s)
        if (d.has_arc(x, u)) return true;
  return false;
}

bool reached_by_outdominator(const WorkingDigraph& d, const Linker& l, int y) {
  for (const Dominator& dom : l.out)
    for (const auto& s : dom.sets)
      for (int u : s)
        if (d.has_arc(u, y)) return true;
  return false;
}

using ArcTest = std::function<bool(int, int)>;

// Inserts a between two consecutive vertices of p, never before the first
// or after the last one.
bool insert_interior(const ArcTest& arc, std::vector<int>& p, int a) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (arc(p[i], a) && arc(a, p[i + 1])) {
      p.insert(p.begin() + static_cast<std::ptrdiff_t>(i) + 1, a);
      return true;
    }
  return false;
}

// New start at the first good vertex that lets the skipped prefix be
// re-inserted; the last vertex stays put.
std::optional<std::vector<int>> insert_prefix(const ArcTest& arc, const std::vector<int>& q,
                                              const std::function<bool(int)>& good) {
  int tries = 0;
  for (std::size_t j = 1; j + 1 < q.size() && tries < 32; ++j) {
    if (!good(q[j])) continue;
    ++tries;
    std::vector<int> rest(q.begin() + static_cast<std::ptrdiff_t>(j), q.end());
    bool ok = true;
    for (std::size_t i = j; i-- > 0 && ok;) ok = insert_interior(arc, rest, q[i]);
    if (ok) return rest;
  }
  return std::nullopt;
}

// Rotation at the start of q = p0..pm: with pi -> p0 and pj -> p(i+1) for
// j < i, the path p(j+1)..pi, p0..pj, p(i+1)..pm starts at p(j+1) and keeps
// its end.
std::optional<std::vector<int>> rotate_start(const ArcTest& arc, const std::vector<int>& q,
                                             const std::function<bool(int)>& good) {
  const std::size_t m = q.size();
  int pivots = 0;
  for (std::size_t i = m - 2; i >= 1 && pivots < 64; --i) {
    if (!arc(q[i], q[0])) continue;
    ++pivots;
    for (std::size_t j = i; j-- > 0;) {
      if (!good(q[j + 1]) || !arc(q[j], q[i + 1])) continue;
      std::vector<int> out(q.begin() + static_cast<std::ptrdiff_t>(j) + 1,
                           q.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      out.insert(out.end(), q.begin(), q.begin() + static_cast<std::ptrdiff_t>(j) + 1);
      out.insert(out.end(), q.begin() + static_cast<std::ptrdiff_t>(i) + 1, q.end());
      return out;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> fix_start(const ArcTest& arc, const std::vector<int>& q,
                                          const std::function<bool(int)>& good) {
  if (good(q.front())) return q;
  if (q.size() < 3) return std::nullopt;
  if (auto r = rotate_start(arc, q, good)) return r;
  return insert_prefix(arc, q, good);
}

// Re-routes a short stretch p[i..i+w] of the path so that it also passes
// through v, keeping p[i] and p[i+w] in place. Small windows are solved
// exactly by a subset DP.
bool insert_by_window(const WorkingDigraph& d, std::vector<int>& p, int v) {
  constexpr int kWindow = 7;
  for (std::size_t i = 0; i + kWindow < p.size(); ++i) {
    // Inner vertices: p[i+1..i+w-1] plus v; ends p[i] and p[i+w].
    std::vector<int> inner(p.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                           p.begin() + static_cast<std::ptrdiff_t>(i) + kWindow);
    bool feeds = d.has_arc(p[i], v), fed = d.has_arc(v, p[i + kWindow]);
    for (int u : inner) {
      feeds = feeds || d.has_arc(u, v);
      fed = fed || d.has_arc(v, u);
    }
    if (!feeds || !fed) continue;
    inner.push_back(v);
    const int m = static_cast<int>(inner.size());
    const int full = (1 << m) - 1;
    // reach[mask][j]: a path p[i] -> (mask) ending at inner[j]; prev for
    // reconstruction.
    std::vector<std::vector<signed char>> prev(1 << m, std::vector<signed char>(m, -2));
    for (int j = 0; j < m; ++j)
      if (d.has_arc(p[i], inner[j])) prev[1 << j][j] = -1;
    for (int mask = 1; mask <= full; ++mask)
      for (int j = 0; j < m; ++j) {
        if (prev[mask][j] == -2 || !(mask >> j & 1)) continue;
        for (int l = 0; l < m; ++l)
          if (!(mask >> l & 1) && prev[mask | 1 << l][l] == -2 && d.has_arc(inner[j], inner[l]))
            prev[mask | 1 << l][l] = static_cast<signed char>(j);
      }
    for (int j = 0; j < m; ++j) {
      if (prev[full][j] == -2 || !d.has_arc(inner[j], p[i + kWindow])) continue;
      std::vector<int> order;
      for (int mask = full, at = j; at >= 0;) {
        order.push_back(inner[at]);
        const int back = prev[mask][at];
        mask ^= 1 << at;
        at = back;
      }
      std::reverse(order.begin(), order.end());
      std::copy(order.begin(), order.end() - 1, p.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      p.insert(p.begin() + static_cast<std::ptrdiff_t>(i) + kWindow, order.back());
      return true;
    }
  }
  return false;
}

// Places v inside one of the paths: between two consecutive vertices if
// possible, otherwise at an end (ends are repaired later), otherwise in
// place of a middle vertex z that can itself be placed between two
// consecutive vertices.
bool absorb_vertex(const WorkingDigraph& d, PathSystem& ps, int v) {
  const ArcTest arc = [&](int a, int b) { return d.has_arc(a, b); };
  for (Path& q : ps.paths)
    if (insert_interior(arc, q.vertices, v)) return true;
  for (Path& q : ps.paths) {
    if (d.has_arc(v, q.front())) {
      q.vertices.insert(q.vertices.begin(), v);
      return true;
    }
    if (d.has_arc(q.back(), v)) {
      q.vertices.push_back(v);
      return true;
    }
  }
  for (Path& q : ps.paths) {
    auto& p = q.vertices;
    for (std::size_t i = 0; i + 2 < p.size(); ++i) {
      if (!d.has_arc(p[i], v) || !d.has_arc(v, p[i + 2])) continue;
      const int z = p[i + 1];
      p[i + 1] = v;
      for (Path& r : ps.paths)
        if (insert_interior(arc, r.vertices, z)) return true;
      p[i + 1] = z;
    }
  }
  for (Path& q : ps.paths)
    if (insert_by_window(d, q.vertices, v)) return true;
  return false;
}

// Absorbs the given vertices, retrying the stuck ones while any progress
// is made.
std::vector<int> absorb_all(const WorkingDigraph& d, PathSystem& ps, std::vector<int> pending) {
  while (!pending.empty()) {
    std::vector<int> stuck;
    for (int v : pending)
      if (!absorb_vertex(d, ps, v)) stuck.push_back(v);
    if (stuck.size() == pending.size()) return stuck;
    pending = std::move(stuck);
  }
  return {};
}

// Desk fallback for covers with more paths than the family: the shortest
// path is dissolved into the others.
std::optional<PathSystem> shrink_cover(const WorkingDigraph& d, PathSystem ps, int target) {
  while (static_cast<int>(ps.size()) > target) {
    auto shortest = std::min_element(ps.paths.begin(), ps.paths.end(),
                                      [](const Path& a, const Path& b) { return a.size() < b.size(); });
    const Path gone = *shortest;
    ps.paths.erase(shortest);
    if (!absorb_all(d, ps, gone.vertices).empty()) return std::nullopt;
  }
  return ps;
}

}  // namespace

std::optional<Path> repair_ends(const WorkingDigraph& d, const Path& q,
                                const std::function<bool(int)>& good_start,
                                const std::function<bool(int)>& good_end) {
  if (q.size() < 2) return std::nullopt;
  const ArcTest forward = [&](int u, int v) { return d.has_arc(u, v); };
  const ArcTest backward = [&](int u, int v) { return d.has_arc(v, u); };
  auto head = fix_start(forward, q.vertices, good_start);
  if (!head) return std::nullopt;
  // Fixing the end is fixing the start of the reversed path.
  auto tail = fix_start(backward, std::vector<int>(head->rbegin(), head->rend()), good_end);
  if (!tail) return std::nullopt;
  Path out(std::vector<int>(tail->rbegin(), tail->rend()));
  if (!is_path(d, out) || !good_start(out.front()) || !good_end(out.back())) return std::nullopt;
  return out;
}

Built<Path> ham_cycle_from_partition(const WorkingDigraph& d, const PathSystem& paths,
                                     const std::vector<Linker>& family,
                                     const ParamProfile& profile) {
  const int k = static_cast<int>(paths.size());
  if (k < 1 || static_cast<int>(family.size()) != k)
    throw PreconditionError("need k >= 1 paths and a family of the same size");
  std::vector<int> seen(d.n(), 0);
  for (const Path& q : paths.paths) {
    if (q.empty() || !is_path(d, q)) throw PreconditionError("a partition path is not a path of D");
    for (int v : q) ++seen[v];
  }
  for (const Linker& l : family)
    for (int v : l.vertices()) ++seen[v];
  for (int v = 0; v < d.n(); ++v)
    if (seen[v] != 1) throw PreconditionError("paths and linkers must partition V(D)");

  std::vector<Path> qs = paths.paths;
  std::vector<Linker> fam = family;
  while (qs.size() > 1) {
    const std::size_t m = qs.size();
    const Path& qa = qs[m - 2];
    const Path& qb = qs[m - 1];
    const int x = qa.back(), y = qb.front();
    PathSystem prot;
    prot.paths.assign(qs.begin(), qs.end() - 2);
    const Path qa_rest = drop_back(qa), qb_rest = drop_front(qb);
    if (!qa_rest.empty()) prot.paths.push_back(qa_rest);
    if (!qb_rest.empty()) prot.paths.push_back(qb_rest);
    auto step = linking_family_step(d, fam, x, y, prot, profile);
    if (!step) {
      Certificate c = wrap("ham_cycle_from_partition", "linking step failed", step.certificate());
      c.witness["paths_left"] = m;
      c.witness["x"] = x;
      c.witness["y"] = y;
      return c;
    }
    std::vector<Path> next(step->rerouted.paths.begin(), step->rerouted.paths.begin() + (m - 2));
    std::size_t at = m - 2;
    Path merged = qa_rest.empty() ? Path{} : step->rerouted.paths[at++];
    merged.append(step->path);
    if (!qb_rest.empty()) merged.append(step->rerouted.paths[at]);
    next.push_back(std::move(merged));
    qs = std::move(next);
    fam = step->residual;
  }

  const Path& q = qs.front();
  if (q.size() < 2) throw PreconditionError("the last path needs two distinct ends");
  const int x = q.back(), y = q.front();
  PathSystem prot;
  if (q.size() > 2) prot.paths.push_back(Path(std::vector<int>(q.begin() + 1, q.end() - 1)));
  auto step = linking_family_step(d, fam, x, y, prot, profile);
  if (!step) return wrap("ham_cycle_from_partition", "closing step failed", step.certificate());
  Path cycle{y};
  if (!prot.paths.empty()) cycle.append(step->rerouted.paths[0]);
  cycle.append(drop_back(step->path));
  if (!is_ham_cycle(d, cycle)) {
    Certificate c{"ham_cycle_from_partition", "assembled sequence is not a Hamiltonian cycle"};
    return c;
  }
  return cycle;
}

Decomposition edge_disjoint_ham_cycles(const Tournament& t, int k, const ParamProfile& profile) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  profile.check();
  const auto start = std::chrono::steady_clock::now();
  Decomposition out;
  const int f = profile.family_size > 0 ? profile.family_size : k;
  out.stats["n"] = t.n();
  out.stats["k"] = k;
  out.stats["family_size"] = f;

  LinkerBuild built = build_linkers(t, k * f, profile.t, profile);
  out.stats["linkers"] = built.stats;
  if (!built.ok()) {
    out.failure = wrap("edge_disjoint_ham_cycles", "linker construction failed", *built.failure);
    return out;
  }
  auto family_of = [&](int round) {
    return std::vector<Linker>(built.linkers.begin() + round * f,
                               built.linkers.begin() + (round + 1) * f);
  };

  // Arcs held back for each round. Paper mode holds every arc of the
  // round's linkers; desk mode holds the planned weave of each linker,
  // which is all a later round uses when it enters at the planned pair.
  std::vector<std::vector<std::pair<int, int>>> reserved(k);
  for (int r = 0; r < k; ++r)
    for (const Linker& l : family_of(r)) {
      if (profile.is_paper()) {
        auto arcs = linker_arcs(t, l);
        reserved[r].insert(reserved[r].end(), arcs.begin(), arcs.end());
      } else {
        const Path w = planned_weave(t, l);
        for (std::size_t i = 1; i < w.size(); ++i)
          reserved[r].emplace_back(w.vertices[i - 1], w.vertices[i]);
      }
    }

  Json rounds = Json::array();
  for (int round = 0; round < k; ++round) {
    WorkingDigraph d(t);
    for (int r = round + 1; r < k; ++r)
      for (auto [u, v] : reserved[r]) d.remove_arc(u, v);
    for (const Path& c : out.cycles)
      for (std::size_t i = 0; i < c.size(); ++i) d.remove_arc(c.vertices[i], c.vertices[(i + 1) % c.size()]);

    const std::vector<Linker> fam = family_of(round);
    Bitset within(t.n());
    within.set_all();
    for (const Linker& l : fam)
      for (int v : l.vertices()) within.reset(v);

    PathSystem cover = gallai_milgram_cover(d, &within);
    Json rs;
    rs["cover_paths"] = cover.size();
    std::optional<PathSystem> shrunk = cover;
    if (shrunk && static_cast<int>(shrunk->size()) > f && !profile.is_paper())
      shrunk = shrink_cover(d, *shrunk, f);
    if (!shrunk || static_cast<int>(shrunk->size()) > f) {
      Certificate c{"edge_disjoint_ham_cycles", "path cover is larger than the family"};
      c.witness["round"] = round + 1;
      c.witness["cover_paths"] = cover.size();
      c.witness["family_size"] = f;
      out.failure = c;
      rounds.push_back(rs);
      out.stats["rounds"] = rounds;
      return out;
    }
    PathSystem parts = split_paths(*shrunk, f);

    // Path j starts where linker j can deliver and ends where linker j+1
    // can pick up.
    int repaired = 0;
    for (int j = 0; j < f; ++j) {
      const Linker& in_link = fam[j];
      const Linker& out_link = fam[(j + 1) % f];
      auto good_start = [&](int v) {
        return profile.is_paper() ? reached_by_outdominator(d, in_link, v)
                                  : d.has_arc(planned_exit(in_link), v);
      };
      auto good_end = [&](int v) {
        return profile.is_paper() ? reaches_indominator(d, out_link, v)
                                  : d.has_arc(v, planned_entry(out_link));
      };
      Path& q = parts.paths[j];
      if (good_start(q.front()) && good_end(q.back())) continue;
      auto fixed = repair_ends(d, q, good_start, good_end);
      if (!fixed) continue;  // the linking step reports what goes wrong
      q = *fixed;
      ++repaired;
    }
    rs["repaired_paths"] = repaired;

    auto cycle = ham_cycle_from_partition(d, parts, fam, profile);
    if (!cycle) {
      Certificate c = wrap("edge_disjoint_ham_cycles", "round " + std::to_string(round + 1) + " failed",
                           cycle.certificate());
      out.failure = c;
      rounds.push_back(rs);
      out.stats["rounds"] = rounds;
      return out;
    }
    // Bookkeeping check: no arc reserved for a later round.
    std::unordered_set<std::uint64_t> later;
    for (int r = round + 1; r < k; ++r)
      for (auto [u, v] : reserved[r]) later.insert(arc_key(u, v));
    const Path& c = *cycle;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (later.count(arc_key(c.vertices[i], c.vertices[(i + 1) % c.size()]))) {
        out.failure = Certificate{"edge_disjoint_ham_cycles", "cycle uses an arc reserved for a later round"};
        return out;
      }
    out.cycles.push_back(c);
    rounds.push_back(rs);
  }
  out.stats["rounds"] = rounds;

  const auto report = verify_decomposition(t, out.cycles);
  if (!report.passed()) {
    Certificate c{"edge_disjoint_ham_cycles", "decomposition fails verification"};
    c.witness["clause"] = report.first_failure()->name;
    out.failure = c;
  }
  out.stats["seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

Built<PathSystem> link_pairs(const Tournament& t, const std::vector<std::pair<int, int>>& pairs,
                             const ParamProfile& profile) {
  const int k = static_cast<int>(pairs.size());
  if (k < 1) throw PreconditionError("need at least one pair");
  std::set<int> ends;
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= t.n() || y < 0 || y >= t.n()) throw PreconditionError("endpoint outside the host");
    if (!ends.insert(x).second || !ends.insert(y).second)
      throw PreconditionError("all 2k endpoints must be distinct");
  }
  profile.check();

  // Up to 3k linkers, of which k avoid the endpoints.
  std::vector<Linker> family;
  for (int count = k; count <= 3 * k && static_cast<int>(family.size()) < k; count += k) {
    LinkerBuild built = build_linkers(t, count, profile.t, profile);
    if (!built.ok()) return wrap("link_pairs", "linker construction failed", *built.failure);
    family.clear();
    for (const Linker& l : built.linkers) {
      const auto lv = l.vertices();
      const bool clear = std::none_of(ends.begin(), ends.end(), [&](int v) {
        return std::binary_search(lv.begin(), lv.end(), v);
      });
      if (clear && static_cast<int>(family.size()) < k) family.push_back(l);
    }
  }
  if (static_cast<int>(family.size()) < k)
    return Certificate{"link_pairs", "fewer than k linkers avoid the endpoints"};

  const WorkingDigraph d(t);
  std::vector<Path> routed;
  for (int i = 0; i < k; ++i) {
    PathSystem prot;
    prot.paths = routed;
    for (int j = i + 1; j < k; ++j) {
      prot.paths.push_back(Path{pairs[j].first});
      prot.paths.push_back(Path{pairs[j].second});
    }
    auto step = linking_family_step(d, family, pairs[i].first, pairs[i].second, prot, profile);
    if (!step) {
      Certificate c = wrap("link_pairs", "linking step failed", step.certificate());
      c.witness["pair"] = i;
      return c;
    }
    routed.assign(step->rerouted.paths.begin(), step->rerouted.paths.begin() + i);
    routed.push_back(step->path);
    family = step->residual;
  }
  PathSystem out;
  out.paths = routed;
  return out;
}

VerificationReport verify_decomposition(const Tournament& t, const std::vector<Path>& cycles) {
  VerificationReport rep("decomposition");
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const Path& c = cycles[i];
    std::vector<int> sorted = c.vertices;
    std::sort(sorted.begin(), sorted.end());
    bool cover = static_cast<int>(sorted.size()) == t.n();
    for (int v = 0; cover && v < t.n(); ++v) cover = sorted[v] == v;
    rep.add("cycle " + std::to_string(i + 1) + " coverage", cover,
            "every vertex exactly once");
    bool arcs = !c.empty();
    std::size_t bad = 0;
    for (std::size_t j = 0; arcs && j < c.size(); ++j) {
      const int u = c.vertices[j], v = c.vertices[(j + 1) % c.size()];
      arcs = u >= 0 && u < t.n() && v >= 0 && v < t.n() && (c.size() == 1 || t.arc(u, v));
      bad = j;
    }
    rep.add("cycle " + std::to_string(i + 1) + " arcs", arcs,
            arcs ? "" : "position " + std::to_string(bad));
  }
  std::map<std::uint64_t, std::size_t> owner;
  bool disjoint = true;
  std::string detail;
  for (std::size_t i = 0; i < cycles.size() && disjoint; ++i) {
    const Path& c = cycles[i];
    if (c.size() < 2) continue;
    for (std::size_t j = 0; j < c.size() && disjoint; ++j) {
      const int u = c.vertices[j], v = c.vertices[(j + 1) % c.size()];
      auto [it, fresh] = owner.emplace(arc_key(u, v), i);
      if (!fresh) {
        disjoint = false;
        detail = "arc " + std::to_string(u) + "->" + std::to_string(v) + " in cycles " +
                 std::to_string(it->second + 1) + " and " + std::to_string(i + 1);
      }
    }
  }
  rep.add("edge-disjoint", disjoint, detail);
  return rep;
}

}  // namespace tourlink
