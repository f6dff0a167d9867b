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


// The rerouting step. Everything here works in a "world" orientation: the
// mirrored cases flip the linker and the paths (cheap) instead of copying
// the host, and flip results back at the end.
//
// Escalation, for a t-linker L joining x to y:
//   (a) x sends an arc into some indominator and y receives one from some
//       outdominator: weave L between those neighbours.
//   (b) t >= 2 and x has no such arc: step to an out-neighbour x1 on a
//       path, repair the path around x1 with a 1-linker cut from L, and
//       join x1 to y with the rest of L by (a). A free out-neighbour is
//       used directly instead when there is one (one extra vertex).
//   (c) t >= 4 and y has no such arc: the mirror image with a 2-linker,
//       both halves handled by (b).
//   (d) t >= 12: a pivot at x repaired with a 4-linker by (c), then the
//       rest joined by (c), which pivots at y itself when it has to.

#include <algorithm>
#include <numeric>
#include <set>

#include "tourlink/linkage.hpp"

namespace tourlink {
namespace {

Linker flip_linker(const Linker& l) {
  auto flip_dom = [](const Dominator& d) {
    Dominator f = d;
    f.orientation = opposite(d.orientation);
    for (auto& s : f.sets) std::reverse(s.begin(), s.end());
    return f;
  };
  Linker f;
  for (const Dominator& d : l.out) f.in.push_back(flip_dom(d));
  for (const Dominator& d : l.in) f.out.push_back(flip_dom(d));
  for (const Connector& c : l.connectors) {
    Connector g = c;
    g.sources = c.sinks;
    g.sinks = c.sources;
    for (auto* w : {&g.witness4, &g.witness5})
      for (Path& p : w->paths) p = p.reversed();
    f.connectors.push_back(std::move(g));
  }
  for (const Path& p : l.q) f.q.push_back(p.reversed());
  f.exceptional = l.exceptional;
  return f;
}

std::vector<Path> flip_paths(const std::vector<Path>& ps) {
  std::vector<Path> out;
  for (const Path& p : ps) out.push_back(p.reversed());
  return out;
}

struct World {
  const WorkingDigraph* d;
  bool rev = false;
  // Vertices that may never become extra vertices (other linkers).
  const std::vector<int>* blocked = nullptr;

  bool has(int u, int v) const { return rev ? d->has_arc(v, u) : d->has_arc(u, v); }
  World flipped() const { return World{d, !rev, blocked}; }
  Path ham(const Linker& l, int a, int b) const {
    if (!rev) return linker_ham_path(d->base(), l, a, b);
    return linker_ham_path(d->base(), flip_linker(l), b, a).reversed();
  }
};

struct Res {
  Path path;
  std::vector<Path> prot;
  std::vector<int> extras;
  char used = 'a';
};

// A neighbour of v inside the given side's dominators, core sets first.
std::optional<int> dominator_neighbour(const World& w, const std::vector<Dominator>& ds, int v,
                                       bool v_to_it) {
  for (int s : {1, 2, 0, 3})
    for (const Dominator& d : ds)
      for (int u : d.sets[s])
        if (v_to_it ? w.has(v, u) : w.has(u, v)) return u;
  return std::nullopt;
}

Linker sub_linker(const Linker& l, const std::vector<int>& idx, const std::vector<int>& qidx) {
  Linker s;
  for (int i : idx) {
    s.in.push_back(l.in[i]);
    s.out.push_back(l.out[i]);
    s.connectors.push_back(l.connectors[i]);
  }
  for (int j : qidx) s.q.push_back(l.q[j]);
  s.exceptional = l.exceptional;
  return s;
}

Certificate cert(const std::string& reason) { return Certificate{"link_through", reason}; }

Built<Res> solve(const World& w, const Linker& l, int x, int y, const std::vector<Path>& prot,
                 char level);

Built<Res> direct(const World& w, const Linker& l, int x, int y, const std::vector<Path>& prot) {
  auto x1 = dominator_neighbour(w, l.in, x, true);
  auto y1 = dominator_neighbour(w, l.out, y, false);
  // The planned pair first: its weave is the one kept free of other rounds.
  if (w.has(x, planned_entry(l)) && w.has(planned_exit(l), y)) {
    x1 = planned_entry(l);
    y1 = planned_exit(l);
  }
  if (!x1) return cert("x sends no arc into an indominator");
  if (!y1) return cert("y receives no arc from an outdominator");
  Path inner = w.ham(l, *x1, *y1);
  Res r;
  r.path.vertices.push_back(x);
  r.path.append(inner);
  r.path.vertices.push_back(y);
  for (std::size_t i = 1; i < r.path.size(); ++i)
    if (!w.has(r.path.vertices[i - 1], r.path.vertices[i]))
      return cert("an arc of the linker is missing from D");
  r.prot = prot;
  return r;
}

// Pivot at x with a sub-linker of the given width.
Built<Res> pivot(const World& w, const Linker& l, int x, int y, const std::vector<Path>& prot,
                 int width, char sub_level, char rest_level) {
  const int t = l.t();
  const int nq = static_cast<int>(l.q.size());
  std::set<int> used;
  for (int v : l.vertices()) used.insert(v);
  for (const Path& p : prot) used.insert(p.begin(), p.end());
  used.insert(x);
  used.insert(y);
  if (w.blocked) used.insert(w.blocked->begin(), w.blocked->end());

  // A free out-neighbour of x joins y by (a) and becomes an extra vertex.
  int tried = 0;
  for (int v = 0; v < w.d->n() && tried < 64; ++v) {
    if (used.count(v) || !w.has(x, v)) continue;
    ++tried;
    std::vector<Path> p2 = prot;
    p2.push_back(Path{x});
    auto r = direct(w, l, v, y, p2);
    if (!r) continue;
    Res out;
    out.path.vertices.push_back(x);
    out.path.append(r->path);
    out.prot.assign(r->prot.begin(), r->prot.end() - 1);
    out.extras = {v};
    return out;
  }

  // Otherwise pivot on an interior vertex of a path: Q paths of L from the
  // last one backwards, then the protected paths.
  struct Host {
    bool in_q;
    int index;
  };
  std::vector<Host> hosts;
  for (int j = nq - 1; j >= 0; --j) hosts.push_back({true, j});
  for (int j = 0; j < static_cast<int>(prot.size()); ++j) hosts.push_back({false, j});

  int attempts = 0;
  for (const Host& h : hosts) {
    const Path& qp = h.in_q ? l.q[h.index] : prot[h.index];
    for (std::size_t pos = 1; pos + 1 < qp.size() && attempts < 48; ++pos) {
      const int x1 = qp.vertices[pos];
      if (!w.has(x, x1)) continue;
      ++attempts;
      const int x2 = qp.vertices[pos - 1], y2 = qp.vertices[pos + 1];
      const Path qx(std::vector<int>(qp.vertices.begin(), qp.vertices.begin() + pos - 1));
      const Path qy(std::vector<int>(qp.vertices.begin() + pos + 2, qp.vertices.end()));

      // Sub-linker: the lowest `width` indices, keeping one outdominator
      // that reaches y for the rest when possible.
      int keep = -1;
      for (int j = 0; j < t && keep < 0; ++j)
        for (int s : {1, 2, 0, 3})
          for (int u : l.out[j].sets[s])
            if (keep < 0 && w.has(u, y)) keep = j;
      std::vector<int> idx, rest;
      for (int i = 0; i < t; ++i)
        (static_cast<int>(idx.size()) < width && i != keep ? idx : rest).push_back(i);
      if (static_cast<int>(idx.size()) < width) {
        idx.push_back(rest.back());
        rest.pop_back();
      }
      std::sort(rest.begin(), rest.end());
      std::vector<int> qsub, qrest;
      for (int j = 0; j < nq; ++j) {
        if (h.in_q && j == h.index)
          qrest.push_back(j);
        else if (static_cast<int>(qsub.size()) < 5 * width)
          qsub.push_back(j);
        else
          qrest.push_back(j);
      }
      const Linker lsub = sub_linker(l, idx, qsub);
      Linker lrest = sub_linker(l, rest, qrest);

      // Protected paths for the repair: the caller's, the rest's Q paths,
      // the pieces of the pivot path and the singletons x, y, x1.
      std::vector<Path> p1;
      for (int j = 0; j < static_cast<int>(prot.size()); ++j)
        if (h.in_q || j != h.index) p1.push_back(prot[j]);
      const std::size_t rest_q_at = p1.size();
      for (std::size_t j = 0; j < qrest.size(); ++j)
        if (!(h.in_q && qrest[j] == h.index)) p1.push_back(l.q[qrest[j]]);
      const std::size_t pieces_at = p1.size();
      p1.push_back(qx);
      p1.push_back(qy);
      p1.push_back(Path{x});
      p1.push_back(Path{y});
      p1.push_back(Path{x1});
      std::vector<Path> p1_clean;
      std::vector<int> where(p1.size(), -1);
      for (std::size_t j = 0; j < p1.size(); ++j)
        if (!p1[j].empty()) {
          where[j] = static_cast<int>(p1_clean.size());
          p1_clean.push_back(p1[j]);
        }
      auto r1 = solve(w, lsub, x2, y2, p1_clean, sub_level);
      if (!r1) continue;
      auto back = [&](std::size_t j) { return where[j] < 0 ? Path{} : r1->prot[where[j]]; };

      Path repaired = back(pieces_at);
      repaired.append(r1->path);
      repaired.append(back(pieces_at + 1));

      std::vector<Path> p2;
      std::size_t k = 0;
      for (int j = 0; j < static_cast<int>(prot.size()); ++j)
        p2.push_back(!h.in_q && j == h.index ? repaired : back(k++));
      k = rest_q_at;
      for (std::size_t j = 0; j < qrest.size(); ++j)
        lrest.q[j] = h.in_q && qrest[j] == h.index ? repaired : back(k++);
      p2.push_back(Path{x});

      auto r2 = solve(w, lrest, x1, y, p2, rest_level);
      if (!r2) continue;
      Res out;
      out.path.vertices.push_back(x);
      out.path.append(r2->path);
      out.prot.assign(r2->prot.begin(), r2->prot.end() - 1);
      out.extras = r1->extras;
      out.extras.insert(out.extras.end(), r2->extras.begin(), r2->extras.end());
      out.used = std::max(r1->used, r2->used);
      return out;
    }
  }
  return cert("no pivot at x could be repaired");
}

Built<Res> flipped_pivot(const World& w, const Linker& l, int x, int y,
                         const std::vector<Path>& prot, int width, char sub_level,
                         char rest_level) {
  auto r = pivot(w.flipped(), flip_linker(l), y, x, flip_paths(prot), width, sub_level, rest_level);
  if (!r) return r;
  Res out = *r;
  out.path = r->path.reversed();
  out.prot = flip_paths(r->prot);
  return out;
}

Built<Res> solve(const World& w, const Linker& l, int x, int y, const std::vector<Path>& prot,
                 char level) {
  auto a = direct(w, l, x, y, prot);
  if (a || level == 'a') return a;
  const int t = l.t();
  const bool x_ok = dominator_neighbour(w, l.in, x, true).has_value();
  const bool y_ok = dominator_neighbour(w, l.out, y, false).has_value();

  if (level == 'b' || (level >= 'c' && !x_ok && y_ok && t >= 2)) {
    if (t < 2) return cert("case (b) needs t >= 2");
    if (!y_ok) return cert("y is not reached by an outdominator; case (c) needed");
    auto r = pivot(w, l, x, y, prot, 1, 'a', 'a');
    if (r) r->used = 'b';
    return r;
  }
  if (level == 'c' || t < 12) {
    if (t < 4) return cert("case (c) needs t >= 4");
    auto r = flipped_pivot(w, l, x, y, prot, 2, 'b', 'b');
    if (r) r->used = 'c';
    if (r || level == 'c') return r;
    return cert("case (d) needs t >= 12");
  }
  auto c = solve(w, l, x, y, prot, 'c');
  if (c) return c;
  auto r = pivot(w, l, x, y, prot, 4, 'c', 'c');
  if (r) r->used = 'd';
  return r;
}

std::vector<int> path_union(const std::vector<Path>& ps) {
  std::vector<int> v;
  for (const Path& p : ps) v.insert(v.end(), p.begin(), p.end());
  std::sort(v.begin(), v.end());
  return v;
}

void check_inputs(const WorkingDigraph& d, const std::vector<Linker>& family, int x, int y,
                  const PathSystem& p) {
  const int n = d.n();
  if (family.empty()) throw PreconditionError("linking needs at least one linker");
  if (x < 0 || x >= n || y < 0 || y >= n) throw PreconditionError("x or y outside the host");
  if (x == y) throw PreconditionError("x and y must differ");
  std::vector<int> all = path_union(p.paths);
  for (const Linker& l : family) {
    auto lv = l.vertices();
    all.insert(all.end(), lv.begin(), lv.end());
    if (std::binary_search(lv.begin(), lv.end(), x) || std::binary_search(lv.begin(), lv.end(), y))
      throw PreconditionError("x and y must lie outside the linkers");
  }
  all.push_back(x);
  all.push_back(y);
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw PreconditionError("paths, linkers and {x, y} must be disjoint");
  for (const Path& q : p.paths)
    if (q.empty() || !is_path(d, q)) throw PreconditionError("a protected path is not a path of D");
}

}  // namespace

int planned_entry(const Linker& l) { return l.in.front().sets[1].front(); }
int planned_exit(const Linker& l) { return l.out.front().sets[1].back(); }
Path planned_weave(const Tournament& t, const Linker& l) {
  return linker_ham_path(t, l, planned_entry(l), planned_exit(l));
}

Built<LinkStepResult> linking_family_step(const WorkingDigraph& d,
                                          const std::vector<Linker>& family, int x, int y,
                                          const PathSystem& p, const ParamProfile& profile) {
  check_inputs(d, family, x, y, p);
  const int k = static_cast<int>(family.size());
  if (profile.is_paper() && static_cast<int>(p.size()) > profile.paths_cap_factor * k)
    throw PreconditionError("too many protected paths for the family size");

  const Linker& last = family.back();
  std::vector<Path> prot = p.paths;
  std::vector<int> blocked;
  for (int i = 0; i + 1 < k; ++i) {
    for (const Path& q : family[i].q) prot.push_back(q);
    auto ev = family[i].essential_vertices();
    blocked.insert(blocked.end(), ev.begin(), ev.end());
  }
  std::sort(blocked.begin(), blocked.end());

  // Normalise so that |E-_t| >= |E+_1|; otherwise work in the reversed host.
  const bool rev = last.in.back().uncovered.size() < last.out.front().uncovered.size();
  World w{&d, rev, &blocked};
  Built<Res> r = rev ? solve(w, flip_linker(last), y, x, flip_paths(prot), 'd')
                     : solve(w, last, x, y, prot, 'd');
  if (!r) return r.certificate();
  Res res = *r;
  if (rev) {
    res.path = res.path.reversed();
    res.prot = flip_paths(res.prot);
  }
  if (static_cast<int>(res.extras.size()) > profile.extras_cap) {
    Certificate c = cert("more extra vertices than allowed");
    c.witness["extras"] = res.extras;
    return c;
  }

  LinkStepResult out;
  out.path = res.path;
  out.link_case = res.used;
  out.extra_vertices = res.extras;
  std::sort(out.extra_vertices.begin(), out.extra_vertices.end());
  std::size_t at = 0;
  for (; at < p.size(); ++at) out.rerouted.paths.push_back(res.prot[at]);
  for (int i = 0; i + 1 < k; ++i) {
    Linker l = family[i];
    for (Path& q : l.q) q = res.prot[at++];
    out.residual.push_back(std::move(l));
  }
  const auto report = verify_link_step(d, family, x, y, p, out);
  if (!report.passed()) {
    Certificate c = cert("linking step fails its own verification");
    c.witness["clause"] = report.first_failure()->name;
    c.witness["detail"] = report.first_failure()->detail;
    return c;
  }
  return out;
}

Built<LinkStepResult> link_through(const WorkingDigraph& d, const Linker& l, int x, int y,
                                   const PathSystem& p, const ParamProfile& profile) {
  return linking_family_step(d, {l}, x, y, p, profile);
}

VerificationReport verify_link_step(const WorkingDigraph& d, const std::vector<Linker>& family,
                                    int x, int y, const PathSystem& p, const LinkStepResult& r) {
  VerificationReport rep("link step");
  rep.add("path x->y", !r.path.empty() && r.path.front() == x && r.path.back() == y &&
                           is_path(d, r.path));
  bool ends = r.rerouted.size() == p.size();
  for (std::size_t i = 0; ends && i < p.size(); ++i) {
    const Path& a = p.paths[i];
    const Path& b = r.rerouted.paths[i];
    ends = !b.empty() && a.front() == b.front() && a.back() == b.back() && is_path(d, b);
  }
  rep.add("rerouted endpoints", ends, "every rerouted path keeps its endpoints and is a path of D");

  bool residual = r.residual.size() + 1 == family.size();
  for (std::size_t i = 0; residual && i < r.residual.size(); ++i) {
    const auto& a = family[i].q;
    const auto& b = r.residual[i].q;
    residual = a.size() == b.size();
    for (std::size_t j = 0; residual && j < a.size(); ++j)
      residual = !b[j].empty() && a[j].front() == b[j].front() && a[j].back() == b[j].back() &&
                 is_path(d, b[j]);
  }
  rep.add("residual family", residual, "k-1 linkers whose Q paths keep their endpoints");

  std::vector<int> out = r.path.vertices;
  auto add = [](std::vector<int>& v, const std::vector<int>& more) {
    v.insert(v.end(), more.begin(), more.end());
  };
  add(out, path_union(r.rerouted.paths));
  for (const Linker& l : r.residual) {
    add(out, l.essential_vertices());
    add(out, path_union(l.q));
  }
  std::sort(out.begin(), out.end());
  rep.add("disjoint", std::adjacent_find(out.begin(), out.end()) == out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());

  std::vector<int> in = path_union(p.paths);
  for (const Linker& l : family) add(in, l.vertices());
  in.push_back(x);
  in.push_back(y);
  std::sort(in.begin(), in.end());
  in.erase(std::unique(in.begin(), in.end()), in.end());
  bool fresh = true;
  for (int v : r.extra_vertices) fresh = fresh && !std::binary_search(in.begin(), in.end(), v);
  add(in, r.extra_vertices);
  std::sort(in.begin(), in.end());
  in.erase(std::unique(in.begin(), in.end()), in.end());
  rep.add("vertex union", in == out && fresh,
          "outputs must equal inputs plus x, y and the extra vertices");
  rep.add("extra vertices", r.extra_vertices.size() <= 6,
          std::to_string(r.extra_vertices.size()) + " extra vertices");
  return rep;
}

}  // namespace tourlink
