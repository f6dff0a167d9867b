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

#include "tourlink/classic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "tourlink/flow.hpp"

namespace tourlink {

// --- Hamiltonian cycles and paths -------------------------------------------

std::optional<Path> moon_ham_cycle(const Tournament& t) {
  const int n = t.n();
  if (n == 1) return Path{0};
  if (!is_strongly_connected(t)) return std::nullopt;

  // Seed 3-cycle through vertex 0: 0 -> u -> w -> 0.
  std::vector<int> cycle;
  for (int u = 1; u < n && cycle.empty(); ++u) {
    if (!t.arc(0, u)) continue;
    for (int w = 1; w < n; ++w)
      if (t.arc(w, 0) && t.arc(u, w)) {
        cycle = {0, u, w};
        break;
      }
  }
  std::vector<char> on(n, 0);
  for (int c : cycle) on[c] = 1;

  while (static_cast<int>(cycle.size()) < n) {
    bool grew = false;
    // One sweep inserts every outside vertex that has both an in- and an
    // out-neighbour on the cycle; such a vertex always sits between some
    // consecutive pair c_i -> z -> c_{i+1}.
    for (int z = 0; z < n; ++z) {
      if (on[z]) continue;
      const int k = static_cast<int>(cycle.size());
      for (int i = 0; i < k; ++i) {
        if (t.arc(cycle[i], z) && t.arc(z, cycle[(i + 1) % k])) {
          cycle.insert(cycle.begin() + i + 1, z);
          on[z] = 1;
          grew = true;
          break;
        }
      }
    }
    if (grew) continue;
    // Every outside vertex is now either beaten by the whole cycle (O) or
    // beats all of it (I). Strong connectivity forces an arc O -> I, and
    // c_0 -> w -> u -> c_1 splices both in.
    bool spliced = false;
    for (int w = 0; w < n && !spliced; ++w) {
      if (on[w] || !t.arc(cycle[0], w)) continue;
      for (int u = 0; u < n; ++u) {
        if (on[u] || u == w || !t.arc(u, cycle[0]) || !t.arc(w, u)) continue;
        cycle.insert(cycle.begin() + 1, {w, u});
        on[w] = on[u] = 1;
        spliced = true;
        break;
      }
    }
    if (!spliced) return std::nullopt;  // unreachable for strong inputs
  }
  return Path(std::move(cycle));
}

Path tournament_ham_path(const Tournament& t, std::vector<int> vertices) {
  std::vector<int> path;
  path.reserve(vertices.size());
  for (int v : vertices) {
    if (path.empty() || t.arc(v, path.front())) {
      path.insert(path.begin(), v);
      continue;
    }
    if (t.arc(path.back(), v)) {
      path.push_back(v);
      continue;
    }
    // Invariant: path[lo] -> v and v -> path[hi].
    std::size_t lo = 0, hi = path.size() - 1;
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      if (t.arc(path[mid], v))
        lo = mid;
      else
        hi = mid;
    }
    path.insert(path.begin() + static_cast<std::ptrdiff_t>(hi), v);
  }
  return Path(std::move(path));
}

// --- Gallai-Milgram ----------------------------------------------------------

namespace {

class PathCover {
 public:
  PathCover(const WorkingDigraph& d, std::vector<std::vector<int>> paths)
      : d_(d), paths_(std::move(paths)), owner_(d.n(), -1) {
    for (std::size_t i = 0; i < paths_.size(); ++i) owner_[paths_[i].back()] = static_cast<int>(i);
  }

  // One reduction step of the classical induction. Returns false, leaving
  // the cover untouched, when at some depth the path ends are independent.
  bool reduce() {
    struct Frame {
      int yj, yi, pred;
    };
    std::vector<Frame> frames;
    while (true) {
      std::vector<int> ends;
      for (const auto& p : paths_)
        if (!p.empty()) ends.push_back(p.back());
      int yi = -1, yj = -1;
      for (int a : ends) {
        for (int b : ends)
          if (a != b && d_.has_arc(a, b)) {
            yi = a;
            yj = b;
            break;
          }
        if (yi >= 0) break;
      }
      if (yi < 0) {
        for (auto it = frames.rbegin(); it != frames.rend(); ++it) append(owner_[it->pred], it->yj);
        return false;
      }
      const int pj = owner_[yj];
      if (paths_[pj].size() == 1) {
        paths_[pj].clear();
        owner_[yj] = -1;
        append(owner_[yi], yj);
        break;
      }
      paths_[pj].pop_back();
      owner_[yj] = -1;
      owner_[paths_[pj].back()] = pj;
      frames.push_back({yj, yi, paths_[pj].back()});
    }
    for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
      const int p = owner_[it->pred] >= 0 ? owner_[it->pred] : owner_[it->yi];
      append(p, it->yj);
    }
    return true;
  }

  PathSystem result() const {
    PathSystem ps;
    for (const auto& p : paths_)
      if (!p.empty()) ps.paths.emplace_back(p);
    return ps;
  }

 private:
  void append(int p, int v) {
    owner_[paths_[p].back()] = -1;
    paths_[p].push_back(v);
    owner_[v] = p;
  }

  const WorkingDigraph& d_;
  std::vector<std::vector<int>> paths_;
  std::vector<int> owner_;
};

// Greedily joins pieces whose tail has a surviving arc into another
// piece's head. The reductions are quadratic in the number of paths per
// step, so cutting a dense cover down first matters on large inputs.
std::vector<std::vector<int>> chain_pieces(const WorkingDigraph& d,
                                           std::vector<std::vector<int>> pieces) {
  const int m = static_cast<int>(pieces.size());
  if (m < 2) return pieces;
  std::vector<int> next(m, -1), prev(m, -1), root(m);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (int i = 0; i < m; ++i) {
    const int tail = pieces[i].back();
    for (int j = 0; j < m; ++j) {
      if (prev[j] >= 0 || find(i) == find(j)) continue;
      if (!d.has_arc(tail, pieces[j].front())) continue;
      next[i] = j;
      prev[j] = i;
      root[find(i)] = find(j);
      break;
    }
  }
  std::vector<std::vector<int>> out;
  for (int h = 0; h < m; ++h) {
    if (prev[h] >= 0) continue;
    out.emplace_back();
    for (int c = h; c >= 0; c = next[c])
      out.back().insert(out.back().end(), pieces[c].begin(), pieces[c].end());
  }
  return out;
}

}  // namespace

PathSystem gallai_milgram_cover(const WorkingDigraph& d, const Bitset* within) {
  std::vector<int> verts;
  if (within) {
    verts = within->to_vector();
  } else {
    for (int v = 0; v < d.n(); ++v) verts.push_back(v);
  }
  if (verts.empty()) return {};
  // Start from a Hamiltonian path of the base tournament cut at every
  // removed arc; the reductions then merge pieces.
  const Path ham = tournament_ham_path(d.base(), verts);
  std::vector<std::vector<int>> pieces{{ham.front()}};
  for (std::size_t i = 1; i < ham.size(); ++i) {
    if (!d.has_arc(ham.vertices[i - 1], ham.vertices[i])) pieces.emplace_back();
    pieces.back().push_back(ham.vertices[i]);
  }
  PathCover cover(d, chain_pieces(d, std::move(pieces)));
  while (cover.reduce()) {
  }
  return cover.result();
}

PathSystem cover_by_k_paths(const WorkingDigraph& d, int k, const Bitset* within) {
  Bitset set(d.n());
  if (within)
    set = *within;
  else
    set.set_all();
  const int size = set.count();
  if (k < 1 && size > 0) throw PreconditionError("cover_by_k_paths: k must be >= 1");
  Bitset row(d.n());
  std::string violation;
  set.for_each([&](int v) {
    if (!violation.empty()) return;
    d.out_row(v, row);
    int deg = row.count_and(set);
    d.in_row(v, row);
    deg += row.count_and(set);
    if (deg < size - k)
      violation = "vertex " + std::to_string(v) + " has degree " + std::to_string(deg) +
                  " < " + std::to_string(size - k);
  });
  if (!violation.empty()) throw PreconditionError("cover_by_k_paths: " + violation);
  PathSystem ps = gallai_milgram_cover(d, within);
  if (static_cast<int>(ps.size()) > k)
    throw std::logic_error("cover_by_k_paths: reduction left too many paths");
  return ps;
}

PathSystem split_paths(const PathSystem& ps, int target) {
  const int total = static_cast<int>(ps.vertex_count());
  if (target < static_cast<int>(ps.size()) || target > total)
    throw PreconditionError("split_paths: target " + std::to_string(target) +
                            " outside [" + std::to_string(ps.size()) + ", " +
                            std::to_string(total) + "]");
  PathSystem out = ps;
  while (static_cast<int>(out.size()) < target) {
    std::size_t longest = 0;
    for (std::size_t i = 1; i < out.paths.size(); ++i)
      if (out.paths[i].size() > out.paths[longest].size()) longest = i;
    auto& vs = out.paths[longest].vertices;
    const auto cut = vs.begin() + static_cast<std::ptrdiff_t>(vs.size() / 2);
    Path suffix(std::vector<int>(cut, vs.end()));
    vs.erase(cut, vs.end());
    out.paths.insert(out.paths.begin() + static_cast<std::ptrdiff_t>(longest) + 1,
                     std::move(suffix));
  }
  return out;
}

// --- Disjoint routing --------------------------------------------------------

namespace {

Built<Routing> route(int n, const VertexFlow::RowFn& rows,
                     const std::vector<int>& sources, const std::vector<int>& sinks,
                     const std::vector<int>& forbidden) {
  if (sources.size() != sinks.size())
    throw PreconditionError("menger_route: need as many sources as sinks");
  std::vector<int> all(sources);
  all.insert(all.end(), sinks.begin(), sinks.end());
  all.insert(all.end(), forbidden.begin(), forbidden.end());
  for (int v : all)
    if (v < 0 || v >= n) throw PreconditionError("menger_route: vertex out of range");
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw PreconditionError("menger_route: sources, sinks and forbidden must be disjoint");

  Bitset allowed(n);
  allowed.set_all();
  for (int f : forbidden) allowed.reset(f);
  VertexFlow flow(n, rows, std::move(allowed));
  for (int s : sources) flow.add_source(s);
  for (int s : sinks) flow.add_sink(s);
  const int q = static_cast<int>(sources.size());
  if (flow.run(q) < q) {
    Certificate cert{"menger_route", "flow value " + std::to_string(flow.value()) +
                                         " below " + std::to_string(q)};
    cert.witness["cut"] = flow.min_cut();
    cert.witness["flow"] = flow.value();
    return cert;
  }
  std::vector<int> sink_index(n, -1), source_index(n, -1);
  for (int i = 0; i < q; ++i) {
    sink_index[sinks[i]] = i;
    source_index[sources[i]] = i;
  }
  Routing r;
  r.system.paths.resize(q);
  r.sigma.assign(q, -1);
  for (auto& p : flow.paths()) {
    const int i = source_index[p.front()];
    r.sigma[i] = sink_index[p.back()];
    r.system.paths[i] = std::move(p);
  }
  return r;
}

}  // namespace

Built<Routing> menger_route(const Tournament& t, const std::vector<int>& sources,
                            const std::vector<int>& sinks,
                            const std::vector<int>& forbidden) {
  return route(t.n(), [&](int v, Bitset& row) { t.out_row(v, row); }, sources, sinks,
               forbidden);
}

Built<Routing> menger_route(const WorkingDigraph& d, const std::vector<int>& sources,
                            const std::vector<int>& sinks,
                            const std::vector<int>& forbidden) {
  return route(d.n(), [&](int v, Bitset& row) { d.out_row(v, row); }, sources, sinks,
               forbidden);
}

}  // namespace tourlink
