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

#include "tourlink/core.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "tourlink/flow.hpp"

namespace tourlink {

Tournament Tournament::build(int n, const ArcDecider& u_to_v) {
  if (n <= 0) throw PreconditionError("tournament needs n >= 1");
  Tournament t;
  t.n_ = n;
  t.words_per_row_ = Bitset::WordCount(n);
  auto rows = std::make_shared<std::vector<std::uint64_t>>(
      static_cast<std::size_t>(n) * t.words_per_row_, 0);
  auto set = [&](int u, int v) {
    (*rows)[static_cast<std::size_t>(u) * t.words_per_row_ + (v >> 6)] |=
        std::uint64_t{1} << (v & 63);
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (u_to_v(u, v))
        set(u, v);
      else
        set(v, u);
    }
  t.rows_ = std::move(rows);
  return t;
}

Tournament Tournament::from_matrix(const std::vector<std::vector<bool>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw PreconditionError("tournament needs n >= 1");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n)
      throw PreconditionError("row " + std::to_string(i) + " has wrong length");
    if (m[i][i]) throw PreconditionError("loop at vertex " + std::to_string(i));
    for (int j = i + 1; j < n; ++j)
      if (m[i][j] == m[j][i])
        throw PreconditionError("pair {" + std::to_string(i) + "," +
                                std::to_string(j) +
                                "} must have exactly one arc");
  }
  return build(n, [&](int u, int v) { return m[u][v]; });
}

void Tournament::out_row(int v, Bitset& dst) const {
  if (dst.size() != n_) dst = Bitset(n_);
  auto w = dst.words();
  const std::uint64_t* src = row_ptr(v);
  std::copy(src, src + words_per_row_, w.begin());
}

void Tournament::in_row(int v, Bitset& dst) const {
  out_row(v, dst);
  dst.flip();
  dst.reset(v);
}

Bitset Tournament::out_row(int v) const {
  Bitset b(n_);
  out_row(v, b);
  return b;
}

Bitset Tournament::in_row(int v) const {
  Bitset b(n_);
  in_row(v, b);
  return b;
}

int Tournament::out_degree(int v) const {
  int c = 0;
  const std::uint64_t* r = row_ptr(v);
  for (std::size_t i = 0; i < words_per_row_; ++i) c += std::popcount(r[i]);
  return c;
}

int Tournament::out_degree_in(int v, const Bitset& mask) const {
  int c = 0;
  const std::uint64_t* r = row_ptr(v);
  auto m = mask.words();
  for (std::size_t i = 0; i < words_per_row_; ++i) c += std::popcount(r[i] & m[i]);
  return c;
}

int Tournament::in_degree_in(int v, const Bitset& mask) const {
  return mask.count() - (mask.test(v) ? 1 : 0) - out_degree_in(v, mask);
}

int Tournament::min_out_degree() const {
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, out_degree(v));
  return best;
}

int Tournament::min_in_degree() const {
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, in_degree(v));
  return best;
}

std::size_t Tournament::arc_count() const {
  std::size_t c = 0;
  for (int v = 0; v < n_; ++v) c += out_degree(v);
  return c;
}

Tournament Tournament::reversed() const {
  return build(n_, [this](int u, int v) { return arc(v, u); });
}

bool operator==(const Tournament& a, const Tournament& b) {
  if (a.n_ != b.n_) return false;
  if (a.rows_ == b.rows_) return true;
  return *a.rows_ == *b.rows_;
}

Tournament reverse(const Tournament& t) { return t.reversed(); }

InducedTournament induced(const Tournament& t, std::span<const int> vertices) {
  if (vertices.empty()) throw PreconditionError("induced: empty vertex set");
  std::vector<int> map(vertices.begin(), vertices.end());
  std::sort(map.begin(), map.end());
  if (std::adjacent_find(map.begin(), map.end()) != map.end())
    throw PreconditionError("induced: duplicate vertex");
  if (map.front() < 0 || map.back() >= t.n())
    throw PreconditionError("induced: vertex out of range");
  Tournament sub = Tournament::build(static_cast<int>(map.size()), [&](int u, int v) {
    return t.arc(map[u], map[v]);
  });
  return {std::move(sub), std::move(map)};
}

Tournament transitive_tournament(int n) {
  return Tournament::build(n, [](int, int) { return true; });
}

// --- WorkingDigraph ---------------------------------------------------------

WorkingDigraph::WorkingDigraph(Tournament base)
    : base_(std::move(base)), removed_out_(base_.n()), removed_in_(base_.n()) {}

void WorkingDigraph::out_row(int v, Bitset& dst) const {
  base_.out_row(v, dst);
  for (int w : removed_out_[v]) dst.reset(w);
}

void WorkingDigraph::in_row(int v, Bitset& dst) const {
  base_.in_row(v, dst);
  for (int w : removed_in_[v]) dst.reset(w);
}

int WorkingDigraph::out_degree(int v) const {
  return base_.out_degree(v) - static_cast<int>(removed_out_[v].size());
}

int WorkingDigraph::in_degree(int v) const {
  return base_.in_degree(v) - static_cast<int>(removed_in_[v].size());
}

int WorkingDigraph::min_degree() const {
  int best = n();
  for (int v = 0; v < n(); ++v) best = std::min(best, degree(v));
  return best;
}

int WorkingDigraph::min_out_degree() const {
  int best = n();
  for (int v = 0; v < n(); ++v) best = std::min(best, out_degree(v));
  return best;
}

int WorkingDigraph::min_in_degree() const {
  int best = n();
  for (int v = 0; v < n(); ++v) best = std::min(best, in_degree(v));
  return best;
}

void WorkingDigraph::remove_arc(int u, int v) {
  if (!base_.arc(u, v))
    throw PreconditionError("remove_arc: " + std::to_string(u) + "->" +
                            std::to_string(v) + " is not a base arc");
  if (!removed_.insert(key(u, v)).second) return;
  removed_out_[u].push_back(v);
  removed_in_[v].push_back(u);
}

void WorkingDigraph::restore_arc(int u, int v) {
  if (removed_.erase(key(u, v)) == 0) return;
  std::erase(removed_out_[u], v);
  std::erase(removed_in_[v], u);
}

std::vector<std::pair<int, int>> WorkingDigraph::removed_arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n(); ++u)
    for (int v : removed_out_[u]) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

WorkingDigraph WorkingDigraph::reversed() const {
  WorkingDigraph r(base_.reversed());
  for (auto [u, v] : removed_arcs()) r.remove_arc(v, u);
  return r;
}

// --- Paths ------------------------------------------------------------------

Path Path::reversed() const {
  return Path(std::vector<int>(vertices.rbegin(), vertices.rend()));
}

Path join(std::initializer_list<const Path*> parts) {
  Path out;
  for (const Path* p : parts)
    if (p) out.append(*p);
  return out;
}

std::size_t PathSystem::vertex_count() const {
  std::size_t c = 0;
  for (const auto& p : paths) c += p.size();
  return c;
}

std::vector<int> PathSystem::vertex_union() const {
  std::vector<int> out;
  for (const auto& p : paths) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

template <class ArcFn>
bool is_path_impl(int n, const Path& p, ArcFn&& arc) {
  if (p.empty()) return false;
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int v = p.vertices[i];
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !arc(p.vertices[i - 1], v)) return false;
  }
  return true;
}

template <class ArcFn>
bool is_ham_cycle_impl(int n, const Path& c, ArcFn&& arc) {
  if (static_cast<int>(c.size()) != n) return false;
  if (!is_path_impl(n, c, arc)) return false;
  if (n == 1) return true;
  return arc(c.back(), c.front());
}

}  // namespace

bool is_path(const Tournament& t, const Path& p) {
  return is_path_impl(t.n(), p, [&](int u, int v) { return t.arc(u, v); });
}

bool is_path(const WorkingDigraph& d, const Path& p) {
  return is_path_impl(d.n(), p, [&](int u, int v) { return d.has_arc(u, v); });
}

bool is_ham_cycle(const WorkingDigraph& d, const Path& c) {
  return is_ham_cycle_impl(d.n(), c, [&](int u, int v) { return d.has_arc(u, v); });
}

bool is_ham_cycle(const Tournament& t, const Path& c) {
  return is_ham_cycle_impl(t.n(), c, [&](int u, int v) { return t.arc(u, v); });
}

VerificationReport verify_path_system(const WorkingDigraph& d,
                                      const PathSystem& ps) {
  VerificationReport rep("path-system");
  for (std::size_t i = 0; i < ps.paths.size(); ++i) {
    const bool ok = is_path(d, ps.paths[i]);
    rep.add("path[" + std::to_string(i) + "]", ok,
            ok ? "" : "not a path of the host");
  }
  // Per vertex: how many paths use it, and whether any use is internal.
  std::vector<int> uses(d.n(), 0), first_path(d.n(), -1);
  std::vector<char> internal(d.n(), 0);
  bool disjoint = true;
  std::string detail;
  for (std::size_t i = 0; i < ps.paths.size(); ++i) {
    const auto& p = ps.paths[i];
    for (std::size_t j = 0; j < p.size(); ++j) {
      const int v = p.vertices[j];
      if (v < 0 || v >= d.n()) continue;
      const bool endpoint = j == 0 || j + 1 == p.size();
      if (!endpoint) internal[v] = 1;
      if (uses[v]++ == 0) first_path[v] = static_cast<int>(i);
      const bool shared_ok = ps.internally_disjoint && !internal[v];
      if (uses[v] > 1 && !shared_ok && disjoint) {
        disjoint = false;
        detail = "vertex " + std::to_string(v) + " shared by paths " +
                 std::to_string(first_path[v]) + " and " + std::to_string(i);
      }
    }
  }
  rep.add("disjoint", disjoint, detail);
  return rep;
}

// --- Connectivity -----------------------------------------------------------

namespace {

template <class OutFn, class InFn>
bool strongly_connected_impl(int n, const Bitset& mask, OutFn&& out_row,
                             InFn&& in_row) {
  const int start = mask.first();
  if (start < 0) return true;
  auto reach = [&](auto&& rowfn) {
    Bitset seen(n);
    Bitset row(n);
    std::vector<int> stack{start};
    seen.set(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      rowfn(v, row);
      row &= mask;
      row.subtract(seen);
      row.for_each([&](int w) {
        seen.set(w);
        stack.push_back(w);
      });
    }
    return seen.count() == mask.count();
  };
  return reach(out_row) && reach(in_row);
}

}  // namespace

bool is_strongly_connected(const Tournament& t) {
  Bitset all(t.n());
  all.set_all();
  auto out = [&](int v, Bitset& r) { t.out_row(v, r); };
  auto in = [&](int v, Bitset& r) { t.in_row(v, r); };
  return strongly_connected_impl(t.n(), all, out, in);
}

bool is_strongly_connected(const WorkingDigraph& d, const Bitset& mask) {
  auto out = [&](int v, Bitset& r) { d.out_row(v, r); };
  auto in = [&](int v, Bitset& r) { d.in_row(v, r); };
  return strongly_connected_impl(d.n(), mask, out, in);
}

bool is_strongly_connected(const WorkingDigraph& d) {
  Bitset all(d.n());
  all.set_all();
  return is_strongly_connected(d, all);
}

int local_connectivity(const Tournament& t, int u, int v, int limit,
                       const Bitset* allowed) {
  Bitset mask(t.n());
  if (allowed) {
    mask = *allowed;
  } else {
    mask.set_all();
  }
  mask.set(u);
  mask.set(v);
  VertexFlow flow(
      t.n(), [&](int w, Bitset& r) { t.out_row(w, r); }, std::move(mask));
  flow.set_capacity(u, VertexFlow::kInf);
  flow.set_capacity(v, VertexFlow::kInf);
  flow.add_source(u, VertexFlow::kInf);
  flow.add_sink(v, VertexFlow::kInf);
  flow.forbid_arc(u, v);
  return flow.run(limit);
}

int strong_connectivity(const Tournament& t) {
  const int n = t.n();
  if (n <= 1 || !is_strongly_connected(t)) return 0;
  // Any minimum separator misses one of the first best+1 vertices, and that
  // vertex is cut from (or cut off) some other vertex, so scanning pairs that
  // involve those vertices suffices.
  int best = n - 1;
  for (int i = 0; i < n && i <= best; ++i) {
    for (int w = 0; w < n; ++w) {
      if (w == i) continue;
      if (!t.arc(i, w)) best = std::min(best, local_connectivity(t, i, w, best));
      if (!t.arc(w, i)) best = std::min(best, local_connectivity(t, w, i, best));
    }
  }
  return best;
}

}  // namespace tourlink
