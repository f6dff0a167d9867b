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


// Connectors and the index selection used to line linker records up.

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "tourlink/linkage.hpp"
#include "tourlink/oracle.hpp"

namespace tourlink {
namespace {

Json paths_json(const PathSystem& ps) {
  Json a = Json::array();
  for (const Path& p : ps.paths) a.push_back(p.vertices);
  return a;
}

PathSystem paths_from_json(const Json& j) {
  PathSystem ps;
  for (const auto& p : j) ps.paths.emplace_back(p.get<std::vector<int>>());
  return ps;
}

void check_witness(const Tournament& t, const Connector& c, int n,
                   VerificationReport& r) {
  const PathSystem& w = n == 4 ? c.witness4 : c.witness5;
  const std::string tag = "witness" + std::to_string(n);
  r.add(tag + " count", static_cast<int>(w.size()) == n,
        std::to_string(w.size()) + " paths");
  if (static_cast<int>(w.size()) != n) return;

  std::string bad;
  for (int i = 0; i < n && bad.empty(); ++i) {
    const Path& p = w.paths[i];
    if (p.empty() || p.front() != c.sources[i] || p.back() != c.sinks[i])
      bad = "path " + std::to_string(i + 1) + " does not run x" + std::to_string(i + 1) +
            "->y" + std::to_string(i + 1);
  }
  r.add(tag + " endpoints", bad.empty(), bad);

  bad.clear();
  for (int i = 0; i < n && bad.empty(); ++i)
    if (!is_path(t, w.paths[i])) bad = "path " + std::to_string(i + 1) + " is not a path of T";
  r.add(tag + " arcs", bad.empty(), bad);

  std::map<int, int> seen;
  bad.clear();
  for (int i = 0; i < n; ++i)
    for (int v : w.paths[i]) {
      auto [it, fresh] = seen.emplace(v, i);
      if (!fresh && bad.empty())
        bad = "vertex " + std::to_string(v) + " on paths " + std::to_string(it->second + 1) +
              " and " + std::to_string(i + 1);
    }
  r.add(tag + " disjoint", bad.empty(), bad);

  std::vector<int> cover;
  for (const auto& [v, i] : seen) cover.push_back(v);
  r.add(tag + " coverage", cover == c.vertices,
        "covers " + std::to_string(cover.size()) + " of " + std::to_string(c.vertices.size()));
}

}  // namespace

VerificationReport verify_connector(const Tournament& t, const Connector& c) {
  VerificationReport r("connector");
  const int n = t.n();
  bool ids = std::is_sorted(c.vertices.begin(), c.vertices.end()) &&
             std::adjacent_find(c.vertices.begin(), c.vertices.end()) == c.vertices.end();
  for (int v : c.vertices) ids = ids && v >= 0 && v < n;
  r.add("vertex ids", ids, "vertex list must be sorted, distinct and inside the host");
  r.add("size", c.vertices.size() <= 40, std::to_string(c.vertices.size()) + " vertices");

  std::set<int> ends;
  bool inside = true;
  for (int i = 0; i < 5; ++i) {
    ends.insert(c.sources[i]);
    ends.insert(c.sinks[i]);
    inside = inside && std::binary_search(c.vertices.begin(), c.vertices.end(), c.sources[i]) &&
             std::binary_search(c.vertices.begin(), c.vertices.end(), c.sinks[i]);
  }
  r.add("terminals", inside && ends.size() == 10,
        "sources and sinks must be 10 distinct connector vertices");
  if (!ids) return r;
  check_witness(t, c, 4, r);
  check_witness(t, c, 5, r);
  return r;
}

Json to_json(const Connector& c) {
  Json j;
  j["vertices"] = c.vertices;
  j["sources"] = c.sources;
  j["sinks"] = c.sinks;
  j["witness4"] = paths_json(c.witness4);
  j["witness5"] = paths_json(c.witness5);
  return j;
}

Connector connector_from_json(const Json& j) {
  Connector c;
  c.vertices = j.at("vertices").get<std::vector<int>>();
  c.sources = j.at("sources").get<std::array<int, 5>>();
  c.sinks = j.at("sinks").get<std::array<int, 5>>();
  c.witness4 = paths_from_json(j.at("witness4"));
  c.witness5 = paths_from_json(j.at("witness5"));
  return c;
}

// ------------------------------------------------------------ build_connector

namespace {

// Shortest x->y path with at most three arcs whose inner vertices lie in
// `free`. Among several candidates a random one is taken when rng is set.
std::optional<Path> short_route(const Tournament& t, int x, int y, const Bitset& free,
                                SplitMix64* rng) {
  if (t.arc(x, y)) return Path{x, y};
  Bitset a = t.out_row(x), b = t.in_row(y);
  a &= free;
  b &= free;
  Bitset mid = a;
  mid &= b;
  if (mid.any()) {
    std::vector<int> c = mid.to_vector();
    int w = rng ? c[rng->below(c.size())] : c.front();
    return Path{x, w, y};
  }
  Bitset row(t.n());
  std::vector<int> starts = a.to_vector();
  if (rng)
    for (std::size_t i = starts.size(); i > 1; --i) std::swap(starts[i - 1], starts[rng->below(i)]);
  for (int u : starts) {
    t.out_row(u, row);
    row &= b;
    if (int w = row.first(); w >= 0) return Path{x, u, w, y};
  }
  return std::nullopt;
}

// Adds index `i` to `orders` (one transitive order per path position) if
// every position stays transitive.
bool try_insert(const Tournament& t, const std::vector<Path>& paths, int i,
                std::vector<std::vector<int>>& orders) {
  const int len = static_cast<int>(paths[i].size());
  std::vector<std::size_t> at(len);
  for (int c = 0; c < len; ++c) {
    const int w = paths[i].vertices[c];
    const auto& ord = orders[c];
    std::size_t k = 0;
    while (k < ord.size() && t.arc(paths[ord[k]].vertices[c], w)) ++k;
    for (std::size_t r = k; r < ord.size(); ++r)
      if (t.arc(paths[ord[r]].vertices[c], w)) return false;
    at[c] = k;
  }
  for (int c = 0; c < len; ++c) orders[c].insert(orders[c].begin() + at[c], i);
  return true;
}

Connector assemble(const std::vector<Path>& paths, const std::vector<std::vector<int>>& orders) {
  const int len = static_cast<int>(orders.size());
  std::set<int> remaining(orders[0].begin(), orders[0].end());
  std::vector<Path> heads, tails;  // suffix from h_j, prefix up to t_j
  for (int j = 0; j < len; ++j) {
    std::vector<int> here;
    for (int i : orders[j])
      if (remaining.count(i)) here.push_back(i);
    const int it = here.front(), ih = here.back();
    const auto& pt = paths[it].vertices;
    const auto& ph = paths[ih].vertices;
    tails.emplace_back(std::vector<int>(pt.begin(), pt.begin() + j + 1));
    heads.emplace_back(std::vector<int>(ph.begin() + j, ph.end()));
    remaining.erase(it);
    remaining.erase(ih);
  }
  std::vector<int> whole;
  for (int i : orders[0])
    if (remaining.count(i)) whole.push_back(i);

  Connector c;
  auto witness = [&](int n) {
    PathSystem ps;
    std::set<int> leftover(whole.begin() + (n - len), whole.end());
    for (int i = 0; i < len; ++i) {
      Path p = tails[i];
      for (int k : orders[i])
        if (leftover.count(k)) p.vertices.push_back(paths[k].vertices[i]);
      p.append(Path(std::vector<int>(heads[i].begin(), heads[i].end())));
      ps.paths.push_back(std::move(p));
    }
    for (int i = len; i < n; ++i) ps.paths.push_back(paths[whole[i - len]]);
    return ps;
  };
  c.witness5 = witness(5);
  c.witness4 = witness(4);
  for (int i = 0; i < 5; ++i) {
    c.sources[i] = c.witness5.paths[i].front();
    c.sinks[i] = c.witness5.paths[i].back();
  }
  // In the 4-cover the fifth pair's path is absorbed into the R_i runs, so
  // the terminals are read off the 5-cover.
  c.vertices = c.witness5.vertex_union();
  return c;
}

}  // namespace

Built<Connector> build_connector(const Tournament& t, const std::vector<int>& Y,
                                 const std::vector<int>& xs, const std::vector<int>& ys,
                                 int budget, const SearchOptions& opts) {
  const int n = t.n();
  if (budget < 10) throw PreconditionError("connector budget must be at least 10");
  if (static_cast<int>(xs.size()) != budget || static_cast<int>(ys.size()) != budget)
    throw PreconditionError("connector needs |xs| = |ys| = budget");
  Bitset y(n), ends(n);
  for (int v : Y) {
    if (v < 0 || v >= n) throw PreconditionError("Y holds a vertex outside the host");
    y.set(v);
  }
  for (const auto* seq : {&xs, &ys})
    for (int v : *seq) {
      if (v < 0 || v >= n) throw PreconditionError("connector terminal outside the host");
      if (y.test(v)) throw PreconditionError("connector terminal " + std::to_string(v) + " lies in Y");
      if (ends.test(v)) throw PreconditionError("connector terminals must be distinct");
      ends.set(v);
    }

  SplitMix64 rng(opts.seed);
  int best = 0;
  Json tried = Json::array();
  for (int attempt = 0; attempt <= opts.restarts; ++attempt) {
    SplitMix64* r = attempt == 0 ? nullptr : &rng;
    std::vector<int> pair(budget);
    std::iota(pair.begin(), pair.end(), 0);
    if (r)
      for (int i = budget; i > 1; --i) std::swap(pair[i - 1], pair[r->below(i)]);

    // Route the pairs in index order; inner vertices avoid Y, every
    // terminal and everything routed before.
    Bitset free(n);
    free.set_all();
    free.subtract(y);
    free.subtract(ends);
    std::map<int, std::vector<Path>> by_len;
    for (int i = 0; i < budget; ++i) {
      auto p = short_route(t, xs[i], ys[pair[i]], free, r);
      if (!p) continue;
      for (std::size_t k = 1; k + 1 < p->size(); ++k) free.reset(p->vertices[k]);
      by_len[static_cast<int>(p->size())].push_back(std::move(*p));
    }
    std::vector<std::pair<int, int>> classes;  // (size, length), largest first
    for (const auto& [len, ps] : by_len) classes.emplace_back(static_cast<int>(ps.size()), len);
    std::sort(classes.rbegin(), classes.rend());
    for (const auto& [size, len] : classes) {
      if (size < 10) break;
      const auto& ps = by_len[len];
      std::vector<int> order(ps.size());
      std::iota(order.begin(), order.end(), 0);
      if (r)
        for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[r->below(i)]);
      std::vector<std::vector<int>> orders(len);
      int kept = 0;
      for (int i : order) {
        if (try_insert(t, ps, i, orders)) ++kept;
        if (kept == 10) break;
      }
      best = std::max(best, kept);
      if (kept < 10) continue;
      Connector c = assemble(ps, orders);
      if (!verify_connector(t, c).passed())
        throw std::logic_error("connector assembly produced an invalid connector");
      return c;
    }
    if (attempt < 4) {
      Json a;
      for (const auto& [len, ps] : by_len) a[std::to_string(len) + "-vertex paths"] = ps.size();
      tried.push_back(a);
    }
  }
  Certificate c{"connector", "fewer than 10 simultaneously transitive indices"};
  c.witness["best"] = best;
  c.witness["restarts"] = opts.restarts;
  c.witness["first_attempts"] = tried;
  return c;
}

// -------------------------------------------------------------- ramsey_select

Built<RamseySelection> ramsey_select(const Tournament& t,
                                     const std::vector<std::vector<int>>& sets, int m,
                                     int count_i, int count_j, Direction dir,
                                     const SearchOptions& opts) {
  const int R = static_cast<int>(sets.size());
  if (m < 1 || count_i < 1 || count_j < 1)
    throw PreconditionError("ramsey_select needs m, t and l positive");
  if (count_i + count_j > R)
    throw PreconditionError("ramsey_select: t + l exceeds the number of sets");
  if (2 * m > 64) throw PreconditionError("ramsey_select: sets larger than 64 vertices");
  std::set<int> seen;
  for (const auto& s : sets) {
    if (static_cast<int>(s.size()) != 2 * m)
      throw PreconditionError("ramsey_select: every set must have 2m vertices");
    for (int v : s) {
      if (v < 0 || v >= t.n()) throw PreconditionError("ramsey_select: vertex outside host");
      if (!seen.insert(v).second) throw PreconditionError("ramsey_select: sets overlap");
    }
  }
  const int w = 2 * m;
  auto beats = [&](int a, int v) { return dir == Direction::kToward ? t.arc(a, v) : t.arc(v, a); };

  // mask(i, j, q): positions of sets[i] oriented correctly against sets[j][q].
  std::vector<std::uint64_t> mask(static_cast<std::size_t>(R) * R * w, 0);
  auto at = [&](int i, int j, int q) -> std::uint64_t& {
    return mask[(static_cast<std::size_t>(i) * R + j) * w + q];
  };
  std::vector<std::vector<char>> feeds(R, std::vector<char>(R, 0));
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j) {
      if (i == j) continue;
      for (int q = 0; q < w; ++q) {
        std::uint64_t bits = 0;
        for (int a = 0; a < w; ++a)
          if (beats(sets[i][a], sets[j][q])) bits |= std::uint64_t{1} << a;
        at(i, j, q) = bits;
        if (std::popcount(bits) >= m) feeds[i][j] = 1;
      }
    }

  SplitMix64 rng(opts.seed);
  const std::uint64_t all = w == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1;
  const int attempts = R + opts.restarts;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    const bool random = attempt >= R;
    const int anchor = random ? static_cast<int>(rng.below(R)) : attempt;
    std::vector<int> window{anchor};
    for (int b = 0; b < R; ++b)
      if (feeds[anchor][b]) window.push_back(b);
    if (static_cast<int>(window.size()) < count_i + count_j) continue;
    // Sort the window from sources to sinks of the feeding relation.
    std::vector<double> rank(R, 0);
    for (int b : window) {
      for (int c : window) rank[b] += feeds[c][b];
      if (random) rank[b] += static_cast<double>(rng.below(1000)) / 1000.0;
    }
    std::stable_sort(window.begin(), window.end(),
                     [&](int a, int b) { return rank[a] < rank[b]; });

    std::vector<int> I(window.begin(), window.begin() + count_i);
    std::vector<std::uint64_t> alive(count_i, all);
    std::vector<int> J, picks;
    for (auto it = window.rbegin(); it != window.rend() && static_cast<int>(J.size()) < count_j;
         ++it) {
      const int b = *it;
      if (std::find(I.begin(), I.end(), b) != I.end()) break;
      int best_q = -1, best_min = -1;
      for (int q = 0; q < w; ++q) {
        int lo = w;
        for (int a = 0; a < count_i; ++a)
          lo = std::min(lo, std::popcount(alive[a] & at(I[a], b, q)));
        if (lo > best_min) best_min = lo, best_q = q;
      }
      if (best_min < m) continue;
      for (int a = 0; a < count_i; ++a) alive[a] &= at(I[a], b, best_q);
      J.push_back(b);
      picks.push_back(sets[b][best_q]);
    }
    if (static_cast<int>(J.size()) < count_j) continue;

    RamseySelection sel;
    std::vector<int> oi(count_i), oj(count_j);
    std::iota(oi.begin(), oi.end(), 0);
    std::iota(oj.begin(), oj.end(), 0);
    std::sort(oi.begin(), oi.end(), [&](int a, int b) { return I[a] < I[b]; });
    std::sort(oj.begin(), oj.end(), [&](int a, int b) { return J[a] < J[b]; });
    for (int a : oi) {
      sel.I.push_back(I[a]);
      std::vector<int> keep;
      for (int pos = 0; pos < w && static_cast<int>(keep.size()) < m; ++pos)
        if (alive[a] >> pos & 1U) keep.push_back(sets[I[a]][pos]);
      sel.refined.push_back(std::move(keep));
    }
    for (int b : oj) {
      sel.J.push_back(J[b]);
      sel.picks.push_back(picks[b]);
    }
    for (const auto& keep : sel.refined)
      for (int a : keep)
        for (int v : sel.picks)
          if (!beats(a, v)) throw std::logic_error("ramsey_select produced a wrong arc");
    return sel;
  }
  Certificate c{"ramsey_select", "restart budget exhausted"};
  c.witness["sets"] = R;
  c.witness["t"] = count_i;
  c.witness["l"] = count_j;
  c.witness["direction"] = dir == Direction::kToward ? "toward" : "from";
  return c;
}

}  // namespace tourlink
