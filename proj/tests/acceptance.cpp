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


// Acceptance run: one PASS/FAIL line per criterion. Expected values come
// from the exhaustive oracles or from direct re-checks written here, never
// from the verifier under test alone.
//
// Usage: acceptance [fixtures.json]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tourlink/classic.hpp"
#include "tourlink/oracle.hpp"
#include "tourlink/pipeline.hpp"

using namespace tourlink;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  // Set when the only failing part is one that cannot be met at all; the
  // line still reads FAIL but the exit status ignores it.
  std::string unattainable;
};

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Records the first counterexample and keeps counting.
struct Tally {
  long checked = 0;
  long failed = 0;
  std::string first;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first = what();
  }
  Outcome outcome(const std::string& summary) const {
    Outcome o;
    o.pass = failed == 0;
    o.detail = summary + ", " + std::to_string(checked) + " checks";
    if (failed) o.detail += ", " + std::to_string(failed) + " failed, first: " + first;
    return o;
  }
};

std::string tag(int n, std::uint64_t seed) {
  return "n=" + std::to_string(n) + " seed=" + std::to_string(seed);
}

bool arcs_ok(const Tournament& t, const Path& p, bool closed) {
  if (p.empty()) return false;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (!t.arc(p.vertices[i - 1], p.vertices[i])) return false;
  return !closed || p.size() == 1 || t.arc(p.back(), p.front());
}

bool spans(const std::vector<int>& vs, int n) {
  std::vector<int> s = vs;
  std::sort(s.begin(), s.end());
  if (static_cast<int>(s.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    if (s[i] != i) return false;
  return true;
}

std::uint64_t pow2_at_least(int s) { return s >= 63 ? ~0ULL : (1ULL << s); }

// --------------------------------------------------------------- 1

Outcome camion_moon() {
  Tally tally;
  for (int n = 3; n <= 10; ++n)
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      const Tournament t = uniform_tournament(n, seed);
      const auto moon = moon_ham_cycle(t);
      const auto brute = brute_ham_cycle(t);
      tally.expect(moon.has_value() == brute.has_value(), [&] { return "existence " + tag(n, seed); });
      if (moon)
        tally.expect(spans(moon->vertices, n) && arcs_ok(t, *moon, true),
                     [&] { return "cycle " + tag(n, seed); });
    }
  return tally.outcome("1600 uniform tournaments");
}

// --------------------------------------------------------------- 2

// The stated bound d >= 12n/25 rounds n/25 down to a real number; what the
// counting argument gives is d >= (n - ceil(n/25))/2. The two agree when 25
// divides n. Both are checked; only the second is required to hold.
Outcome degree_facts() {
  Tally tally, literal;
  auto check = [&](const Tournament& t, const std::string& at) {
    const int n = t.n();
    const int k = (n + 24) / 25;
    for (Side side : {Side::kOut, Side::kIn}) {
      const auto large = large_degree_vertices(t, side);
      // Definition: fewer than n/25 vertices of strictly larger degree.
      std::vector<int> by_def;
      for (int v = 0; v < n; ++v) {
        int larger = 0;
        for (int w = 0; w < n; ++w) larger += t.degree(w, side) > t.degree(v, side);
        if (25 * larger < n) by_def.push_back(v);
      }
      tally.expect(large == by_def, [&] { return "definition " + at; });
      tally.expect(25 * static_cast<long>(large.size()) >= n, [&] { return "count " + at; });
      for (int v : large) {
        const int d = t.degree(v, side);
        tally.expect(2 * d >= n - k, [&] { return "counting bound at " + std::to_string(v) + " " + at; });
        literal.expect(25L * d >= 12L * n, [&] {
          return "d=" + std::to_string(d) + " < 12n/25 at " + at;
        });
      }
    }
  };
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const int n = 1 + static_cast<int>((seed * 7919) % 500);
    check(uniform_tournament(n, seed), tag(n, seed));
  }
  // One vertex beating a regular 25-vertex tournament: each other vertex
  // has out-degree 12 and only one vertex above it.
  check(Tournament::build(26, [](int u, int v) { return u == 0 || (v - u + 25) % 25 <= 12; }),
        "top vertex over a regular 25-tournament");
  Outcome o = tally.outcome("500 tournaments with n <= 500 and one constructed n=26 host");
  if (o.pass && literal.failed) {
    o.pass = false;
    o.unattainable = "d >= 12n/25 is false when 25 does not divide n: " + std::to_string(literal.failed) +
                     " violations, first " + literal.first + "; d >= (n - ceil(n/25))/2 held throughout";
  }
  return o;
}

// --------------------------------------------------------------- 3

// Internally disjoint u->v paths of at most three arcs, all present in t.
bool short_family_ok(const Tournament& t, int u, int v, const ShortPaths& sp) {
  if (static_cast<int>(sp.family.size()) != sp.count) return false;
  std::set<int> inner;
  for (const Path& p : sp.family.paths) {
    if (p.size() < 2 || p.size() > 4 || p.front() != u || p.back() != v) return false;
    if (!arcs_ok(t, p, false)) return false;
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
      if (!inner.insert(p.vertices[i]).second) return false;
  }
  return !inner.count(u) && !inner.count(v);
}

Outcome short_paths() {
  Tally tally;
  auto run = [&](int n, std::uint64_t seed, bool oracle) {
    const Tournament t = uniform_tournament(n, seed);
    const auto lo = large_degree_vertices(t, Side::kOut);
    const auto li = large_degree_vertices(t, Side::kIn);
    SplitMix64 rng(seed * 31 + static_cast<std::uint64_t>(n));
    for (int s = 0; s < 12; ++s) {
      const int u = lo[rng.below(lo.size())], v = li[rng.below(li.size())];
      if (u == v) continue;
      const ShortPaths sp = short_path_count(t, u, v);
      const std::string at = tag(n, seed) + " u=" + std::to_string(u) + " v=" + std::to_string(v);
      tally.expect(short_family_ok(t, u, v, sp), [&] { return "family " + at; });
      tally.expect(25 * sp.count >= n, [&] { return "count " + std::to_string(sp.count) + " " + at; });
      if (oracle) {
        const int best = brute_disjoint_paths(t, u, v, 3);
        tally.expect(sp.count <= best && best >= (n + 24) / 25,
                     [&] { return "oracle " + std::to_string(best) + " " + at; });
      }
    }
  };
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    for (int n : {25, 50, 100, 200}) run(n, seed, false);
    run(25 + static_cast<int>((seed * 37) % 176), seed, false);
    run(3 + static_cast<int>(seed % 8), seed, true);
  }
  return tally.outcome("n in 25..200 and n <= 10 against the oracle, 100 seeds");
}

// --------------------------------------------------------------- 4

Outcome transitive_size() {
  Tally tally;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const int n = 2 + static_cast<int>((seed * 1999) % 1999);
    const Tournament t = uniform_tournament(n, seed);
    const auto s = greedy_transitive(t);
    bool transitive = true;
    for (std::size_t i = 0; i < s.size() && transitive; ++i)
      for (std::size_t j = i + 1; j < s.size() && transitive; ++j) transitive = t.arc(s[i], s[j]);
    tally.expect(transitive, [&] { return "not transitive " + tag(n, seed); });
    tally.expect(pow2_at_least(static_cast<int>(s.size())) >= static_cast<std::uint64_t>(n),
                 [&] { return "size " + std::to_string(s.size()) + " " + tag(n, seed); });
  }
  return tally.outcome("1000 tournaments, n <= 2000");
}

// --------------------------------------------------------------- 5

Outcome greedy_domination() {
  Tally tally;
  for (int k = 1; k <= 8; ++k)
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      const int n = 20 + static_cast<int>((seed * 131 + static_cast<std::uint64_t>(k) * 17) % 381);
      const Tournament t = uniform_tournament(n, seed * 8 + static_cast<std::uint64_t>(k));
      for (Side side : {Side::kIn, Side::kOut}) {
        const GreedySequence g = greedy_dominating_sequence(t, k, side);
        // In the view where the sequence in-dominates, a vertex is
        // uncovered when it sends no arc into the sequence.
        const Tournament view = side == Side::kIn ? t : reverse(t);
        std::vector<int> uncovered;
        for (int u = 0; u < n; ++u) {
          if (std::find(g.vertices.begin(), g.vertices.end(), u) != g.vertices.end()) continue;
          if (std::none_of(g.vertices.begin(), g.vertices.end(), [&](int s) { return view.arc(u, s); }))
            uncovered.push_back(u);
        }
        const std::string at = tag(n, seed) + " k=" + std::to_string(k);
        tally.expect(g.uncovered == uncovered, [&] { return "uncovered set " + at; });
        tally.expect(static_cast<int>(g.vertices.size()) == k || g.exhausted,
                     [&] { return "length " + at; });
        const double bound = std::ldexp(1.0, static_cast<int>(g.vertices.size()) - 1) *
                             static_cast<double>(uncovered.size());
        for (int u : uncovered)
          tally.expect(view.out_degree(u) >= bound, [&] { return "degree " + at; });
      }
    }
  return tally.outcome("k = 1..8, 50 seeds, both sides");
}

// --------------------------------------------------------------- 6

Outcome dominator_suite() {
  Tally tally;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const int n = 2000 + static_cast<int>((seed - 1) * 160);
    const Tournament t = uniform_tournament(n, seed);
    const int delta = std::min(t.min_out_degree(), t.min_in_degree());
    for (Side side : {Side::kIn, Side::kOut}) {
      const std::string at = tag(n, seed) + " " + to_string(side);
      const auto d = build_dominator(t, side, {}, DominatorParams{});
      tally.expect(d.ok(), [&] { return "build " + at + ": " + d.certificate().str(); });
      if (!d.ok()) continue;
      const auto rep = verify_dominator(t, *d);
      tally.expect(rep.passed(), [&] { return "verify " + at + ": " + rep.first_failure()->name; });
      // Grow X as far as enlarge_exceptional allows (2|Y| <= min degree).
      const auto core = d->vertices();
      std::vector<int> y = d->exceptional;
      for (int v = 0; v < n && 2 * static_cast<int>(y.size()) + 2 <= delta; ++v)
        if (!std::binary_search(core.begin(), core.end(), v) &&
            std::find(d->exceptional.begin(), d->exceptional.end(), v) == d->exceptional.end())
          y.push_back(v);
      const Dominator big = enlarge_exceptional(t, *d, y);
      const auto rep2 = verify_dominator(t, big);
      tally.expect(big.p == d->p / 2 && rep2.passed(), [&] {
        return "robustness |Y|=" + std::to_string(y.size()) + " " + at +
               (rep2.passed() ? "" : ": " + rep2.first_failure()->name);
      });
    }
  }
  return tally.outcome("50 uniform hosts, n in [2000, 9840], both sides, X enlarged to delta/2");
}

// --------------------------------------------------------------- 7

// TT10 with transitive order x1..x5 y5 y1..y4 on ids 0..9.
Connector tt10_connector() {
  Connector c;
  for (int i = 0; i < 10; ++i) c.vertices.push_back(i);
  for (int i = 0; i < 5; ++i) {
    c.sources[i] = i;
    c.sinks[i] = i == 4 ? 5 : 6 + i;
    c.witness5.paths.push_back(Path{c.sources[i], c.sinks[i]});
  }
  c.witness4.paths = {Path{0, 4, 5, 6}, Path{1, 7}, Path{2, 8}, Path{3, 9}};
  return c;
}

Tournament flip_arc(const Tournament& t, int u, int v) {
  return Tournament::build(t.n(), [&](int a, int b) {
    const bool base = t.arc(a, b);
    return (a == u && b == v) || (a == v && b == u) ? !base : base;
  });
}

// x_i = i and y_i = b + i; every arc among the 2b terminals runs forward.
Tournament engineered_connector_host(int b, int extra, std::uint64_t seed) {
  CoinStream coins(seed);
  return Tournament::build(2 * b + extra, [&](int, int v) { return v < 2 * b || coins.next(); });
}

std::vector<int> iota_vec(int from, int count) {
  std::vector<int> v(count);
  for (int i = 0; i < count; ++i) v[i] = from + i;
  return v;
}

Tournament fixture_host(const Json& h) {
  const int blocks = h.at("blocks").get<int>();
  const Tournament base = h.at("base").get<std::string>() == "near"
                              ? near_transitive_tournament(blocks, h.at("width").get<int>())
                              : circulant_tournament(blocks);
  return blowup(base, std::vector<int>(blocks, h.at("block_size").get<int>()),
                h.at("seed").get<std::uint64_t>());
}

// Large out-degree sources and large in-degree sinks, none on both lists.
std::pair<std::vector<int>, std::vector<int>> connector_candidates(const Tournament& t, int want) {
  const auto lo = large_degree_vertices(t, Side::kOut);
  const auto li = large_degree_vertices(t, Side::kIn);
  std::vector<int> xs, ys;
  for (int v : lo)
    if (static_cast<int>(xs.size()) < want && !std::binary_search(li.begin(), li.end(), v)) xs.push_back(v);
  for (int v : li)
    if (static_cast<int>(ys.size()) < want && !std::binary_search(lo.begin(), lo.end(), v)) ys.push_back(v);
  const std::size_t both = std::min(xs.size(), ys.size());
  xs.resize(both);
  ys.resize(both);
  return {xs, ys};
}

Outcome connector_suite(const Json& fx) {
  Tally tally;
  const Connector tt10 = tt10_connector();
  tally.expect(verify_connector(transitive_tournament(10), tt10).passed(), [] { return "TT10"; });

  // Every mutation below breaks a clause of the definition.
  const Tournament t12 = transitive_tournament(12);
  SplitMix64 rng(2026);
  int mutations = 0;
  for (int trial = 0; trial < 1200; ++trial, ++mutations) {
    Connector bad = tt10;
    Tournament host = t12;
    const int kind = static_cast<int>(rng.below(7));
    switch (kind) {
      case 0: bad.sources[rng.below(5)] = 10 + static_cast<int>(rng.below(2)); break;
      case 1: bad.sinks[rng.below(5)] = 10 + static_cast<int>(rng.below(2)); break;
      case 2: {
        auto& p = bad.witness5.paths[rng.below(5)].vertices;
        p.insert(p.begin() + 1, 11);
        break;
      }
      case 3: bad.vertices.push_back(11); break;
      case 4: {
        auto& p = bad.witness4.paths[rng.below(4)].vertices;
        std::reverse(p.begin(), p.end());
        break;
      }
      case 5: {
        const std::size_t i = rng.below(5), j = (i + 1 + rng.below(4)) % 5;
        std::swap(bad.sinks[i], bad.sinks[j]);
        break;
      }
      default: {
        // Reverse one arc the 4-path cover uses.
        const Path& p = bad.witness4.paths[rng.below(4)];
        const std::size_t at = 1 + rng.below(p.size() - 1);
        host = flip_arc(t12, p.vertices[at - 1], p.vertices[at]);
      }
    }
    tally.expect(!verify_connector(host, bad).passed(),
                 [&] { return "mutation " + std::to_string(trial) + " kind " + std::to_string(kind) + " accepted"; });
  }

  int built = 0, certified = 0;
  auto attempt = [&](const Tournament& t, const std::vector<int>& xs, const std::vector<int>& ys,
                     int restarts, std::uint64_t seed, const std::string& at) {
    SearchOptions opts;
    opts.restarts = restarts;
    opts.seed = seed;
    const auto c = build_connector(t, {}, xs, ys, static_cast<int>(xs.size()), opts);
    if (c.ok()) {
      ++built;
      tally.expect(verify_connector(t, *c).passed(), [&] { return "verify " + at; });
    } else {
      ++certified;
      tally.expect(c.certificate().stage == "connector", [&] { return "certificate " + at; });
    }
    return c.ok();
  };
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const int b = 10 + static_cast<int>(seed);
    attempt(engineered_connector_host(b, 30, seed), iota_vec(0, b), iota_vec(b, b), 64, 1,
            "engineered seed " + std::to_string(seed));
  }
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Tournament t = uniform_tournament(3000, seed);
    auto [xs, ys] = connector_candidates(t, 300);
    attempt(t, xs, ys, 16, 1, "uniform " + tag(3000, seed));
    Json h = fx.at("host");
    h["seed"] = seed;
    const Tournament nt = fixture_host(h);
    auto [nx, ny] = connector_candidates(nt, 300);
    attempt(nt, nx, ny, 16, 1, "blowup seed " + std::to_string(seed));
  }
  // The committed regression fixture must build.
  const Tournament ft = fixture_host(fx.at("host"));
  auto [fxs, fys] = connector_candidates(ft, fx.at("candidates").get<int>());
  const bool fixture_ok = attempt(ft, fxs, fys, fx.at("restarts").get<int>(),
                                  fx.at("search_seed").get<std::uint64_t>(), "committed fixture");
  tally.expect(fixture_ok, [] { return "committed fixture did not build"; });
  return tally.outcome("TT10, " + std::to_string(mutations) + " mutations rejected, " +
                       std::to_string(built) + " built and verified, " + std::to_string(certified) +
                       " certified failures");
}

// --------------------------------------------------------------- 8

Outcome linker_suite() {
  Tally tally;
  for (int t : {1, 2, 3, 12}) {
    const auto c = canonical_linker(t, 100 + static_cast<std::uint64_t>(t));
    const auto rep = verify_linker(c.host, c.linker);
    tally.expect(rep.passed(), [&] { return "verify_linker t=" + std::to_string(t) + ": " + rep.first_failure()->name; });
  }
  for (int t : {1, 2}) {
    const auto c = canonical_linker(t, 200 + static_cast<std::uint64_t>(t));
    const int x = c.linker.in[0].sets[1].front();
    const int y = c.linker.out[t - 1].sets[1].back();
    const Path p = linker_ham_path(c.host, c.linker, x, y);
    tally.expect(p.front() == x && p.back() == y && p.vertices.size() == c.linker.vertices().size() &&
                     std::is_permutation(p.begin(), p.end(), c.linker.vertices().begin()) &&
                     arcs_ok(c.host, p, false),
                 [&] { return "weave t=" + std::to_string(t); });
  }
  Outcome o = tally.outcome("canonical t in {1,2,3,12} verified, weaves for t in {1,2}");

  // The smallest canonical 1-linker, one vertex per dominator layer and
  // one arc per Q path, against the exhaustive Hamiltonian path oracle.
  const auto mini = canonical_linker(1, 1, {1, 1, 0});
  const int size = static_cast<int>(mini.linker.vertices().size());
  if (size <= kHamOracleCap) {
    const auto lv = mini.linker.vertices();
    const auto sub = induced(mini.host, lv);
    const int x = mini.linker.in[0].sets[1].front(), y = mini.linker.out[0].sets[1].back();
    auto local = [&](int v) { return static_cast<int>(std::lower_bound(lv.begin(), lv.end(), v) - lv.begin()); };
    const bool exists = brute_ham_path(sub.tournament, local(x), local(y)).has_value();
    bool woven = true;
    try {
      linker_ham_path(mini.host, mini.linker, x, y);
    } catch (const std::exception&) {
      woven = false;
    }
    if (exists != woven) {
      o.pass = false;
      o.detail += "; mini-fixture disagrees with the oracle";
    }
  } else {
    const std::string note = "mini-fixture: the smallest 1-linker has " + std::to_string(size) +
                             " vertices (10 connector terminals, 8 dominator layers, 5 Q paths), above the " +
                             std::to_string(kHamOracleCap) + "-vertex oracle cap";
    // Only an otherwise clean run may be excused.
    if (o.pass)
      o.unattainable = note;
    else
      o.detail += "; " + note;
    o.pass = false;
  }
  return o;
}

// --------------------------------------------------------------- 9

Tournament rewire(const Tournament& t, int v, const std::function<bool(int)>& out) {
  return Tournament::build(t.n(), [&](int a, int b) {
    if (a == v) return out(b);
    if (b == v) return !out(a);
    return t.arc(a, b);
  });
}

std::set<int> q_interiors(const Linker& l) {
  std::set<int> s;
  for (const Path& p : l.q)
    for (std::size_t i = 1; i + 1 < p.size(); ++i) s.insert(p.vertices[i]);
  return s;
}

// Re-checks one step: the new path, the rerouted paths, and the identity
// V(P) u V(P_in) u V(F_in) u {x, y} u extras = V(P) u V(P_out) u V(F_out).
void check_step(Tally& tally, const std::string& at, const WorkingDigraph& d, const Linker& l,
                int x, int y, const PathSystem& p, const LinkStepResult& r, std::size_t cap) {
  tally.expect(r.extra_vertices.size() <= cap && r.extra_vertices.size() <= 6,
               [&] { return at + ": " + std::to_string(r.extra_vertices.size()) + " extras"; });
  bool path_ok = r.path.size() >= 2 && r.path.front() == x && r.path.back() == y;
  for (std::size_t i = 1; path_ok && i < r.path.size(); ++i)
    path_ok = d.has_arc(r.path.vertices[i - 1], r.path.vertices[i]);
  tally.expect(path_ok, [&] { return at + ": x->y path"; });
  bool ends = r.rerouted.size() == p.size();
  for (std::size_t i = 0; ends && i < p.size(); ++i) {
    const Path& q = r.rerouted.paths[i];
    ends = q.front() == p.paths[i].front() && q.back() == p.paths[i].back();
    for (std::size_t j = 1; ends && j < q.size(); ++j) ends = d.has_arc(q.vertices[j - 1], q.vertices[j]);
    if (p.paths[i].size() == 1) ends = ends && q.vertices == p.paths[i].vertices;
  }
  tally.expect(ends, [&] { return at + ": rerouted endpoints"; });
  std::multiset<int> out(r.path.begin(), r.path.end());
  for (const Path& q : r.rerouted.paths) out.insert(q.begin(), q.end());
  std::set<int> in{x, y};
  for (const Path& q : p.paths) in.insert(q.begin(), q.end());
  for (int v : l.vertices()) in.insert(v);
  for (int v : r.extra_vertices) in.insert(v);
  bool disjoint = true;
  for (int v : out) disjoint = disjoint && out.count(v) == 1;
  tally.expect(disjoint && std::set<int>(out.begin(), out.end()) == in,
               [&] { return at + ": vertex union"; });
  tally.expect(verify_link_step(d, {l}, x, y, p, r).passed(), [&] { return at + ": verify_link_step"; });
}

Outcome linking_contract() {
  Tally tally;
  std::map<char, int> seen;
  auto run = [&](const std::string& at, const Tournament& host, const Linker& l, int x, int y,
                 const PathSystem& p, char expect_case) {
    const WorkingDigraph d(host);
    const auto r = link_through(d, l, x, y, p);
    tally.expect(r.ok(), [&] { return at + ": " + r.certificate().str(); });
    if (!r.ok()) return;
    ++seen[r->link_case];
    tally.expect(r->link_case == expect_case, [&] { return at + ": case " + std::string(1, r->link_case); });
    const std::size_t cap = r->link_case == 'a' ? 0 : r->link_case == 'b' ? 1 : r->link_case == 'c' ? 2 : 6;
    check_step(tally, at, d, l, x, y, p, *r, cap);
  };
  for (int t : {1, 2, 3}) {
    auto c = canonical_linker(t, 50 + static_cast<std::uint64_t>(t), {6, 2, 4});
    const int n = c.host.n();
    PathSystem p;
    p.paths = {Path{n - 2}, Path{n - 1}};
    run("case a t=" + std::to_string(t), c.host, c.linker, n - 4, n - 3, p, 'a');
  }
  {
    auto c = canonical_linker(2, 7, {6, 3, 2});
    const int n = c.host.n();
    const auto inner = q_interiors(c.linker);
    run("case b on a Q path", rewire(c.host, n - 2, [&](int w) { return inner.count(w) > 0; }),
        c.linker, n - 2, n - 1, {}, 'b');
  }
  {
    auto c = canonical_linker(2, 13, {6, 1, 3});
    const int n = c.host.n();
    run("case b via a free vertex", rewire(c.host, n - 3, [&](int w) { return w == n - 1; }), c.linker,
        n - 3, n - 2, {}, 'b');
  }
  {
    auto c = canonical_linker(4, 21, {6, 3, 2});
    const int n = c.host.n();
    const auto inner = q_interiors(c.linker);
    run("case c", rewire(c.host, n - 1, [&](int w) { return inner.count(w) == 0; }), c.linker, n - 2,
        n - 1, {}, 'c');
  }
  return tally.outcome("cases a:" + std::to_string(seen['a']) + " b:" + std::to_string(seen['b']) +
                       " c:" + std::to_string(seen['c']));
}

// --------------------------------------------------------------- 10

Outcome end_to_end(const Json& fx) {
  Tally tally;
  auto run = [&](const Json& h, int k) {
    const Tournament t = fixture_host(h);
    ParamProfile profile;
    profile.seed = h.at("seed").get<std::uint64_t>();
    if (h.contains("family_size")) profile.family_size = h.at("family_size").get<int>();
    const std::string at = "k=" + std::to_string(k) + " " + tag(t.n(), profile.seed);
    const Decomposition dec = edge_disjoint_ham_cycles(t, k, profile);
    tally.expect(dec.ok(), [&] { return at + ": " + dec.failure->str(); });
    tally.expect(!dec.ok() || static_cast<int>(dec.cycles.size()) == k, [&] { return at + ": cycle count"; });
    tally.expect(dec.stats.contains("linkers"), [&] { return at + ": linker pipeline stats missing"; });
    std::set<std::pair<int, int>> used;
    bool disjoint = true;
    for (const Path& c : dec.cycles) {
      tally.expect(spans(c.vertices, t.n()) && arcs_ok(t, c, true), [&] { return at + ": cycle"; });
      for (std::size_t i = 0; i < c.size(); ++i)
        disjoint = used.insert({c.vertices[i], c.vertices[(i + 1) % c.size()]}).second && disjoint;
    }
    tally.expect(disjoint, [&] { return at + ": cycles share an arc"; });
    tally.expect(verify_decomposition(t, dec.cycles).passed(), [&] { return at + ": verify_decomposition"; });
  };
  for (const Json& h : fx.at("hamdecomp_k1")) run(h, 1);
  for (const Json& h : fx.at("hamdecomp_k2")) run(h, 2);
  return tally.outcome(std::to_string(fx.at("hamdecomp_k1").size()) + " runs with k=1, " +
                       std::to_string(fx.at("hamdecomp_k2").size()) + " with k=2");
}

// --------------------------------------------------------------- 11

Outcome constants_audit(std::string& tower) {
  Tally tally;
  const std::vector<std::string> named{"C = (Delta1 + 2) C1'", "C1' = 8300 Delta1 C0", "C0 = 2^32 C1",
                                       "C1 = 50(R0 + 40t)",    "L >= 2^(m+M)",         "p <= 2^(m-1)",
                                       "104tk <= K/2",         "K/5 >= t"};
  for (int k = 1; k <= 10; ++k) {
    const ConstantsAudit a = audit_constants(k);
    tally.expect(a.passed(), [&] { return "k=" + std::to_string(k); });
    for (const std::string& name : named) {
      const auto it = std::find_if(a.checks.begin(), a.checks.end(),
                                   [&](const AuditCheck& c) { return c.name == name; });
      tally.expect(it != a.checks.end() && a.holds(*it), [&] { return name + " k=" + std::to_string(k); });
    }
    // Recompute the chain from C1 by hand.
    const BigInt d1 = a.delta1;
    const AffineR0 c0 = (BigInt(1) << 32) * a.c1_records;
    tally.expect(a.c0 == c0 && a.c1 == (8300 * d1) * a.c0 && a.c == (d1 + 2) * a.c1 &&
                     a.big_k == (100 * d1 * k) * a.c0,
                 [&] { return "chain k=" + std::to_string(k); });
    tower = a.n_tower;
  }
  tally.expect(tower == "100·2^(2^(2^(2^10)))", [&] { return "N tower " + tower; });
  return tally.outcome("k = 1..10, N = " + tower);
}

// --------------------------------------------------------------- 12

Outcome gallai_milgram() {
  Tally tally;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const int n = 1 + static_cast<int>(seed % 20);
    const double removal = 0.05 + 0.06 * static_cast<double>(seed % 10);
    const WorkingDigraph d = random_working_digraph(n, seed, removal);
    const std::string at = tag(n, seed);
    auto partition_ok = [&](const PathSystem& ps) {
      std::vector<int> all;
      for (const Path& p : ps.paths) {
        if (p.empty() || !is_path(d, p)) return false;
        all.insert(all.end(), p.begin(), p.end());
      }
      return spans(all, n);
    };
    const PathSystem cover = gallai_milgram_cover(d);
    const int alpha = independence_number(d);
    tally.expect(partition_ok(cover), [&] { return "partition " + at; });
    tally.expect(static_cast<int>(cover.size()) <= alpha,
                 [&] { return std::to_string(cover.size()) + " paths > alpha " + std::to_string(alpha) + " " + at; });
    int delta = n;
    for (int v = 0; v < n; ++v) {
      int nb = 0;
      for (int w = 0; w < n; ++w) nb += w != v && d.adjacent(v, w);
      delta = std::min(delta, nb);
    }
    for (int k = std::max(1, n - delta); k <= n; ++k) {
      const PathSystem ps = cover_by_k_paths(d, k);
      tally.expect(partition_ok(ps) && static_cast<int>(ps.size()) <= k,
                   [&] { return "k=" + std::to_string(k) + " " + at; });
    }
  }
  return tally.outcome("200 digraphs, n <= 20");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : TOURLINK_FIXTURES;
  std::ifstream is(path);
  if (!is) {
    std::cerr << "cannot read fixtures " << path << "\n";
    return 2;
  }
  const Json fx = Json::parse(is);
  std::string tower;

  struct Criterion {
    int id;
    std::string title;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Camion/Moon agreement", 60, camion_moon},
      {2, "degree and large-degree facts", 60, degree_facts},
      {3, "short paths between large-degree vertices", 120, short_paths},
      {4, "greedy transitive subtournament", 60, transitive_size},
      {5, "greedy dominating sequence", 60, greedy_domination},
      {6, "dominator suite", 300, dominator_suite},
      {7, "connector suite", 300, [&] { return connector_suite(fx.at("connector")); }},
      {8, "linker suite", 120, linker_suite},
      {9, "linking-step contract", 120, linking_contract},
      {10, "end-to-end decomposition", 1800, [&] { return end_to_end(fx); }},
      {11, "constants audit", 1, [&] { return constants_audit(tower); }},
      {12, "Gallai-Milgram", 120, gallai_milgram},
  };
  int blocking = 0;
  for (const Criterion& c : criteria) {
    const Clock clock;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double s = clock.seconds();
    if (s > c.budget) {
      o.pass = false;
      o.detail += "; over the time budget";
      o.unattainable.clear();
    }
    std::printf("%s %2d %s: %s%s%s (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                o.detail.c_str(), o.unattainable.empty() ? "" : "; unattainable ",
                o.unattainable.c_str(), s);
    std::fflush(stdout);
    if (!o.pass && o.unattainable.empty()) ++blocking;
  }
  return blocking == 0 ? 0 : 1;
}
