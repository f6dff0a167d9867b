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


#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "tourlink/classic.hpp"
#include "tourlink/oracle.hpp"
#include "tourlink/pipeline.hpp"

using namespace tourlink;

namespace {

// Plain re-check of a Hamiltonian cycle: every vertex once, consecutive
// (and wrap-around) pairs are arcs of d.
bool closes_all(const WorkingDigraph& d, const Path& c) {
  std::vector<int> sorted = c.vertices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> all(d.n());
  std::iota(all.begin(), all.end(), 0);
  if (sorted != all) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!d.has_arc(c.vertices[i], c.vertices[(i + 1) % c.size()])) return false;
  return true;
}

std::vector<int> outside_of(const Linker& l, int n, std::size_t want) {
  const auto lv = l.vertices();
  std::vector<int> out;
  for (int v = 0; v < n && out.size() < want; ++v)
    if (!std::binary_search(lv.begin(), lv.end(), v) &&
        !std::binary_search(l.exceptional.begin(), l.exceptional.end(), v))
      out.push_back(v);
  return out;
}

Tournament desk_host(int blocks, int width, std::uint64_t seed) {
  return blowup(near_transitive_tournament(blocks, width), std::vector<int>(blocks, 4), seed);
}

}  // namespace

TEST_CASE("ham_cycle_from_partition closes one path through one linker") {
  auto c = canonical_linker(1, 5, {6, 2, 4});
  const WorkingDigraph d(c.host);
  const int n = c.host.n();
  PathSystem paths;
  paths.paths = {tournament_ham_path(c.host, {n - 4, n - 3, n - 2, n - 1})};
  auto cyc = ham_cycle_from_partition(d, paths, {c.linker});
  REQUIRE_MESSAGE(cyc.ok(), cyc.certificate().str());
  CHECK(closes_all(d, *cyc));
}

TEST_CASE("ham_cycle_from_partition with two paths and two linkers") {
  auto c = canonical_linker(4, 31, {6, 2, 4});
  auto split = [&](int i) {
    Linker l;
    for (int j : {2 * i, 2 * i + 1}) {
      l.in.push_back(c.linker.in[j]);
      l.out.push_back(c.linker.out[j]);
      l.connectors.push_back(c.linker.connectors[j]);
    }
    l.q.assign(c.linker.q.begin() + 10 * i, c.linker.q.begin() + 10 * i + 10);
    l.exceptional = c.linker.exceptional;
    return l;
  };
  const int n = c.host.n();
  const WorkingDigraph d(c.host);
  PathSystem paths;
  paths.paths = {tournament_ham_path(c.host, {n - 4, n - 3}),
                 tournament_ham_path(c.host, {n - 2, n - 1})};
  auto cyc = ham_cycle_from_partition(d, paths, {split(0), split(1)});
  REQUIRE_MESSAGE(cyc.ok(), cyc.certificate().str());
  CHECK(closes_all(d, *cyc));
}

TEST_CASE("ham_cycle_from_partition rejects a non-partition") {
  auto c = canonical_linker(1, 5, {6, 2, 4});
  const WorkingDigraph d(c.host);
  const int n = c.host.n();
  PathSystem missing;
  missing.paths = {tournament_ham_path(c.host, {n - 4, n - 3, n - 2})};
  CHECK_THROWS_AS(ham_cycle_from_partition(d, missing, {c.linker}), PreconditionError);
  PathSystem overlap;
  overlap.paths = {tournament_ham_path(c.host, {n - 4, n - 3, n - 2, n - 1, c.linker.in[0].sets[1][0]})};
  CHECK_THROWS_AS(ham_cycle_from_partition(d, overlap, {c.linker}), PreconditionError);
  CHECK_THROWS_AS(ham_cycle_from_partition(d, missing, {}), PreconditionError);
}

TEST_CASE("repair_ends moves the start onto an accepted vertex") {
  // i->j for i < j unless j - i >= 5, so there are a few backward arcs.
  const Tournament t = near_transitive_tournament(8, 3);
  const WorkingDigraph d(t);
  Path q;
  for (int v = 0; v < 8; ++v) q.vertices.push_back(v);
  REQUIRE(is_path(d, q));
  for (int want = 0; want < 8; ++want) {
    auto r = repair_ends(d, q, [&](int v) { return v == want; }, [](int) { return true; });
    if (!r) continue;
    CHECK(r->front() == want);
    std::vector<int> sorted = r->vertices;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == q.vertices);
    for (std::size_t i = 1; i < r->size(); ++i) CHECK(t.arc(r->vertices[i - 1], r->vertices[i]));
  }
  // 5 -> 0 lets the path start at 5: 5, 0, 1, 2, 3, 4, 6, 7 needs 4 -> 6.
  auto five = repair_ends(d, q, [](int v) { return v == 5; }, [](int) { return true; });
  REQUIRE(five.has_value());
  CHECK(five->front() == 5);

  // In a transitive tournament the only Hamiltonian path starts at 0.
  const Tournament tt = Tournament::build(6, [](int, int) { return true; });
  const WorkingDigraph dt(tt);
  Path line;
  for (int v = 0; v < 6; ++v) line.vertices.push_back(v);
  CHECK_FALSE(repair_ends(dt, line, [](int v) { return v == 2; }, [](int) { return true; }));
  CHECK_FALSE(repair_ends(dt, line, [](int) { return true; }, [](int v) { return v == 3; }));
}

TEST_CASE("verify_decomposition against brute force on the rotational 5-tournament") {
  // i -> i+1, i+2 (mod 5). Enumerate all Hamiltonian cycles through 0 and
  // compare the verifier with a direct arc-set intersection on every pair.
  const Tournament t = Tournament::build(5, [](int u, int v) { return (v - u + 5) % 5 <= 2; });
  std::vector<Path> cycles;
  std::vector<int> rest{1, 2, 3, 4};
  do {
    std::vector<int> c{0};
    c.insert(c.end(), rest.begin(), rest.end());
    bool ok = true;
    for (int i = 0; i < 5 && ok; ++i) ok = t.arc(c[i], c[(i + 1) % 5]);
    if (ok) cycles.emplace_back(c);
  } while (std::next_permutation(rest.begin(), rest.end()));
  REQUIRE(cycles.size() >= 2);

  auto arcs = [](const Path& c) {
    std::set<std::pair<int, int>> s;
    for (std::size_t i = 0; i < c.size(); ++i) s.insert({c.vertices[i], c.vertices[(i + 1) % c.size()]});
    return s;
  };
  int disjoint_pairs = 0;
  for (std::size_t a = 0; a < cycles.size(); ++a) {
    CHECK(verify_decomposition(t, {cycles[a]}).passed());
    for (std::size_t b = a + 1; b < cycles.size(); ++b) {
      const auto sa = arcs(cycles[a]), sb = arcs(cycles[b]);
      std::vector<std::pair<int, int>> common;
      std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
      const bool expect = common.empty();
      disjoint_pairs += expect;
      CHECK(verify_decomposition(t, {cycles[a], cycles[b]}).passed() == expect);
    }
  }
  // The step-1 and step-2 cycles split all ten arcs.
  CHECK(disjoint_pairs >= 1);
  CHECK(verify_decomposition(t, {Path{0, 1, 2, 3, 4}, Path{0, 2, 4, 1, 3}}).passed());

  auto twice = verify_decomposition(t, {Path{0, 1, 2, 3, 4}, Path{0, 1, 2, 3, 4}});
  CHECK_FALSE(twice.passed());
  CHECK(twice.first_failure()->name == "edge-disjoint");
  auto short_cycle = verify_decomposition(t, {Path{0, 1, 2, 3}});
  CHECK_FALSE(short_cycle.passed());
  CHECK(short_cycle.failed("cycle 1 coverage"));
  CHECK_FALSE(verify_decomposition(t, {Path{0, 2, 1, 3, 4}}).passed());
}

TEST_CASE("edge_disjoint_ham_cycles with one cycle on a desk host") {
  const Tournament t = desk_host(2000, 200, 1);
  ParamProfile profile;
  CHECK_THROWS_AS(edge_disjoint_ham_cycles(t, 0, profile), PreconditionError);
  auto dec = edge_disjoint_ham_cycles(t, 1, profile);
  REQUIRE_MESSAGE(dec.ok(), dec.failure->str());
  REQUIRE(dec.cycles.size() == 1);
  CHECK(closes_all(WorkingDigraph(t), dec.cycles[0]));
  CHECK(verify_decomposition(t, dec.cycles).passed());
  CHECK(dec.stats["rounds"].size() == 1);
}

TEST_CASE("link_pairs routes one pair and checks its inputs") {
  const Tournament t = desk_host(1400, 140, 1);
  ParamProfile profile;
  auto built = build_linkers(t, 1, 1, profile);
  REQUIRE(built.ok());
  const auto ends = outside_of(built.linkers[0], t.n(), 2);
  const int x = ends[0], y = ends[1];

  auto r = link_pairs(t, {{x, y}}, profile);
  REQUIRE_MESSAGE(r.ok(), r.certificate().str());
  REQUIRE(r->size() == 1);
  const Path& p = r->paths[0];
  CHECK(p.front() == x);
  CHECK(p.back() == y);
  for (std::size_t i = 1; i < p.size(); ++i) CHECK(t.arc(p.vertices[i - 1], p.vertices[i]));
  CHECK(std::set<int>(p.begin(), p.end()).size() == p.size());

  CHECK_THROWS_AS(link_pairs(t, {}, profile), PreconditionError);
  CHECK_THROWS_AS(link_pairs(t, {{x, y}, {y, x + 1}}, profile), PreconditionError);
  CHECK_THROWS_AS(link_pairs(t, {{x, t.n()}}, profile), PreconditionError);
}
