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
#include <functional>
#include <set>

#include "doctest.h"
#include "tourlink/linkage.hpp"
#include "tourlink/oracle.hpp"

using namespace tourlink;

namespace {

// Rewrites every arc at v: v->w exactly when out(w).
Tournament rewire(const Tournament& t, int v, const std::function<bool(int)>& out) {
  return Tournament::build(t.n(), [&](int a, int b) {
    if (a == v) return out(b);
    if (b == v) return !out(a);
    return t.arc(a, b);
  });
}

std::set<int> interiors(const std::vector<Path>& ps) {
  std::set<int> s;
  for (const Path& p : ps)
    for (std::size_t i = 1; i + 1 < p.size(); ++i) s.insert(p.vertices[i]);
  return s;
}

// Checks a step result against the inputs without the library verifier.
void check_step(const WorkingDigraph& d, const std::vector<Linker>& family, int x, int y,
                const PathSystem& p, const LinkStepResult& r) {
  REQUIRE(r.path.size() >= 2);
  CHECK(r.path.front() == x);
  CHECK(r.path.back() == y);
  for (std::size_t i = 1; i < r.path.size(); ++i)
    REQUIRE(d.has_arc(r.path.vertices[i - 1], r.path.vertices[i]));

  std::multiset<int> seen(r.path.begin(), r.path.end());
  REQUIRE(r.rerouted.size() == p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Path& q = r.rerouted.paths[i];
    CHECK(q.front() == p.paths[i].front());
    CHECK(q.back() == p.paths[i].back());
    for (std::size_t j = 1; j < q.size(); ++j) CHECK(d.has_arc(q.vertices[j - 1], q.vertices[j]));
    seen.insert(q.begin(), q.end());
  }
  REQUIRE(r.residual.size() + 1 == family.size());
  for (std::size_t i = 0; i < r.residual.size(); ++i) {
    auto ev = r.residual[i].essential_vertices();
    CHECK(ev == family[i].essential_vertices());
    seen.insert(ev.begin(), ev.end());
    for (std::size_t j = 0; j < r.residual[i].q.size(); ++j) {
      const Path& q = r.residual[i].q[j];
      CHECK(q.front() == family[i].q[j].front());
      CHECK(q.back() == family[i].q[j].back());
      seen.insert(q.begin(), q.end());
    }
  }
  for (int v : seen) CHECK(seen.count(v) == 1);

  std::set<int> want{x, y};
  for (const Path& q : p.paths) want.insert(q.begin(), q.end());
  for (const Linker& l : family)
    for (int v : l.vertices()) want.insert(v);
  for (int v : r.extra_vertices) CHECK(want.insert(v).second);
  CHECK(std::set<int>(seen.begin(), seen.end()) == want);
}

}  // namespace

TEST_CASE("near_transitive_tournament") {
  const Tournament t = near_transitive_tournament(9, 2);
  for (int i = 0; i < 9; ++i)
    for (int j = i + 1; j < 9; ++j) CHECK(t.arc(i, j) == (j - i < 7));
  CHECK_THROWS_AS(near_transitive_tournament(5, 4), PreconditionError);
  CHECK_THROWS_AS(near_transitive_tournament(2, 1), PreconditionError);
}

TEST_CASE("link_through case (a) covers the linker") {
  for (int t : {1, 2, 3}) {
    CAPTURE(t);
    auto c = canonical_linker(t, 50 + t, {6, 2, 4});
    const WorkingDigraph d(c.host);
    const int n = c.host.n();
    const int x = n - 4, y = n - 3;
    PathSystem p;
    p.paths = {Path{n - 2}, Path{n - 1}};
    auto r = link_through(d, c.linker, x, y, p);
    REQUIRE(r.ok());
    CHECK(r->link_case == 'a');
    CHECK(r->extra_vertices.empty());
    CHECK(r->path.size() == c.linker.vertices().size() + 2);
    check_step(d, {c.linker}, x, y, p, *r);
    CHECK(verify_link_step(d, {c.linker}, x, y, p, *r).passed());
  }
}

TEST_CASE("link_through preconditions") {
  auto c = canonical_linker(1, 3, {6, 2, 4});
  const WorkingDigraph d(c.host);
  const int n = c.host.n();
  const int inside = c.linker.in[0].sets[1][0];
  CHECK_THROWS_AS(link_through(d, c.linker, inside, n - 1, {}), PreconditionError);
  CHECK_THROWS_AS(link_through(d, c.linker, n - 1, n - 1, {}), PreconditionError);
  PathSystem p;
  p.paths = {Path{n - 1}};
  CHECK_THROWS_AS(link_through(d, c.linker, n - 2, n - 1, p), PreconditionError);
}

TEST_CASE("link_through case (b) pivots on a Q path") {
  auto c = canonical_linker(2, 7, {6, 3, 2});
  const int n = c.host.n();
  const int x = n - 2, y = n - 1;
  const auto inner = interiors(c.linker.q);
  const Tournament host = rewire(c.host, x, [&](int w) { return inner.count(w) > 0; });
  const WorkingDigraph d(host);
  auto r = link_through(d, c.linker, x, y, {});
  REQUIRE(r.ok());
  CHECK(r->link_case == 'b');
  CHECK(r->extra_vertices.empty());
  check_step(d, {c.linker}, x, y, {}, *r);
}

TEST_CASE("link_through case (b) reroutes a protected path") {
  // x reaches only the middle of a protected slack path a->m->b.
  auto c = canonical_linker(2, 9, {6, 1, 5});
  const int n = c.host.n();
  const int x = n - 5, y = n - 4, a = n - 3, m = n - 2, b = n - 1;
  Tournament host = rewire(c.host, x, [&](int w) { return w == m; });
  host = rewire(host, m, [&](int w) { return w == b || (w != a && w != x && host.arc(m, w)); });
  host = rewire(host, a, [&](int w) { return w == m || (w != x && host.arc(a, w)); });
  const WorkingDigraph d(host);
  PathSystem p;
  p.paths = {Path{a, m, b}};
  auto r = link_through(d, c.linker, x, y, p);
  REQUIRE(r.ok());
  CHECK(r->link_case == 'b');
  CHECK(r->path.vertices[1] == m);
  CHECK(r->rerouted.paths[0].size() > 3);
  check_step(d, {c.linker}, x, y, p, *r);
}

TEST_CASE("link_through uses a free out-neighbour as an extra vertex") {
  auto c = canonical_linker(2, 13, {6, 1, 3});
  const int n = c.host.n();
  const int x = n - 3, y = n - 2, f = n - 1;
  const Tournament host = rewire(c.host, x, [&](int w) { return w == f; });
  const WorkingDigraph d(host);
  auto r = link_through(d, c.linker, x, y, {});
  REQUIRE(r.ok());
  CHECK(r->extra_vertices == std::vector<int>{f});
  check_step(d, {c.linker}, x, y, {}, *r);
}

TEST_CASE("link_through case (c) handles y without in-arcs from outdominators") {
  auto c = canonical_linker(4, 21, {6, 3, 2});
  const int n = c.host.n();
  const int x = n - 2, y = n - 1;
  const auto inner = interiors(c.linker.q);
  const Tournament host = rewire(c.host, y, [&](int w) { return inner.count(w) == 0; });
  const WorkingDigraph d(host);
  auto r = link_through(d, c.linker, x, y, {});
  REQUIRE(r.ok());
  CHECK(r->link_case == 'c');
  check_step(d, {c.linker}, x, y, {}, *r);

  // With only one linker of width 2 the same instance has no answer.
  auto c2 = canonical_linker(2, 21, {6, 3, 2});
  const int n2 = c2.host.n();
  const auto inner2 = interiors(c2.linker.q);
  const WorkingDigraph d2(rewire(c2.host, n2 - 1, [&](int w) { return inner2.count(w) == 0; }));
  auto r2 = link_through(d2, c2.linker, n2 - 2, n2 - 1, {});
  CHECK_FALSE(r2.ok());
  CHECK(r2.certificate().stage == "link_through");
}

TEST_CASE("linking_family_step keeps the other linkers intact") {
  auto c = canonical_linker(4, 31, {6, 2, 3});
  // Two 2-linkers cut from one 4-linker.
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
  const std::vector<Linker> family{split(0), split(1)};
  const int n = c.host.n();
  const int x = n - 3, y = n - 2;
  // x reaches only Q interiors of the first linker, so the step pivots on
  // a path it does not own and hands it back rerouted.
  std::set<int> inner = interiors(family[0].q);
  const Tournament host = rewire(c.host, x, [&](int w) { return inner.count(w) > 0; });
  const WorkingDigraph d(host);
  PathSystem p;
  p.paths = {Path{n - 1}};
  auto r = linking_family_step(d, family, x, y, p);
  REQUIRE(r.ok());
  CHECK(r->residual.size() == 1);
  check_step(d, family, x, y, p, *r);
  CHECK(verify_link_step(d, family, x, y, p, *r).passed());
}

TEST_CASE("verify_link_step rejects a broken result") {
  auto c = canonical_linker(1, 5, {6, 2, 3});
  const WorkingDigraph d(c.host);
  const int n = c.host.n();
  auto r = link_through(d, c.linker, n - 3, n - 2, {});
  REQUIRE(r.ok());
  LinkStepResult bad = *r;
  bad.path.vertices.erase(bad.path.vertices.begin() + 3);
  auto rep = verify_link_step(d, {c.linker}, n - 3, n - 2, {}, bad);
  CHECK_FALSE(rep.passed());
  bad = *r;
  bad.extra_vertices = {n - 1};
  CHECK(verify_link_step(d, {c.linker}, n - 3, n - 2, {}, bad).failed("vertex union"));
}

TEST_CASE("build_linkers on a near-transitive blowup") {
  const Tournament t = blowup(near_transitive_tournament(1400, 140), std::vector<int>(1400, 4), 1);
  ParamProfile profile;
  auto none = build_linkers(t, 0, 1, profile);
  CHECK(none.ok());
  CHECK(none.linkers.empty());

  auto built = build_linkers(t, 1, 1, profile);
  REQUIRE_MESSAGE(built.ok(), built.failure->str());
  REQUIRE(built.linkers.size() == 1);
  const Linker& l = built.linkers[0];
  CHECK(verify_linker(t, l).passed());
  CHECK(l.exceptional == built.exceptional);

  // With t = 1 the linker joins two vertices outside X.
  const WorkingDigraph d(t);
  const auto lv = l.vertices();
  std::vector<int> outside;
  for (int v = 0; v < t.n() && outside.size() < 2; ++v)
    if (!std::binary_search(lv.begin(), lv.end(), v) &&
        !std::binary_search(l.exceptional.begin(), l.exceptional.end(), v))
      outside.push_back(v);
  auto r = link_through(d, l, outside[0], outside[1], {});
  REQUIRE_MESSAGE(r.ok(), r.certificate().str());
  check_step(d, {l}, outside[0], outside[1], {}, *r);
}
