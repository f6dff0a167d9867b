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


#include "tourlink/domination.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace tourlink {
namespace {

Bitset all_vertices(int n) {
  Bitset b(n);
  b.set_all();
  return b;
}

Bitset to_bits(int n, const std::vector<int>& vs, const char* what) {
  Bitset b(n);
  for (int v : vs) {
    if (v < 0 || v >= n)
      throw PreconditionError(std::string(what) + " contains vertex " +
                              std::to_string(v) + " outside the tournament");
    b.set(v);
  }
  return b;
}

// Vertex of `cand` with the largest degree inside `cand` on the given side
// of the view; lowest id on ties. -1 when cand is empty.
int argmax_degree_in(const OrientedView& view, const Bitset& cand, bool in_side) {
  int best = -1, best_deg = -1;
  cand.for_each([&](int v) {
    const int d = in_side ? view.in_degree_in(v, cand) : view.out_degree_in(v, cand);
    if (d > best_deg) {
      best_deg = d;
      best = v;
    }
  });
  return best;
}

std::string list_prefix(const std::vector<int>& vs, std::size_t limit = 6) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size() && i < limit; ++i) os << (i ? "," : "") << vs[i];
  if (vs.size() > limit) os << ",...";
  return os.str();
}

// 2^e as a double, saturating for huge exponents.
double pow2(int e) { return std::ldexp(1.0, std::min(e, 1000)); }

// Augmenting-path search (one DFS per left vertex) for a maximum matching of arcs from
// `left` into `right`. match_right[b] is the partner of b or -1.
class ArcMatching {
 public:
  ArcMatching(const Tournament& t, const Bitset& left, const Bitset& right)
      : t_(t), right_(right), match_right_(t.n(), -1), match_left_(t.n(), -1) {
    Bitset row(t.n());
    left.for_each([&](int a) {
      t_.out_row(a, row);
      row &= right_;
      for (int b = row.first(); b >= 0; b = row.next(b + 1)) {
        if (match_right_[b] < 0) {
          match_right_[b] = a;
          match_left_[a] = b;
          break;
        }
      }
    });
    left.for_each([&](int a) {
      if (match_left_[a] >= 0) return;
      Bitset visited(t.n());
      augment(a, visited);
    });
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < t_.n(); ++a)
      if (match_left_[a] >= 0) out.emplace_back(a, match_left_[a]);
    return out;
  }

 private:
  bool augment(int a, Bitset& visited) {
    Bitset row(t_.n());
    t_.out_row(a, row);
    row &= right_;
    row.subtract(visited);
    for (int b = row.first(); b >= 0; b = row.next(b + 1)) {
      if (visited.test(b)) continue;
      visited.set(b);
      if (match_right_[b] < 0 || augment(match_right_[b], visited)) {
        match_right_[b] = a;
        match_left_[a] = b;
        return true;
      }
    }
    return false;
  }

  const Tournament& t_;
  const Bitset& right_;
  std::vector<int> match_right_, match_left_;
};

// The four sets in in-side transitive order of the view.
std::array<std::vector<int>, 4> view_sets(const Dominator& d) {
  auto s = d.sets;
  if (d.orientation == Side::kOut)
    for (auto& v : s) std::reverse(v.begin(), v.end());
  return s;
}

}  // namespace

std::vector<int> large_degree_vertices(const Tournament& t, Side side, Ratio fraction) {
  if (fraction.num <= 0 || fraction.den <= 0 || fraction.num >= fraction.den)
    throw PreconditionError("large-degree fraction must lie strictly between 0 and 1");
  const int n = t.n();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = t.degree(v, side);
  std::vector<int> sorted = deg;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    const auto larger = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), deg[v]);
    if (static_cast<std::int64_t>(larger) * fraction.den <
        fraction.num * static_cast<std::int64_t>(n))
      out.push_back(v);
  }
  return out;
}

ShortPaths short_path_count(const Tournament& t, int u, int v) {
  const int n = t.n();
  if (u < 0 || v < 0 || u >= n || v >= n || u == v)
    throw PreconditionError("short_path_count needs two distinct vertices");
  Bitset out_u = t.out_row(u);
  Bitset in_v = t.in_row(v);
  Bitset common = out_u;
  common &= in_v;
  Bitset left = out_u;
  left.subtract(in_v);
  left.reset(v);
  Bitset right = in_v;
  right.subtract(out_u);
  right.reset(u);

  ShortPaths res;
  res.family.internally_disjoint = true;
  if (t.arc(u, v)) res.family.paths.push_back(Path{u, v});
  common.for_each([&](int w) { res.family.paths.push_back(Path{u, w, v}); });
  ArcMatching matching(t, left, right);
  for (auto [a, b] : matching.edges()) res.family.paths.push_back(Path{u, a, b, v});
  res.count = static_cast<int>(res.family.paths.size());
  return res;
}

std::vector<int> greedy_transitive(const OrientedView& t, const Bitset* within) {
  Bitset cur = within ? *within : all_vertices(t.n());
  Bitset row(t.n());
  std::vector<int> seq;
  while (cur.any()) {
    const int v = argmax_degree_in(t, cur, /*in_side=*/false);
    seq.push_back(v);
    t.out_row(v, row);
    cur &= row;
  }
  return seq;
}

std::vector<int> greedy_transitive(const Tournament& t, const Bitset* within) {
  return greedy_transitive(OrientedView(t, false), within);
}

GreedySequence greedy_dominating_sequence(const Tournament& t, int k, Side side,
                                          const Bitset* restriction) {
  if (k < 1) throw PreconditionError("greedy sequence length must be positive");
  const OrientedView view = OrientedView::for_side(t, side);
  Bitset cur = restriction ? *restriction : all_vertices(t.n());
  if (cur.none()) throw PreconditionError("greedy sequence restriction is empty");
  GreedySequence g;
  g.orientation = side;
  g.restriction = cur.to_vector();
  Bitset row(t.n());
  while (static_cast<int>(g.vertices.size()) < k) {
    if (cur.none()) {
      g.exhausted = true;
      break;
    }
    const int v = argmax_degree_in(view, cur, /*in_side=*/true);
    g.vertices.push_back(v);
    view.out_row(v, row);
    cur &= row;
  }
  g.uncovered = cur.to_vector();
  return g;
}

// The loop realises the maximal choice of (X, k): grow the greedy sequence
// while its next forced vertex still beats all of X, and when it cannot
// grow, retire its head into X. Retiring the head keeps the prefix greedy
// because the head lies in every earlier common out-neighbourhood, so the
// in-degrees that chose the earlier vertices are unchanged.
Built<Predominator> build_predominator(const OrientedView& view, const Bitset& universe,
                                       const DominatorParams& params) {
  const int m = params.m, M = params.M, target = m + M;
  if (m < 1 || M < 1) throw PreconditionError("predominator needs m, M >= 1");
  const std::int64_t L = std::max<std::int64_t>(params.L, 0);
  if (params.paper) {
    if (static_cast<double>(L) < pow2(target))
      throw PreconditionError("paper profile requires L >= 2^(m+M)");
    if (params.p > pow2(m - 1))
      throw PreconditionError("paper profile requires p <= 2^(m-1)");
    if (universe.count() < L) throw PreconditionError("paper profile requires |T| >= L");
  }
  const int n = view.n();
  Bitset x(n), row(n);
  std::vector<int> seq;
  std::vector<Bitset> common{universe};  // common[i]: candidates after i picks
  int case_taken = 0;
  while (true) {
    int blocked = -1;
    while (static_cast<int>(seq.size()) < target) {
      const Bitset& cand = common.back();
      if (cand.none()) break;
      const int v = argmax_degree_in(view, cand, /*in_side=*/true);
      view.out_row(v, row);
      Bitset missed = x;
      missed.subtract(row);
      if (missed.any()) {
        blocked = v;
        break;
      }
      seq.push_back(v);
      Bitset next = cand;
      next &= row;
      common.push_back(std::move(next));
    }
    if (static_cast<int>(seq.size()) == target) {
      case_taken = 1;
      break;
    }
    if (x.count() >= L || (seq.empty() && blocked < 0)) {
      case_taken = 2;
      break;
    }
    // With an empty sequence any vertex may join X, so the blocked
    // candidate is retired instead of a head.
    const int head = seq.empty() ? blocked : seq.back();
    if (!seq.empty()) {
      seq.pop_back();
      common.pop_back();
    }
    x.set(head);
    for (auto& c : common) c.reset(head);
  }

  Predominator pd;
  pd.case_taken = case_taken;
  std::vector<int> full = seq;
  if (case_taken == 2) {
    const int need = target - static_cast<int>(seq.size());
    std::vector<int> xt = greedy_transitive(view, &x);
    if (static_cast<int>(xt.size()) < need) {
      Certificate c{"predominator",
                    "transitive subtournament of X too short to complete the sequence"};
      c.witness["sequence"] = seq;
      c.witness["x_size"] = x.count();
      c.witness["needed"] = need;
      c.witness["found"] = xt.size();
      return c;
    }
    xt.resize(need);
    for (int w : xt) x.reset(w);
    full.insert(full.end(), xt.begin(), xt.end());
  }
  pd.a.assign(full.begin(), full.begin() + m);
  pd.b.assign(full.begin() + m, full.end());
  pd.exceptional = x.to_vector();

  Bitset e = universe;
  e.subtract(x);
  for (int a : pd.a) {
    view.out_row(a, row);
    e &= row;
  }
  for (int b : pd.b) e.reset(b);
  pd.uncovered = e.to_vector();

  VerificationReport rep = verify_predominator(view, universe, pd, m, M, L, params.p);
  if (!rep.passed()) {
    const Clause f = *rep.first_failure();
    Certificate c{"predominator", f.name + ": " + f.detail};
    c.witness["case"] = case_taken;
    c.witness["uncovered"] = pd.uncovered.size();
    c.witness["x_size"] = pd.exceptional.size();
    return c;
  }
  return pd;
}

Built<Predominator> build_predominator(const Tournament& t, const DominatorParams& params) {
  return build_predominator(OrientedView(t, false), all_vertices(t.n()), params);
}

VerificationReport verify_predominator(const OrientedView& view, const Bitset& universe,
                                       const Predominator& pd, int m, int M,
                                       std::int64_t L, double p) {
  VerificationReport rep("predominator");
  const int n = view.n();
  rep.add("size A", static_cast<int>(pd.a.size()) == m,
          "|A|=" + std::to_string(pd.a.size()));
  rep.add("size B", static_cast<int>(pd.b.size()) == M,
          "|B|=" + std::to_string(pd.b.size()));

  std::vector<int> seq = pd.a;
  seq.insert(seq.end(), pd.b.begin(), pd.b.end());
  Bitset inside(n);
  bool members_ok = true;
  for (int v : seq) {
    if (v < 0 || v >= n || !universe.test(v) || inside.test(v)) members_ok = false;
    else inside.set(v);
  }
  rep.add("members", members_ok, "A and B distinct vertices of the universe");
  if (!members_ok) return rep;

  bool transitive = true;
  std::string bad;
  for (std::size_t i = 0; i < seq.size() && transitive; ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (!view.arc(seq[i], seq[j])) {
        transitive = false;
        bad = std::to_string(seq[j]) + "->" + std::to_string(seq[i]);
        break;
      }
  rep.add("(i) A then B transitive", transitive, bad);

  Bitset x(n);
  bool x_ok = true;
  for (int v : pd.exceptional) {
    if (v < 0 || v >= n || !universe.test(v) || inside.test(v)) x_ok = false;
    else x.set(v);
  }
  rep.add("(iv) X inside universe, |X| <= L",
          x_ok && static_cast<std::int64_t>(pd.exceptional.size()) <= L,
          "|X|=" + std::to_string(pd.exceptional.size()) + " L=" + std::to_string(L));

  Bitset host = universe;
  host.subtract(x);
  Bitset e(n);
  bool e_ok = true;
  for (int v : pd.uncovered) {
    if (v < 0 || v >= n || !host.test(v)) e_ok = false;
    else e.set(v);
  }
  rep.add("uncovered inside universe minus X", e_ok);

  Bitset dominated(n), row(n);
  for (int a : pd.a) {
    view.in_row(a, row);
    dominated |= row;
  }
  Bitset missing = host;
  missing.subtract(e);
  missing.subtract(inside);
  missing.subtract(dominated);
  rep.add("(iii) A in-dominates universe minus E, X and B", missing.none(),
          missing.any() ? "undominated: " + list_prefix(missing.to_vector()) : "");

  const int esize = e.count();
  int worst = -1, worst_deg = 0;
  e.for_each([&](int v) {
    const int d = view.out_degree_in(v, universe);
    if (static_cast<double>(d) < p * esize && worst < 0) {
      worst = v;
      worst_deg = d;
    }
  });
  rep.add("(v) expansion of uncovered", worst < 0,
          worst < 0 ? "" : "vertex " + std::to_string(worst) + " has degree " +
                               std::to_string(worst_deg) + " < p*|E| with |E|=" +
                               std::to_string(esize));
  return rep;
}

int Dominator::tail() const {
  return orientation == Side::kIn ? sets[0].front() : sets[3].front();
}

int Dominator::head() const {
  return orientation == Side::kIn ? sets[3].back() : sets[0].back();
}

std::vector<int> Dominator::vertices() const {
  std::vector<int> out;
  for (const auto& s : sets) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

Json to_json(const Dominator& d) {
  const char* prefix = d.orientation == Side::kIn ? "A" : "B";
  Json j;
  j["orientation"] = to_string(d.orientation);
  j["m"] = d.m;
  j["M"] = d.M;
  j["p"] = d.p;
  for (int i = 0; i < 4; ++i) j[prefix + std::to_string(i + 1)] = d.sets[i];
  j["uncovered"] = d.uncovered;
  j["exceptional"] = d.exceptional;
  return j;
}

Dominator dominator_from_json(const Json& j) {
  Dominator d;
  const std::string o = j.at("orientation").get<std::string>();
  if (o != "in" && o != "out") throw PreconditionError("dominator orientation must be in or out");
  d.orientation = o == "in" ? Side::kIn : Side::kOut;
  d.m = j.at("m").get<int>();
  d.M = j.at("M").get<int>();
  d.p = j.at("p").get<double>();
  const std::string prefix = d.orientation == Side::kIn ? "A" : "B";
  for (int i = 0; i < 4; ++i) d.sets[i] = j.at(prefix + std::to_string(i + 1)).get<std::vector<int>>();
  d.uncovered = j.at("uncovered").get<std::vector<int>>();
  d.exceptional = j.at("exceptional").get<std::vector<int>>();
  return d;
}

Built<Dominator> build_dominator(const Tournament& t, Side side, const std::vector<int>& Y,
                                 const DominatorParams& params) {
  const int n = t.n();
  const int m = params.m, M = params.M;
  if (m < 1 || M < 1) throw PreconditionError("dominator needs m, M >= 1");
  Bitset y = to_bits(n, Y, "Y");
  const int ysize = y.count();
  if (ysize >= n) throw PreconditionError("Y covers every vertex of the tournament");
  if (params.paper) {
    const double big = pow2(2 * m + 2 * M);
    if (n < 25 * big) throw PreconditionError("paper profile requires |T| >= 25*2^(2m+2M)");
    if (ysize > n / 25.0 - big)
      throw PreconditionError("paper profile requires |Y| <= |T|/25 - 2^(2m+2M)");
    if (static_cast<double>(params.L) < pow2(m + M) + m + M)
      throw PreconditionError("paper profile requires L >= 2^(m+M) + m + M");
    if (params.p > pow2(m - 1)) throw PreconditionError("paper profile requires p <= 2^(m-1)");
  }

  const OrientedView view = OrientedView::for_side(t, side);
  Bitset pool(n);
  for (int v : large_degree_vertices(t, side, params.large_fraction)) pool.set(v);
  pool.subtract(y);
  Bitset rest = all_vertices(n);
  rest.subtract(y);

  // A1 comes from the large-degree pool; each pick keeps the largest
  // common out-neighbourhood in the whole host so the chain can continue.
  Bitset row(n);
  std::vector<int> chain;
  Bitset cur_pool = pool, cur_all = rest;
  for (int i = 0; i < M; ++i) {
    int best = -1, best_deg = -1;
    cur_pool.for_each([&](int v) {
      const int d = view.out_degree_in(v, cur_all);
      if (d > best_deg) {
        best_deg = d;
        best = v;
      }
    });
    if (best < 0) {
      Certificate c{"dominator", "large-degree pool holds no transitive chain of length M"};
      c.witness["found"] = chain;
      c.witness["pool"] = pool.count();
      return c;
    }
    chain.push_back(best);
    view.out_row(best, row);
    cur_pool &= row;
    cur_all &= row;
  }
  for (int i = 0; i < m; ++i) {
    if (cur_all.none()) {
      Certificate c{"dominator", "common out-neighbourhood of A1 too small for A2"};
      c.witness["found"] = chain;
      return c;
    }
    const int v = argmax_degree_in(view, cur_all, /*in_side=*/false);
    chain.push_back(v);
    view.out_row(v, row);
    cur_all &= row;
  }
  std::vector<int> s1(chain.begin(), chain.begin() + M);
  std::vector<int> s2(chain.begin() + M, chain.end());

  // T' = vertices beaten by all of A2, outside Y and the chain.
  Bitset tprime = rest;
  for (int v : s2) {
    view.out_row(v, row);
    tprime &= row;
  }
  for (int v : chain) tprime.reset(v);

  Dominator d;
  d.orientation = side;
  d.m = m;
  d.M = M;
  d.p = params.p;
  Bitset x = y;

  // Small T': finish the chain with A3 and A4 and put the rest of T' into X.
  bool done = false;
  if (tprime.count() <= params.L + m + M) {
    std::vector<int> more;
    Bitset c = cur_all;
    while (static_cast<int>(more.size()) < m + M && c.any()) {
      const int v = argmax_degree_in(view, c, /*in_side=*/false);
      more.push_back(v);
      view.out_row(v, row);
      c &= row;
    }
    Bitset leftover = tprime;
    for (int v : more) leftover.reset(v);
    if (static_cast<int>(more.size()) == m + M && leftover.count() <= params.L) {
      d.sets = {s1, s2, std::vector<int>(more.begin(), more.begin() + m),
                std::vector<int>(more.begin() + m, more.end())};
      x |= leftover;
      done = true;
    }
  }
  if (!done) {
    DominatorParams inner = params;
    inner.paper = false;
    inner.L = std::max<std::int64_t>(params.L - m - M, 0);
    Built<Predominator> pd = build_predominator(view, tprime, inner);
    if (!pd) {
      Certificate c = pd.certificate();
      c.stage = "dominator/" + c.stage;
      c.witness["t_prime"] = tprime.count();
      return c;
    }
    d.sets = {s1, s2, pd->a, pd->b};
    d.uncovered = pd->uncovered;
    for (int v : pd->exceptional) x.set(v);
  }
  d.exceptional = x.to_vector();
  if (side == Side::kOut)
    for (auto& s : d.sets) std::reverse(s.begin(), s.end());

  VerificationReport rep = verify_dominator(t, d);
  if (!rep.passed()) {
    const Clause f = *rep.first_failure();
    Certificate c{"dominator", f.name + ": " + f.detail};
    c.witness["dominator"] = to_json(d);
    return c;
  }
  return d;
}

VerificationReport verify_dominator(const Tournament& t, const Dominator& d) {
  const char* label = d.orientation == Side::kIn ? "A" : "B";
  VerificationReport rep(std::string(d.orientation == Side::kIn ? "in" : "out") +
                         "dominator");
  const int n = t.n();
  const OrientedView view = OrientedView::for_side(t, d.orientation);
  const auto sets = view_sets(d);

  bool ids_ok = true;
  for (const auto& s : sets)
    for (int v : s) ids_ok &= v >= 0 && v < n;
  for (int v : d.uncovered) ids_ok &= v >= 0 && v < n;
  for (int v : d.exceptional) ids_ok &= v >= 0 && v < n;
  rep.add("vertex ids", ids_ok);
  if (!ids_ok) return rep;

  Bitset core_members(n);
  bool disjoint = true;
  for (const auto& s : sets)
    for (int v : s) {
      if (core_members.test(v)) disjoint = false;
      core_members.set(v);
    }
  rep.add("(D1) disjoint", disjoint);

  Bitset row(n);
  for (int i = 0; i < 3; ++i) {
    std::vector<int> u = sets[i];
    u.insert(u.end(), sets[i + 1].begin(), sets[i + 1].end());
    Bitset ub = Bitset::from(n, u);
    const int s = ub.count();
    std::vector<int> seen(s, 0);
    bool ok = s == static_cast<int>(u.size()) && !sets[i].empty() && !sets[i + 1].empty();
    int tail = -1, head = -1;
    for (int v : u) {
      if (!ok) break;
      const int deg = view.out_degree_in(v, ub);
      if (deg >= s || seen[deg]++) ok = false;
      if (deg == s - 1) tail = v;
      if (deg == 0) head = v;
    }
    if (ok) {
      ok = std::find(sets[i].begin(), sets[i].end(), tail) != sets[i].end() &&
           std::find(sets[i + 1].begin(), sets[i + 1].end(), head) != sets[i + 1].end();
    }
    const std::string a = label + std::to_string(i + 1);
    const std::string b = label + std::to_string(i + 2);
    rep.add("(D2) " + a + "+" + b + " transitive", ok,
            ok ? "" : "not transitive with tail in " + a + " and head in " + b);
  }

  rep.add("(D3) |" + std::string(label) + "2|=|" + label + "3|=m",
          static_cast<int>(sets[1].size()) == d.m && static_cast<int>(sets[2].size()) == d.m,
          std::to_string(sets[1].size()) + "," + std::to_string(sets[2].size()) +
              " vs m=" + std::to_string(d.m));
  rep.add("(D4) |" + std::string(label) + "1|=|" + label + "4|=M",
          static_cast<int>(sets[0].size()) == d.M && static_cast<int>(sets[3].size()) == d.M,
          std::to_string(sets[0].size()) + "," + std::to_string(sets[3].size()) +
              " vs M=" + std::to_string(d.M));

  Bitset host = all_vertices(n);
  for (int v : d.exceptional) host.reset(v);
  host |= core_members;
  Bitset e(n);
  for (int v : d.uncovered)
    if (host.test(v)) e.set(v);

  Bitset dominated(n);
  for (int i = 1; i <= 2; ++i)
    for (int c : sets[i]) {
      view.in_row(c, row);
      dominated |= row;
    }
  Bitset missing = host;
  missing.subtract(core_members);
  missing.subtract(e);
  missing.subtract(dominated);
  rep.add("(D5) core dominates", missing.none(),
          missing.any() ? "undominated: " + list_prefix(missing.to_vector()) : "");

  const int esize = e.count();
  int worst = -1, worst_deg = 0;
  e.for_each([&](int v) {
    const int deg = view.out_degree_in(v, host);
    if (static_cast<double>(deg) < d.p * esize && worst < 0) {
      worst = v;
      worst_deg = deg;
    }
  });
  rep.add("(D6) expansion of uncovered", worst < 0,
          worst < 0 ? "" : "vertex " + std::to_string(worst) + " has degree " +
                               std::to_string(worst_deg) + " < p*|E| with |E|=" +
                               std::to_string(esize));
  return rep;
}

bool is_layered(const Tournament& t, const Dominator& d) {
  const OrientedView view = OrientedView::for_side(t, d.orientation);
  const auto sets = view_sets(d);
  for (int i = 0; i < 4; ++i) {
    const auto& s = sets[i];
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b)
        if (!view.arc(s[a], s[b])) return false;
    if (i < 3)
      for (int a : s)
        for (int b : sets[i + 1])
          if (!view.arc(a, b)) return false;
  }
  return true;
}

Dominator enlarge_exceptional(const Tournament& t, const Dominator& d,
                              const std::vector<int>& Y) {
  const int n = t.n();
  Bitset y = to_bits(n, Y, "Y");
  for (int v : d.exceptional)
    if (!y.test(v)) throw PreconditionError("exceptional set must be contained in Y");
  const int delta = d.orientation == Side::kIn ? t.min_out_degree() : t.min_in_degree();
  if (2 * y.count() > delta)
    throw PreconditionError("2|Y| = " + std::to_string(2 * y.count()) +
                            " exceeds the minimum degree " + std::to_string(delta));
  Dominator out = d;
  out.exceptional = y.to_vector();
  out.p = d.p / 2;
  out.uncovered.clear();
  for (int v : d.uncovered)
    if (!y.test(v)) out.uncovered.push_back(v);
  return out;
}

}  // namespace tourlink
