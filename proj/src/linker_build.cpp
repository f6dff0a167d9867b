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


// Linker construction: H records, the four chained index selections,
// connectors between the picked vertices, and the assembly.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>

#include "tourlink/classic.hpp"
#include "tourlink/linkage.hpp"

namespace tourlink {
namespace {

std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

int desk_ramsey(double slack, int a, int b) {
  return static_cast<int>(std::ceil(slack * (a + b) - 1e-9));
}

Dominator retarget(const Tournament& t, const Dominator& d, const std::vector<int>& Y,
                   const ParamProfile& profile) {
  if (profile.is_paper()) return enlarge_exceptional(t, d, Y);
  // Desk mode skips the 2|Y| <= min degree precondition of
  // enlarge_exceptional; the result is verified wherever it is used.
  Dominator out = d;
  out.exceptional = Y;
  out.p = d.p / 2;
  out.uncovered.clear();
  for (int v : d.uncovered)
    if (!std::binary_search(Y.begin(), Y.end(), v)) out.uncovered.push_back(v);
  return out;
}

Certificate fail(const std::string& stage, const Certificate& inner) {
  Certificate c{stage, inner.reason};
  c.witness = inner.witness;
  c.witness["inner_stage"] = inner.stage;
  return c;
}

std::vector<int> pick(const std::vector<int>& from, const std::vector<int>& idx) {
  std::vector<int> out;
  for (int i : idx) out.push_back(from[i]);
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

RecordPlan record_plan(int t, const ParamProfile& profile) {
  if (t < 1) throw PreconditionError("record_plan needs t >= 1");
  const double s = profile.ramsey_slack;
  const int budget = std::max(profile.connector_budget, 10);
  RecordPlan p;
  p.i5 = p.i6 = t;
  p.i3 = p.i4 = 2 * t;
  // Every connector uses 5 sources and 5 sinks; later ones still need a
  // full budget of unused terminals.
  p.j3 = p.j4 = budget + 5 * (t - 1);
  p.j2 = 5 * t;
  p.i2 = desk_ramsey(s, p.i3, p.j3);
  p.i1 = desk_ramsey(s, p.i4, p.j4);
  p.j1 = desk_ramsey(s, p.i2, p.j2);
  p.r0 = desk_ramsey(s, p.i1, p.j1);
  return p;
}

Linker with_exceptional(const Tournament& t, const Linker& base, const std::vector<int>& Y,
                        const ParamProfile& profile) {
  std::vector<int> y = sorted_union(Y, {});
  Linker l = base;
  for (auto* side : {&l.in, &l.out})
    for (Dominator& d : *side) d = retarget(t, d, y, profile);
  l.exceptional = y;
  return l;
}

Built<SingleLinker> build_single_linker(const Tournament& t, const std::vector<int>& X,
                                        const std::vector<int>& Z,
                                        const std::vector<LinkerRecord>& records, int t_width,
                                        const ParamProfile& profile) {
  const RecordPlan plan = record_plan(t_width, profile);
  const int R = static_cast<int>(records.size());
  if (R < plan.r0)
    throw PreconditionError("build_single_linker: " + std::to_string(R) + " records, " +
                            std::to_string(plan.r0) + " required");
  const int half = profile.M / 2;
  if (profile.M != 2 * half) throw PreconditionError("build_single_linker: M must be even");
  for (const LinkerRecord& h : records) {
    if (h.in.orientation != Side::kIn || h.out.orientation != Side::kOut)
      throw PreconditionError("build_single_linker: record dominators have the wrong sides");
    if (h.q.empty() || h.q.front() != h.in.head() || h.q.back() != h.out.tail())
      throw PreconditionError("build_single_linker: Q must run from head(D-) to tail(D+)");
    for (const auto* d : {&h.in, &h.out})
      if (static_cast<int>(d->sets[0].size()) != profile.M ||
          static_cast<int>(d->sets[3].size()) != profile.M)
        throw PreconditionError("build_single_linker: A1/A4 must have M vertices");
  }
  SearchOptions opts;
  opts.restarts = profile.restart_budget;

  auto sets_of = [&](const std::vector<int>& idx, bool in_side, int which) {
    std::vector<std::vector<int>> s;
    for (int i : idx) s.push_back((in_side ? records[i].in : records[i].out).sets[which]);
    return s;
  };
  std::vector<int> all(R);
  std::iota(all.begin(), all.end(), 0);

  // 1. A4 sets feed picks v- of J1.
  opts.seed = profile.seed * 8 + 1;
  auto s1 = ramsey_select(t, sets_of(all, true, 3), half, plan.i1, plan.j1, Direction::kToward, opts);
  if (!s1) return fail("single linker: A4 selection", s1.certificate());
  const std::vector<int> I1 = s1->I, J1 = s1->J;
  // 2. Picks v+ of J2 feed the B4 sets of I2 (inside J1).
  opts.seed = profile.seed * 8 + 2;
  auto s2 = ramsey_select(t, sets_of(J1, false, 3), half, plan.i2, plan.j2, Direction::kFrom, opts);
  if (!s2) return fail("single linker: B4 selection", s2.certificate());
  const std::vector<int> I2 = pick(J1, s2->I), J2 = pick(J1, s2->J);
  // 3. B1 sets of I3 feed picks u+ of J3 (inside I2).
  opts.seed = profile.seed * 8 + 3;
  auto s3 = ramsey_select(t, sets_of(I2, false, 0), half, plan.i3, plan.j3, Direction::kToward, opts);
  if (!s3) return fail("single linker: B1 selection", s3.certificate());
  const std::vector<int> I3 = pick(I2, s3->I), J3 = pick(I2, s3->J);
  // 4. Picks u- of J4 feed the A1 sets of I4 (inside I1).
  opts.seed = profile.seed * 8 + 4;
  auto s4 = ramsey_select(t, sets_of(I1, true, 0), half, plan.i4, plan.j4, Direction::kFrom, opts);
  if (!s4) return fail("single linker: A1 selection", s4.certificate());
  const std::vector<int> I4 = pick(I1, s4->I), J4 = pick(I1, s4->J);

  // Refined sets by record index.
  std::vector<std::vector<int>> a4(R), b4(R), b1(R), a1(R);
  std::vector<int> vminus(R, -1), vplus(R, -1);
  for (std::size_t k = 0; k < I1.size(); ++k) a4[I1[k]] = s1->refined[k];
  for (std::size_t k = 0; k < J1.size(); ++k) vminus[J1[k]] = s1->picks[k];
  for (std::size_t k = 0; k < I2.size(); ++k) b4[I2[k]] = s2->refined[k];
  for (std::size_t k = 0; k < J2.size(); ++k) vplus[J2[k]] = s2->picks[k];
  for (std::size_t k = 0; k < I3.size(); ++k) b1[I3[k]] = s3->refined[k];
  for (std::size_t k = 0; k < I4.size(); ++k) a1[I4[k]] = s4->refined[k];

  // Q'_j = v-_j, Q_j, v+_j for j in J2.
  std::vector<Path> q;
  for (int j : J2) {
    Path p;
    if (vminus[j] != records[j].q.front()) p.vertices.push_back(vminus[j]);
    p.append(records[j].q);
    if (vplus[j] != records[j].q.back()) p.vertices.push_back(vplus[j]);
    q.push_back(std::move(p));
  }

  // Connectors from u+ (J3) to u- (J4), avoiding the rest of Z.
  std::vector<int> uplus = s3->picks, uminus = s4->picks;
  std::vector<Connector> connectors;
  std::vector<int> S;
  std::vector<int> used;
  const int budget = std::max(profile.connector_budget, 10);
  for (int c = 0; c < t_width; ++c) {
    std::vector<int> xs, ys;
    for (int v : uplus)
      if (!std::binary_search(used.begin(), used.end(), v) && static_cast<int>(xs.size()) < budget)
        xs.push_back(v);
    for (int v : uminus)
      if (!std::binary_search(used.begin(), used.end(), v) && static_cast<int>(ys.size()) < budget)
        ys.push_back(v);
    std::vector<int> terminals = sorted_union(uplus, uminus);
    std::vector<int> Y;
    std::set_difference(Z.begin(), Z.end(), terminals.begin(), terminals.end(),
                        std::back_inserter(Y));
    Y = sorted_union(Y, used);
    for (int v : xs) Y.erase(std::remove(Y.begin(), Y.end(), v), Y.end());
    opts.seed = profile.seed * 8 + 5 + static_cast<std::uint64_t>(c) * 1000;
    auto con = build_connector(t, Y, xs, ys, budget, opts);
    if (!con) return fail("single linker: connector " + std::to_string(c + 1), con.certificate());
    used = sorted_union(used, con->vertices);
    connectors.push_back(*con);
  }
  std::set_difference(used.begin(), used.end(), Z.begin(), Z.end(), std::back_inserter(S));

  // Half/half split on uncovered sizes.
  auto e_in = [&](int i) { return records[i].in.uncovered.size(); };
  auto e_out = [&](int i) { return records[i].out.uncovered.size(); };
  std::vector<int> c_in = I4, c_out = I3;
  std::stable_sort(c_in.begin(), c_in.end(), [&](int a, int b) { return e_in(a) > e_in(b); });
  std::stable_sort(c_out.begin(), c_out.end(), [&](int a, int b) { return e_out(a) > e_out(b); });
  std::vector<int> I6, I5;
  const int tw = t_width;
  if (e_in(c_in[tw - 1]) >= e_out(c_out[c_out.size() - tw])) {
    I6.assign(c_in.begin(), c_in.begin() + tw);
    I5.assign(c_out.end() - tw, c_out.end());
  } else {
    I6.assign(c_in.end() - tw, c_in.end());
    I5.assign(c_out.begin(), c_out.begin() + tw);
  }

  Linker base;
  for (int i : I6) {
    Dominator d = records[i].in;
    d.sets[0] = a1[i];
    d.sets[3] = a4[i];
    d.M = half;
    base.in.push_back(std::move(d));
  }
  for (int i : I5) {
    Dominator d = records[i].out;
    d.sets[0] = b1[i];
    d.sets[3] = b4[i];
    d.M = half;
    base.out.push_back(std::move(d));
  }
  base.connectors = connectors;
  base.q = q;
  base.exceptional = sorted_union(X, {});

  SingleLinker out;
  out.S = S;
  out.linker = with_exceptional(t, base, sorted_union(X, S), profile);
  out.base = std::move(base);
  const auto report = verify_linker(t, out.linker);
  if (!report.passed()) {
    Certificate c{"single linker: assembly", "assembled linker fails verification"};
    c.witness["clause"] = report.first_failure()->name;
    c.witness["detail"] = report.first_failure()->detail;
    return c;
  }
  return out;
}

LinkerBuild build_linkers(const Tournament& t, int k, int t_width, const ParamProfile& profile) {
  LinkerBuild out;
  if (k < 0) throw PreconditionError("build_linkers: k must be non-negative");
  if (k == 0) return out;
  profile.check();
  const auto t0 = std::chrono::steady_clock::now();
  const RecordPlan plan = record_plan(t_width, profile);
  const int records_needed = plan.r0 * k;
  out.stats["records_needed"] = records_needed;

  // Dominators with accumulating exceptional sets: all indominators, then
  // all outdominators.
  const DominatorParams dp = profile.dominator_params();
  std::vector<int> Y;
  std::vector<Dominator> ins, outs;
  for (Side side : {Side::kIn, Side::kOut})
    for (int i = 0; i < records_needed; ++i) {
      auto d = build_dominator(t, side, Y, dp);
      if (!d) {
        out.failure = fail(std::string("dominators: ") + to_string(side) + " " + std::to_string(i + 1),
                           d.certificate());
        out.stats["dominators_built"] = ins.size() + outs.size();
        return out;
      }
      Y = sorted_union(Y, d->exceptional);
      Y = sorted_union(Y, d->vertices());
      (side == Side::kIn ? ins : outs).push_back(std::move(*d));
    }
  const std::vector<int> X = Y;
  out.stats["dominator_seconds"] = seconds_since(t0);
  out.stats["X_after_dominators"] = X.size();
  for (auto* ds : {&ins, &outs})
    for (Dominator& d : *ds) d = retarget(t, d, X, profile);

  // Heads of indominators to tails of outdominators, avoiding every other
  // dominator vertex.
  std::vector<int> heads, tails, forbidden;
  for (const Dominator& d : ins) heads.push_back(d.head());
  for (const Dominator& d : outs) tails.push_back(d.tail());
  {
    std::vector<int> ends = sorted_union(heads, tails), dv;
    for (auto* ds : {&ins, &outs})
      for (const Dominator& d : *ds) dv = sorted_union(dv, d.vertices());
    std::set_difference(dv.begin(), dv.end(), ends.begin(), ends.end(), std::back_inserter(forbidden));
  }
  auto routing = menger_route(t, heads, tails, forbidden);
  if (!routing) {
    out.failure = fail("records: routing", routing.certificate());
    return out;
  }
  std::vector<LinkerRecord> records;
  for (int i = 0; i < records_needed; ++i)
    records.push_back({ins[i], outs[routing->sigma[i]], routing->system.paths[i]});

  // All records are needed, so the light subset is the whole list here;
  // Z collects their vertices.
  std::vector<int> Z;
  for (const LinkerRecord& h : records) {
    Z = sorted_union(Z, h.in.vertices());
    Z = sorted_union(Z, h.out.vertices());
    Z = sorted_union(Z, h.q.vertices);
  }
  out.stats["Z"] = Z.size();

  std::vector<int> Xg = X;
  std::vector<Linker> bases;
  for (int g = 0; g < k; ++g) {
    std::vector<LinkerRecord> group(records.begin() + g * plan.r0,
                                    records.begin() + (g + 1) * plan.r0);
    ParamProfile pg = profile;
    pg.seed = profile.seed + 7919ULL * static_cast<std::uint64_t>(g);
    auto single = build_single_linker(t, Xg, Z, group, t_width, pg);
    if (!single) {
      out.failure = fail("linker " + std::to_string(g + 1), single.certificate());
      break;
    }
    Xg = sorted_union(Xg, single->S);
    Z = sorted_union(Z, single->S);
    bases.push_back(single->base);
  }
  out.exceptional = Xg;
  for (const Linker& b : bases) out.linkers.push_back(with_exceptional(t, b, Xg, profile));
  for (std::size_t i = 0; i < out.linkers.size() && !out.failure; ++i) {
    const auto r = verify_linker(t, out.linkers[i]);
    if (!r.passed()) {
      Certificate c{"linkers: final verification", "linker fails with the common exceptional set"};
      c.witness["linker"] = i + 1;
      c.witness["clause"] = r.first_failure()->name;
      out.failure = c;
    }
  }
  out.stats["X"] = Xg.size();
  out.stats["seconds"] = seconds_since(t0);
  return out;
}

}  // namespace tourlink
