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


// The constants audit. Everything derived from R0 is kept as an exact
// affine form in R0, and an inequality between two forms is decided for
// every R0 at or above a proven lower bound: the R0 coefficient of the
// difference must be non-negative and the difference must be non-negative
// at the bound.

#include <cmath>
#include <map>

#include "tourlink/pipeline.hpp"

namespace tourlink {

std::string AffineR0::str() const {
  if (a == 0) return b.str();
  std::string s = (a == 1 ? std::string() : a.str() + "*") + "R0";
  if (b > 0) s += " + " + b.str();
  if (b < 0) s += " - " + BigInt(-b).str();
  return s;
}

AffineR0 operator+(const AffineR0& x, const AffineR0& y) { return {x.a + y.a, x.b + y.b}; }
AffineR0 operator-(const AffineR0& x, const AffineR0& y) { return {x.a - y.a, x.b - y.b}; }
AffineR0 operator*(const BigInt& c, const AffineR0& x) { return {c * x.a, c * x.b}; }

namespace {

AffineR0 constant(const BigInt& v) { return {0, v}; }
BigInt pow2(unsigned e) { return BigInt(1) << e; }

BigInt binomial(int n, int r) {
  BigInt v = 1;
  for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
  return v;
}

BigInt canonical_max_degree() {
  const auto c = canonical_linker(12, 1, CanonicalShape{8, 1, 0});
  std::map<int, int> deg;
  for (auto [u, v] : linker_arcs(c.host, c.linker)) {
    ++deg[u];
    ++deg[v];
  }
  int best = 0;
  for (auto [v, d] : deg) best = std::max(best, d);
  return best;
}

}  // namespace

bool ConstantsAudit::holds(const AuditCheck& c) const {
  if (c.rel == Relation::kEqual) return c.lhs == c.rhs;
  const AffineR0 diff = c.rhs - c.lhs;
  return diff.a >= 0 && diff.a * r0_lower + diff.b >= 0;
}

bool ConstantsAudit::passed() const {
  for (const AuditCheck& c : checks)
    if (!holds(c) || !c.recorded) return false;
  return !checks.empty();
}

Json ConstantsAudit::to_json() const {
  Json j;
  j["k"] = k;
  j["mode"] = to_string(profile.mode);
  j["m"] = profile.m;
  j["M"] = profile.M;
  j["p"] = profile.p;
  j["L"] = profile.L;
  j["t"] = profile.t;
  j["Delta1"] = delta1.str();
  j["L_threshold"] = l_threshold.str();
  j["R0_lower_bound"] = r0_lower.str();
  j["R0"] = r0_formula;
  j["C1_records"] = c1_records.str();
  j["C0"] = c0.str();
  j["C1"] = c1.str();
  j["C"] = c.str();
  j["K"] = big_k.str();
  j["N"] = n_tower;
  j["ramsey_formula"] = ramsey_formula;
  Json r = Json::array();
  for (const auto& [name, bound] : ramsey) r.push_back({{"name", name}, {"value", bound}});
  j["ramsey"] = r;
  Json cs = Json::array();
  for (const AuditCheck& c : checks)
    cs.push_back({{"name", c.name},
                  {"lhs", c.lhs.str()},
                  {"relation", c.rel == Relation::kEqual ? "==" : "<="},
                  {"rhs", c.rhs.str()},
                  {"pass", holds(c)}});
  j["checks"] = cs;
  j["passed"] = passed();
  return j;
}

ConstantsAudit audit_constants(int k, const ParamProfile& profile) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  ConstantsAudit a;
  a.k = k;
  a.profile = profile;
  const BigInt kk = k, t = profile.t, m = profile.m;
  a.delta1 = canonical_max_degree();
  a.l_threshold = pow2(static_cast<unsigned>(profile.m + profile.M));
  a.n_tower = "100·2^(2^(2^(2^10)))";

  // Record counts of the single-linker construction. Lower bounds use
  // N >= 100 * 2^(2^10), which the tower clears by far, and R(m, a, b) >= a + b
  // since I and J are disjoint subsets of [R].
  const BigInt n_lower = 100 * pow2(1024);
  const BigInt r3j = n_lower + 40 * t, r4j = r3j, r2j = 5 * t, r3i = 2 * t, r4i = 2 * t;
  const BigInt r2i = r3i + r3j, r1i = r4i + r4j, r1j = r2i + r2j;
  a.r0_lower = r1i + r1j;

  const BigInt colours = 2 * m * binomial(2 * profile.m, profile.m);
  const std::string c = colours.str();
  auto bound = [&](const std::string& exponent) {
    return "<= " + c + "^(" + c + "·2^(" + exponent + "))";
  };
  a.ramsey_formula = "R(m,a,b) = R_c(2^(a+b)) with c = 2m·binom(2m,m) = " + c +
                     " colours; R_c(s) <= c^(c·s)";
  a.ramsey = {
      {"R^J_3 = R^J_4", "N + " + BigInt(40 * t).str()},
      {"R^I_3 = R^I_4", r3i.str()},
      {"R^J_2", r2j.str()},
      {"R^I_2 = R^I_1", bound(r3i.str() + " + N + " + BigInt(40 * t).str())},
      {"R^J_1", bound("R^I_2 + " + r2j.str())},
      {"R_0", bound("R^I_1 + R^J_1")},
  };
  a.r0_formula = a.ramsey.back().second;

  const AffineR0 r0{1, 0};
  a.c1_records = BigInt(50) * (r0 + constant(40 * t));
  a.c0 = pow2(32) * a.c1_records;
  a.c1 = (8300 * a.delta1) * a.c0;
  a.c = (a.delta1 + 2) * a.c1;
  a.big_k = (100 * a.delta1 * kk) * a.c0;

  auto le = [&](std::string name, AffineR0 lhs, AffineR0 rhs) {
    a.checks.push_back({std::move(name), lhs, Relation::kLessEq, rhs});
  };
  auto eq = [&](std::string name, AffineR0 stored, AffineR0 recomputed) {
    a.checks.push_back({std::move(name), stored, Relation::kEqual, recomputed});
  };
  const AffineR0 d1 = constant(a.delta1);
  le("L >= 2^(m+M)", constant(a.l_threshold), constant(profile.L));
  le("L >= 2^(m+M) + m + M", constant(a.l_threshold + profile.m + profile.M), constant(profile.L));
  le("p <= 2^(m-1)", constant(BigInt(static_cast<long long>(std::ceil(profile.p)))),
     constant(pow2(static_cast<unsigned>(profile.m - 1))));
  le("t >= 12", constant(12), constant(t));
  le("K/5 >= t", constant(5 * t), a.big_k);
  eq("C1 = 50(R0 + 40t)", a.c1_records, BigInt(50) * r0 + constant(2000 * t));
  eq("C0 = 2^32 C1", a.c0, pow2(32) * a.c1_records);
  le("C0 - 96 C1 >= C1", a.c1_records, a.c0 - BigInt(96) * a.c1_records);
  eq("R0 k = C1 k/50 - 40tk", BigInt(50) * (kk * r0 + constant(40 * t * kk)), kk * a.c1_records);
  le("2^26 C1 k <= |T|/25 - 2^(2m+2M) at |T| = C0 k",
     BigInt(25) * ((pow2(26) * kk) * a.c1_records +
                   constant(pow2(static_cast<unsigned>(2 * profile.m + 2 * profile.M)))),
     kk * a.c0);
  le("2(|X| + 40t) <= C0 k with |X| <= 2^26 C1 k",
     BigInt(2) * ((pow2(26) * kk) * a.c1_records + constant(40 * t)), kk * a.c0);
  le("|X_k| <= 2^27 C1 k", (pow2(26) * kk) * a.c1_records + constant(40 * t * kk),
     (pow2(27) * kk) * a.c1_records);
  le("2^27 C1 k <= C0 k", (pow2(27) * kk) * a.c1_records, kk * a.c0);
  eq("C1' = 8300 Delta1 C0", a.c1, (8300 * a.delta1) * a.c0);
  eq("C = (Delta1 + 2) C1'", a.c, (a.delta1 + 2) * a.c1);
  eq("K = 100 Delta1 C0 k", a.big_k, (100 * a.delta1) * (kk * a.c0));
  le("104tk <= K/2", constant(208 * t * kk), a.big_k);
  le("(C1' - 50 Delta1 C0) k >= 82 K", BigInt(82) * a.big_k,
     kk * (a.c1 - (50 * a.delta1) * a.c0));
  le("Delta1 + 2k <= 100 Delta1 (Delta1 + 2) k^2", constant(a.delta1 + 2 * kk),
     constant(100 * a.delta1 * (a.delta1 + 2) * kk * kk));
  le("Delta1 + 2k <= (Delta1 + 2) k", constant(a.delta1 + 2 * kk), constant((a.delta1 + 2) * kk));
  le("C1' (Delta1 + 2) k^2 <= C k^2", (a.delta1 + 2) * (kk * kk) * a.c1, (kk * kk) * a.c);

  for (AuditCheck& ch : a.checks) ch.recorded = a.holds(ch);
  return a;
}

}  // namespace tourlink
