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


#include "doctest.h"
#include "tourlink/pipeline.hpp"

using namespace tourlink;

namespace {

BigInt pow2(unsigned e) { return BigInt(1) << e; }

AffineR0 form(const BigInt& a, const BigInt& b) {
  AffineR0 f;
  f.a = a;
  f.b = b;
  return f;
}

const AuditCheck* find_check(const ConstantsAudit& a, const std::string& name) {
  for (const auto& c : a.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("AffineR0 arithmetic and printing") {
  const AffineR0 x = form(3, -7), y = form(2, 10);
  CHECK(x + y == form(5, 3));
  CHECK(x - y == form(1, -17));
  CHECK(BigInt(4) * x == form(12, -28));
  CHECK(form(1, 0).str() == "R0");
  CHECK(form(50, 24000).str() == "50*R0 + 24000");
  CHECK(form(2, -5).str() == "2*R0 - 5");
}

TEST_CASE("audit_constants recomputed by hand for the paper profile") {
  for (int k = 1; k <= 10; ++k) {
    CAPTURE(k);
    const ConstantsAudit a = audit_constants(k);
    CHECK(a.passed());
    for (const auto& c : a.checks) {
      CAPTURE(c.name);
      CHECK(a.holds(c));
      CHECK(c.recorded);
    }
    CHECK(a.delta1 == 105);
    CHECK(a.l_threshold == pow2(24));
    // C1 = 50 R0 + 50 * 40 * 12, then each constant scales the previous.
    const BigInt c1a = 50, c1b = 24000;
    CHECK(a.c1_records == form(c1a, c1b));
    const BigInt c0a = pow2(32) * c1a, c0b = pow2(32) * c1b;
    CHECK(a.c0 == form(c0a, c0b));
    CHECK(a.c1 == form(8300 * 105 * c0a, 8300 * 105 * c0b));
    CHECK(a.c == form(107 * 8300 * 105 * c0a, 107 * 8300 * 105 * c0b));
    CHECK(a.big_k == form(100 * 105 * k * c0a, 100 * 105 * k * c0b));
    CHECK(a.n_tower == "100·2^(2^(2^(2^10)))");
  }
  const Json j = audit_constants(3).to_json();
  CHECK(j["passed"] == true);
  CHECK(j["C0"] == "214748364800*R0 + 103079215104000");
  CHECK(j["checks"].size() == audit_constants(3).checks.size());
  CHECK_THROWS_AS(audit_constants(0), PreconditionError);
}

TEST_CASE("audit_constants flags profiles that break the constraints") {
  ParamProfile small = ParamProfile::paper();
  small.m = 8;
  small.M = 8;
  small.L = (1 << 16) + 16;
  const ConstantsAudit ok = audit_constants(2, small);
  CHECK(ok.l_threshold == 65536);
  CHECK(ok.passed());

  // Building a dominator needs m + M spare vertices on top of 2^(m+M).
  small.L = 1 << 16;
  const ConstantsAudit tight = audit_constants(2, small);
  CHECK(tight.holds(*find_check(tight, "L >= 2^(m+M)")));
  CHECK_FALSE(tight.holds(*find_check(tight, "L >= 2^(m+M) + m + M")));

  small.L = (1 << 16) - 1;
  const ConstantsAudit short_l = audit_constants(2, small);
  CHECK_FALSE(short_l.passed());
  REQUIRE(find_check(short_l, "L >= 2^(m+M)"));
  CHECK_FALSE(short_l.holds(*find_check(short_l, "L >= 2^(m+M)")));

  ParamProfile narrow = ParamProfile::paper();
  narrow.t = 4;
  const ConstantsAudit thin = audit_constants(2, narrow);
  CHECK_FALSE(thin.passed());
  CHECK_FALSE(thin.holds(*find_check(thin, "t >= 12")));

  const ConstantsAudit desk = audit_constants(1, ParamProfile{});
  CHECK_FALSE(desk.passed());
}
