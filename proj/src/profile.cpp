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


#include "tourlink/profile.hpp"

#include <cmath>

namespace tourlink {

ParamProfile ParamProfile::paper() {
  ParamProfile p;
  p.mode = ProfileMode::kPaper;
  p.m = 8;
  p.M = 16;
  p.p = 64;
  p.L = (std::int64_t{1} << 24) + 24;
  p.t = 12;
  p.connector_budget = -1;  // N is astronomical; audit only
  p.large_fraction = {1, 25};
  return p;
}

ParamProfile ParamProfile::desk() { return ParamProfile{}; }

DominatorParams ParamProfile::dominator_params() const {
  DominatorParams d;
  d.m = m;
  d.M = M;
  d.p = p;
  d.L = L;
  d.large_fraction = large_fraction;
  d.paper = is_paper();
  return d;
}

void ParamProfile::check() const {
  if (m < 1 || M < 1 || t < 1) throw PreconditionError("profile: m, M and t must be positive");
  if (!is_paper()) return;
  if (m + M < 62 && L < (std::int64_t{1} << (m + M)))
    throw PreconditionError("paper profile: L must be at least 2^(m+M)");
  if (p > std::ldexp(1.0, m - 1))
    throw PreconditionError("paper profile: p must be at most 2^(m-1)");
  if (t < 12) throw PreconditionError("paper profile: t must be at least 12");
}

ProfileMode parse_profile_mode(const std::string& name) {
  if (name == "paper") return ProfileMode::kPaper;
  if (name == "desk") return ProfileMode::kDesk;
  throw PreconditionError("unknown profile '" + name + "' (expected paper or desk)");
}

const char* to_string(ProfileMode mode) {
  return mode == ProfileMode::kPaper ? "paper" : "desk";
}

}  // namespace tourlink
