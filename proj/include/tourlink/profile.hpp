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


// Parameter profiles. The paper profile carries the exact constants and is
// only ever audited; the desk profile carries small searchable values and
// every construction made with it is verified after the fact.

#ifndef TOURLINK_PROFILE_HPP_
#define TOURLINK_PROFILE_HPP_

#include <cstdint>
#include <string>

#include "tourlink/domination.hpp"

namespace tourlink {

enum class ProfileMode { kPaper, kDesk };

struct ParamProfile {
  ProfileMode mode = ProfileMode::kDesk;
  // Dominator parameters of the records a linker is cut from. The linker
  // keeps half of A1 and A4, so M = 2m gives layers of m vertices.
  int m = 5;
  int M = 10;
  double p = 16;
  std::int64_t L = 40;
  int t = 1;
  int connector_budget = 12;
  int restart_budget = 64;
  // Desk hosts run out of large-degree vertices long before n/25 are
  // used, so the desk default widens the pool to the top quarter.
  Ratio large_fraction{1, 4};
  int connector_cap = 40;
  int paths_cap_factor = 100;
  int extras_cap = 6;
  // Desk only. Each index selection asks for ramsey_slack * (|I| + |J|)
  // candidates instead of a Ramsey number.
  double ramsey_slack = 1.0;
  // Desk only. Linkers per round of the decomposition; 0 means one per
  // path of the round's cover.
  int family_size = 0;
  std::uint64_t seed = 1;

  static ParamProfile paper();
  static ParamProfile desk();
  bool is_paper() const { return mode == ProfileMode::kPaper; }
  DominatorParams dominator_params() const;
  /// Throws PreconditionError when a paper-mode inequality fails.
  void check() const;
};

ProfileMode parse_profile_mode(const std::string& name);
const char* to_string(ProfileMode mode);

}  // namespace tourlink

#endif  // TOURLINK_PROFILE_HPP_
