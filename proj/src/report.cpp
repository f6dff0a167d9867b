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

#include "tourlink/report.hpp"

#include <algorithm>

namespace tourlink {

void VerificationReport::merge(const VerificationReport& other,
                               const std::string& prefix) {
  for (const auto& c : other.clauses_)
    clauses_.push_back({prefix + c.name, c.passed, c.detail});
}

bool VerificationReport::passed() const {
  return std::all_of(clauses_.begin(), clauses_.end(),
                     [](const Clause& c) { return c.passed; });
}

std::optional<Clause> VerificationReport::first_failure() const {
  for (const auto& c : clauses_)
    if (!c.passed) return c;
  return std::nullopt;
}

bool VerificationReport::failed(const std::string& name) const {
  return std::any_of(clauses_.begin(), clauses_.end(), [&](const Clause& c) {
    return c.name == name && !c.passed;
  });
}

Json VerificationReport::to_json() const {
  Json j;
  j["subject"] = subject_;
  j["passed"] = passed();
  Json cs = Json::array();
  for (const auto& c : clauses_) {
    Json e;
    e["clause"] = c.name;
    e["passed"] = c.passed;
    if (!c.detail.empty()) e["detail"] = c.detail;
    cs.push_back(std::move(e));
  }
  j["clauses"] = std::move(cs);
  return j;
}

std::string VerificationReport::summary() const {
  std::string out = subject_ + (passed() ? ": PASS" : ": FAIL");
  if (auto f = first_failure()) out += " [" + f->name + ": " + f->detail + "]";
  return out;
}

Json Certificate::to_json() const {
  Json j;
  j["stage"] = stage;
  j["reason"] = reason;
  j["witness"] = witness;
  return j;
}

}  // namespace tourlink
