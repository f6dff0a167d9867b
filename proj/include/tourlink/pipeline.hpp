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


// Assembly: Hamiltonian cycles from a path partition plus a linking family,
// k edge-disjoint Hamiltonian cycles, k-linkage routing, and the audit of
// the constants behind the connectivity bounds.

#ifndef TOURLINK_PIPELINE_HPP_
#define TOURLINK_PIPELINE_HPP_

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tourlink/linkage.hpp"

namespace tourlink {

/// Closes a partition of D into k paths and k linkers into one Hamiltonian
/// cycle. Linker j joins the end of path j-1 to the start of path j (indices
/// mod k); the last linker is spent first. Throws PreconditionError when
/// the inputs do not partition V(D) or the counts differ.
Built<Path> ham_cycle_from_partition(const WorkingDigraph& d, const PathSystem& paths,
                                     const std::vector<Linker>& family,
                                     const ParamProfile& profile = {});

/// Moves path ends onto vertices the adjacent linkers can reach directly,
/// re-inserting the skipped vertices into the interior of the path. Returns
/// nullopt when no such rearrangement is found.
std::optional<Path> repair_ends(const WorkingDigraph& d, const Path& q,
                                const std::function<bool(int)>& good_start,
                                const std::function<bool(int)>& good_end);

struct Decomposition {
  std::vector<Path> cycles;  // the cycles finished before any failure
  std::optional<Certificate> failure;
  Json stats = Json::object();
  bool ok() const { return !failure.has_value(); }
};

/// k pairwise edge-disjoint Hamiltonian cycles. Builds k rounds of linking
/// families up front; round l works in T minus the arcs of later rounds'
/// linkers and of the cycles already found.
Decomposition edge_disjoint_ham_cycles(const Tournament& t, int k, const ParamProfile& profile);

/// Vertex-disjoint x_i -> y_i paths for distinct endpoints, one linking
/// step per pair with the unrouted endpoints held as singleton paths.
Built<PathSystem> link_pairs(const Tournament& t, const std::vector<std::pair<int, int>>& pairs,
                             const ParamProfile& profile);

VerificationReport verify_decomposition(const Tournament& t, const std::vector<Path>& cycles);

// ---------------------------------------------------------------- audit

using BigInt = boost::multiprecision::cpp_int;

/// a*R0 + b, exact. R0 is the record count of the single-linker construction, a
/// Ramsey tower far beyond any integer type, so every constant built from
/// it is carried in this form.
struct AffineR0 {
  BigInt a = 0;
  BigInt b = 0;
  std::string str() const;
  friend bool operator==(const AffineR0&, const AffineR0&) = default;
};

AffineR0 operator+(const AffineR0& x, const AffineR0& y);
AffineR0 operator-(const AffineR0& x, const AffineR0& y);
AffineR0 operator*(const BigInt& c, const AffineR0& x);

enum class Relation { kLessEq, kEqual };

struct AuditCheck {
  std::string name;
  AffineR0 lhs;
  Relation rel = Relation::kLessEq;
  AffineR0 rhs;
  bool recorded = false;  // the verdict when the check was made
};

struct ConstantsAudit {
  int k = 0;
  ParamProfile profile;
  BigInt delta1;        // maximum degree of the canonical 12-linker
  BigInt l_threshold;   // 2^(m+M)
  BigInt r0_lower;      // proven lower bound on R0
  std::string r0_formula;
  AffineR0 c1_records;  // C1 = 50(R0 + 40t)
  AffineR0 c0;          // C0 = 2^32 C1
  AffineR0 c1;          // C1' = 8300 Delta1 C0
  AffineR0 c;           // C = (Delta1 + 2) C1'
  AffineR0 big_k;       // K = 100 Delta1 C0 k
  std::string n_tower;
  std::vector<std::pair<std::string, std::string>> ramsey;  // name, upper bound
  std::string ramsey_formula;
  std::vector<AuditCheck> checks;

  /// Re-evaluates every check from the stored forms.
  bool holds(const AuditCheck& c) const;
  bool passed() const;
  Json to_json() const;
};

ConstantsAudit audit_constants(int k, const ParamProfile& profile = ParamProfile::paper());

}  // namespace tourlink

#endif  // TOURLINK_PIPELINE_HPP_
