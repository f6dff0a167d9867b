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


// Large-degree vertices, short paths between them, greedy transitive and
// greedy dominating sequences, and (m,M,p)-dominators.

#ifndef TOURLINK_DOMINATION_HPP_
#define TOURLINK_DOMINATION_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "tourlink/bitset.hpp"
#include "tourlink/core.hpp"
#include "tourlink/report.hpp"

namespace tourlink {

/// Exact rational in (0, 1), used for the large-degree threshold.
struct Ratio {
  std::int64_t num = 1;
  std::int64_t den = 25;
};

/// Vertices v such that fewer than fraction*n vertices have strictly larger
/// degree on `side`. Sorted ascending.
std::vector<int> large_degree_vertices(const Tournament& t, Side side,
                                       Ratio fraction = {});

struct ShortPaths {
  int count = 0;
  PathSystem family;  // internally disjoint u->v paths of length <= 3
};

/// Internally disjoint u->v paths of length at most three: the direct arc
/// when present, one path through each common vertex of N+(u) and N-(v),
/// and one path u->a->b->v per edge of a maximum matching between the
/// remaining out-neighbours of u and in-neighbours of v.
ShortPaths short_path_count(const Tournament& t, int u, int v);

/// Transitive sequence (tail first) obtained by repeatedly taking a
/// vertex of maximum out-degree inside the running common out-neighbourhood.
/// With `within`, the construction runs in that subtournament.
std::vector<int> greedy_transitive(const OrientedView& t,
                                   const Bitset* within = nullptr);
std::vector<int> greedy_transitive(const Tournament& t,
                                   const Bitset* within = nullptr);

struct GreedySequence {
  std::vector<int> vertices;
  std::vector<int> uncovered;
  Side orientation = Side::kIn;
  std::vector<int> restriction;
  /// True when the common neighbourhood ran empty before k steps.
  bool exhausted = false;
};

/// Partial greedy dominating sequence of length up to k inside
/// `restriction` (all vertices when null). For the in side each step takes
/// a maximum in-degree vertex of the current common out-neighbourhood; the
/// out side is the mirror image.
GreedySequence greedy_dominating_sequence(const Tournament& t, int k, Side side,
                                          const Bitset* restriction = nullptr);

/// Parameters of a dominator construction. In paper mode the
/// construction's preconditions are enforced; otherwise only the output is verified.
struct DominatorParams {
  int m = 3;
  int M = 4;
  double p = 4;
  std::int64_t L = 256;
  Ratio large_fraction{};
  bool paper = false;
};

/// Output of the predominator step, always expressed for the in side of
/// the view it was built on. `a` and `b` are in transitive order.
struct Predominator {
  std::vector<int> a;
  std::vector<int> b;
  std::vector<int> uncovered;
  std::vector<int> exceptional;
  /// 1 when the greedy sequence reached m+M vertices, 2 when it was
  /// completed from a transitive subtournament of X.
  int case_taken = 0;
};

/// Builds a predominator in the subtournament of `view` on `universe`.
Built<Predominator> build_predominator(const OrientedView& view,
                                       const Bitset& universe,
                                       const DominatorParams& params);
Built<Predominator> build_predominator(const Tournament& t,
                                       const DominatorParams& params);

/// Properties of a predominator inside `universe` of `view`. The
/// domination clause exempts B, which always lies in the common
/// out-neighbourhood of A. Expansion degrees are taken in the whole
/// universe.
VerificationReport verify_predominator(const OrientedView& view,
                                       const Bitset& universe,
                                       const Predominator& pd, int m, int M,
                                       std::int64_t L, double p);

/// An (m,M,p)-dominator with exceptional set X. Each of the four sets is
/// stored in the transitive order of the host (tail first); for an
/// outdominator they are B1..B4.
struct Dominator {
  Side orientation = Side::kIn;
  int m = 0;
  int M = 0;
  double p = 0;
  std::array<std::vector<int>, 4> sets;
  std::vector<int> uncovered;
  std::vector<int> exceptional;

  /// For an indominator the tail of A1 and the head of A4. For an
  /// outdominator the head is the head of B1 and the tail is the tail of B4.
  int tail() const;
  int head() const;
  std::vector<int> vertices() const;
};

Json to_json(const Dominator& d);
Dominator dominator_from_json(const Json& j);

/// Constructs a dominator avoiding Y on the given side. The returned
/// dominator's exceptional set contains Y.
Built<Dominator> build_dominator(const Tournament& t, Side side,
                                 const std::vector<int>& Y,
                                 const DominatorParams& params);

/// Clauses (D1)-(D6), evaluated in the host (T \ X) together with V(D).
VerificationReport verify_dominator(const Tournament& t, const Dominator& d);

/// True when the four sets are layered: every vertex of a set beats (for
/// the in side) every vertex of the next set and each set is transitive in
/// its stored order. Constructions here always produce layered dominators.
bool is_layered(const Tournament& t, const Dominator& d);

/// Replaces X by Y and halves p.
Dominator enlarge_exceptional(const Tournament& t, const Dominator& d,
                              const std::vector<int>& Y);

}  // namespace tourlink

#endif  // TOURLINK_DOMINATION_HPP_
