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


// Connectors, index selection, t-linkers, the Hamiltonian weave through a
// linker and the rerouting step that turns a family of linkers into a
// linking family.
//
// Terminology used below. In a linker the essential vertices are those of
// its dominators and connectors, the path vertices are those of its Q
// paths. Indominators carry sets A1..A4 and outdominators B1..B4, always
// stored tail first in the host's transitive order.

#ifndef TOURLINK_LINKAGE_HPP_
#define TOURLINK_LINKAGE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tourlink/core.hpp"
#include "tourlink/domination.hpp"
#include "tourlink/profile.hpp"

namespace tourlink {

// ---------------------------------------------------------------- connectors

/// At most 40 vertices with sources x1..x5 and sinks y1..y5 that can be
/// covered both by 4 and by 5 disjoint xi->yi paths. The two covers are
/// kept as witnesses.
struct Connector {
  std::vector<int> vertices;  // sorted
  std::array<int, 5> sources{};
  std::array<int, 5> sinks{};
  PathSystem witness4;
  PathSystem witness5;
};

VerificationReport verify_connector(const Tournament& t, const Connector& c);

Json to_json(const Connector& c);
Connector connector_from_json(const Json& j);

struct SearchOptions {
  int restarts = 64;
  std::uint64_t seed = 1;
};

/// Routes disjoint xi->yi paths with at most 3 arcs avoiding Y, keeps the
/// most common path length, searches for 10 indices whose paths are
/// transitive at every position, then peels heads and tails into a
/// connector. Restarts reshuffle the pairing and the search order.
Built<Connector> build_connector(const Tournament& t, const std::vector<int>& Y,
                                 const std::vector<int>& xs,
                                 const std::vector<int>& ys, int budget,
                                 const SearchOptions& opts = {});

// ---------------------------------------------------------- index selection

/// kToward asks for arcs from refined(i) to pick(j); kFrom for the reverse.
enum class Direction { kToward, kFrom };

struct RamseySelection {
  std::vector<int> I;
  std::vector<int> J;
  /// refined[a] is an m-subset of sets[I[a]] in its stored order.
  std::vector<std::vector<int>> refined;
  /// picks[b] is a vertex of sets[J[b]].
  std::vector<int> picks;
};

/// Finds t indices I and l indices J with m-subsets of the I-sets and one
/// vertex of each J-set, all arcs between them oriented by `dir`. The I
/// side is taken from the sources of the index order.
Built<RamseySelection> ramsey_select(const Tournament& t,
                                     const std::vector<std::vector<int>>& sets,
                                     int m, int count_i, int count_j,
                                     Direction dir, const SearchOptions& opts = {});

// ------------------------------------------------------------------ linkers

struct Linker {
  std::vector<Dominator> in;   // A1..A4 each
  std::vector<Dominator> out;  // B1..B4 each
  std::vector<Connector> connectors;
  std::vector<Path> q;         // 5t paths
  std::vector<int> exceptional;

  int t() const { return static_cast<int>(in.size()); }
  std::vector<int> essential_vertices() const;  // sorted
  std::vector<int> path_vertices() const;       // sorted
  std::vector<int> vertices() const;            // sorted
};

/// (L1)-(L5), each dominator by verify_dominator and each connector by
/// verify_connector.
VerificationReport verify_linker(const Tournament& t, const Linker& l);

Json to_json(const Linker& l);
Linker linker_from_json(const Json& j);

/// Every arc the linker is made of: all arcs inside a dominator or a
/// connector, the arcs of the Q paths and the (L5) arcs.
std::vector<std::pair<int, int>> linker_arcs(const Tournament& t, const Linker& l);

struct CanonicalShape {
  int layer = 8;      // vertices in each of A1..A4 and B1..B4
  int q_length = 1;   // arcs per Q path
  int slack = 4;      // extra host vertices outside the linker
};

struct CanonicalLinker {
  Tournament host;
  Linker linker;
};

/// A host built around a t-linker: layered transitive dominators,
/// transitive 10-vertex connectors, short Q paths, every (L5) arc and
/// every domination arc forced, the remaining arcs drawn from the seed.
CanonicalLinker canonical_linker(int t, std::uint64_t seed,
                                 const CanonicalShape& shape = {});

/// Hamiltonian path of V(L) from x to y using arcs of L only. x lies in an
/// indominator; y lies in an outdominator, or for t = 1 may be a sink of
/// the connector. Throws PreconditionError on bad endpoints and
/// std::logic_error if the dominators are too thin to weave (fewer than
/// five vertices in a set, or not layered).
Path linker_ham_path(const Tournament& t, const Linker& l, int x, int y);

/// The entry and exit the linking step tries first: the first core vertex
/// of the first indominator and the last core vertex of the first
/// outdominator. Reversing the linker swaps the two.
int planned_entry(const Linker& l);
int planned_exit(const Linker& l);
/// linker_ham_path between the planned entry and exit.
Path planned_weave(const Tournament& t, const Linker& l);

// ------------------------------------------------------ linker construction

/// An indominator, an outdominator and a Q path from the head of the first
/// to the tail of the second.
struct LinkerRecord {
  Dominator in;
  Dominator out;
  Path q;
};

/// Index-set sizes for one single-linker construction.
struct RecordPlan {
  int i6 = 0, i5 = 0;
  int i4 = 0, j4 = 0;
  int i3 = 0, j3 = 0;
  int i2 = 0, j2 = 0;
  int i1 = 0, j1 = 0;
  int r0 = 0;
};

RecordPlan record_plan(int t, const ParamProfile& profile);

struct SingleLinker {
  /// Exceptional set X u S, p halved once more than in `base`.
  Linker linker;
  std::vector<int> S;
  /// The same linker with exceptional set X, before the halving. Any
  /// larger exceptional set is applied to this one.
  Linker base;
};

Built<SingleLinker> build_single_linker(const Tournament& t,
                                        const std::vector<int>& X,
                                        const std::vector<int>& Z,
                                        const std::vector<LinkerRecord>& records,
                                        int t_width, const ParamProfile& profile);

/// Re-targets every dominator of `base` to the exceptional set Y.
Linker with_exceptional(const Tournament& t, const Linker& base,
                        const std::vector<int>& Y, const ParamProfile& profile);

struct LinkerBuild {
  std::vector<Linker> linkers;
  std::vector<int> exceptional;
  std::optional<Certificate> failure;
  /// Construction statistics (record counts, sizes, timings in stages).
  Json stats = Json::object();

  bool ok() const { return !failure.has_value(); }
};

/// k vertex-disjoint t-linkers with a common exceptional set. On failure
/// the linkers finished so far are returned with the certificate.
LinkerBuild build_linkers(const Tournament& t, int k, int t_width,
                          const ParamProfile& profile);

// ------------------------------------------------------------------ linking

struct LinkStepResult {
  Path path;                   // x -> y
  PathSystem rerouted;         // same endpoints as the input paths
  std::vector<Linker> residual;
  std::vector<int> extra_vertices;
  /// 'a'..'d', the case of the escalation that produced the path.
  char link_case = 'a';
};

/// Joins x to y through L while rerouting the paths of P; see the cases in
/// the implementation. D must contain every arc of L.
Built<LinkStepResult> link_through(const WorkingDigraph& d, const Linker& l,
                                   int x, int y, const PathSystem& p,
                                   const ParamProfile& profile = {});

/// One step of the linking-family property for family = {L_1..L_k}: the
/// last linker does the joining and the Q paths of the others are
/// protected. The residual family has k-1 linkers with updated Q paths.
Built<LinkStepResult> linking_family_step(const WorkingDigraph& d,
                                          const std::vector<Linker>& family,
                                          int x, int y, const PathSystem& p,
                                          const ParamProfile& profile = {});

/// Checks clauses (i)-(iii) of a linking step: the path runs x->y, every
/// rerouted path keeps its endpoints, everything is disjoint, and the
/// vertex union equals inputs + {x,y} + extras.
VerificationReport verify_link_step(const WorkingDigraph& d,
                                    const std::vector<Linker>& family,
                                    int x, int y, const PathSystem& p,
                                    const LinkStepResult& r);

}  // namespace tourlink

#endif  // TOURLINK_LINKAGE_HPP_
