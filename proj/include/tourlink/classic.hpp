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

// Classical tournament and digraph routines: Hamiltonian cycles by
// insertion, Gallai-Milgram path covers, path splitting and disjoint-path
// routing by unit vertex-capacity flow.

#ifndef TOURLINK_CLASSIC_HPP_
#define TOURLINK_CLASSIC_HPP_

#include <optional>
#include <vector>

#include "tourlink/core.hpp"

namespace tourlink {

/// Hamiltonian cycle of a strong tournament, grown from a 3-cycle by
/// inserting one vertex or an out/in pair at a time. nullopt when the
/// tournament is not strongly connected.
std::optional<Path> moon_ham_cycle(const Tournament& t);

/// Hamiltonian path of the subtournament on `vertices` by binary-search
/// insertion (every tournament has one). Vertices are host ids.
Path tournament_ham_path(const Tournament& t, std::vector<int> vertices);

/// Vertex-disjoint paths covering the vertices of `within` (all of D when
/// null). The number of paths never exceeds the independence number of the
/// covered subdigraph: reductions continue until the path ends are
/// independent.
PathSystem gallai_milgram_cover(const WorkingDigraph& d,
                                const Bitset* within = nullptr);

/// At most k vertex-disjoint paths covering `within` (all of D when null).
/// Throws PreconditionError naming a vertex whose degree inside the covered
/// set is below |set| - k.
PathSystem cover_by_k_paths(const WorkingDigraph& d, int k,
                            const Bitset* within = nullptr);

/// Splits paths until there are exactly `target`, always cutting the
/// currently longest path (lowest index on ties) at its midpoint. The
/// suffix is inserted right after its prefix.
PathSystem split_paths(const PathSystem& ps, int target);

struct Routing {
  PathSystem system;
  /// Path i runs from sources[i] to sinks[sigma[i]].
  std::vector<int> sigma;
};

/// q vertex-disjoint paths from the sources to the sinks avoiding
/// `forbidden`. On failure the certificate witness holds a separating
/// vertex set of size below q under "cut".
Built<Routing> menger_route(const Tournament& t, const std::vector<int>& sources,
                            const std::vector<int>& sinks,
                            const std::vector<int>& forbidden);
Built<Routing> menger_route(const WorkingDigraph& d, const std::vector<int>& sources,
                            const std::vector<int>& sinks,
                            const std::vector<int>& forbidden);

}  // namespace tourlink

#endif  // TOURLINK_CLASSIC_HPP_
