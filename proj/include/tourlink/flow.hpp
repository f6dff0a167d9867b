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

#ifndef TOURLINK_FLOW_HPP_
#define TOURLINK_FLOW_HPP_

#include <functional>
#include <limits>
#include <vector>

#include "tourlink/bitset.hpp"
#include "tourlink/core.hpp"

namespace tourlink {

/// Max-flow over a dense digraph with capacities on vertices, computed by
/// BFS augmentation on the vertex-split residual graph. Every vertex v is
/// split into v_in -> v_out with capacity cap(v) (default 1); every arc
/// v_out -> w_in is uncapacitated. A super-source feeds the sources' v_in
/// and the sinks' v_out drain into a super-sink.
///
/// Neighbourhoods are read row-at-a-time through `rows`, so the host can be
/// a tournament, a working digraph or a reversed view without copying.
class VertexFlow {
 public:
  static constexpr int kInf = std::numeric_limits<int>::max() / 4;
  using RowFn = std::function<void(int v, Bitset& out_neighbours)>;

  VertexFlow(int n, RowFn rows, Bitset allowed);

  void set_capacity(int v, int cap) { cap_[v] = cap; }
  void add_source(int v, int cap = 1) { src_cap_[v] = cap; }
  void add_sink(int v, int cap = 1) { snk_cap_[v] = cap; }
  /// Excludes a single arc (used to drop the direct u->v arc when counting
  /// internally disjoint paths).
  void forbid_arc(int u, int v) { forbidden_u_ = u; forbidden_v_ = v; }

  /// Augments until the flow value reaches `limit` or no augmenting path
  /// exists. Returns the flow value.
  int run(int limit = kInf);
  int value() const { return value_; }

  /// Flow decomposition; valid when all capacities on the paths are 1.
  std::vector<Path> paths() const;
  /// Minimum vertex cut separating sources from sinks (size == value()).
  /// Only meaningful after run() stopped below its limit.
  std::vector<int> min_cut() const;

 private:
  bool augment();
  void bfs(std::vector<int>& par_in, std::vector<int>& par_out,
           bool& reached_sink, int& sink_vertex) const;

  int n_;
  RowFn rows_;
  Bitset allowed_;
  std::vector<int> cap_, used_, src_cap_, src_flow_, snk_cap_, snk_flow_;
  std::vector<int> pred_, succ_;
  int forbidden_u_ = -1, forbidden_v_ = -1;
  int value_ = 0;
};

}  // namespace tourlink

#endif  // TOURLINK_FLOW_HPP_
