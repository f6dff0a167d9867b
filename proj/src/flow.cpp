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

#include "tourlink/flow.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

namespace tourlink {
namespace {

constexpr int kSuperSource = -2;
constexpr int kUnseen = -1;

int in_node(int v) { return 2 * v; }
int out_node(int v) { return 2 * v + 1; }
int node_vertex(int node) { return node >> 1; }
bool is_out(int node) { return node & 1; }

}  // namespace

VertexFlow::VertexFlow(int n, RowFn rows, Bitset allowed)
    : n_(n),
      rows_(std::move(rows)),
      allowed_(std::move(allowed)),
      cap_(n, 1),
      used_(n, 0),
      src_cap_(n, 0),
      src_flow_(n, 0),
      snk_cap_(n, 0),
      snk_flow_(n, 0),
      pred_(n, -1),
      succ_(n, -1) {}

void VertexFlow::bfs(std::vector<int>& par_in, std::vector<int>& par_out,
                     bool& reached_sink, int& sink_vertex) const {
  par_in.assign(n_, kUnseen);
  par_out.assign(n_, kUnseen);
  reached_sink = false;
  Bitset seen_in(n_);
  Bitset row(n_);
  std::deque<int> queue;
  for (int s = 0; s < n_; ++s) {
    if (src_cap_[s] > src_flow_[s] && allowed_.test(s)) {
      par_in[s] = kSuperSource;
      seen_in.set(s);
      queue.push_back(in_node(s));
    }
  }
  while (!queue.empty()) {
    const int node = queue.front();
    queue.pop_front();
    const int v = node_vertex(node);
    if (!is_out(node)) {
      if (used_[v] < cap_[v] && par_out[v] == kUnseen) {
        par_out[v] = node;
        queue.push_back(out_node(v));
      }
      const int p = pred_[v];
      if (p >= 0 && par_out[p] == kUnseen) {
        par_out[p] = node;
        queue.push_back(out_node(p));
      }
      continue;
    }
    if (snk_cap_[v] > snk_flow_[v]) {
      reached_sink = true;
      sink_vertex = v;
      return;
    }
    if (used_[v] > 0 && par_in[v] == kUnseen) {
      par_in[v] = node;
      seen_in.set(v);
      queue.push_back(in_node(v));
    }
    rows_(v, row);
    row &= allowed_;
    row.subtract(seen_in);
    row.for_each([&](int w) {
      if (v == forbidden_u_ && w == forbidden_v_) return;
      par_in[w] = node;
      seen_in.set(w);
      queue.push_back(in_node(w));
    });
  }
}

bool VertexFlow::augment() {
  std::vector<int> par_in, par_out;
  bool reached = false;
  int t = -1;
  bfs(par_in, par_out, reached, t);
  if (!reached) return false;
  ++snk_flow_[t];
  int node = out_node(t);
  while (true) {
    const int v = node_vertex(node);
    const int parent = is_out(node) ? par_out[v] : par_in[v];
    if (parent == kSuperSource) {
      ++src_flow_[v];
      break;
    }
    const int u = node_vertex(parent);
    if (!is_out(parent) && is_out(node)) {
      if (u == v) {
        ++used_[v];
      } else {
        // Residual u_in -> v_out cancels flow on arc v -> u.
        if (pred_[u] == v) pred_[u] = -1;
        if (succ_[v] == u) succ_[v] = -1;
      }
    } else if (is_out(parent) && !is_out(node)) {
      if (u == v) {
        --used_[v];
      } else {
        if (cap_[v] == 1) pred_[v] = u;
        if (cap_[u] == 1) succ_[u] = v;
      }
    }
    node = parent;
  }
  ++value_;
  return true;
}

int VertexFlow::run(int limit) {
  while (value_ < limit && augment()) {
  }
  return value_;
}

std::vector<Path> VertexFlow::paths() const {
  std::vector<Path> out;
  for (int s = 0; s < n_; ++s) {
    if (src_flow_[s] == 0) continue;
    Path p;
    int v = s;
    while (v >= 0) {
      p.vertices.push_back(v);
      if (snk_flow_[v] > 0 && succ_[v] < 0) break;
      v = succ_[v];
      if (static_cast<int>(p.size()) > n_) break;
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<int> VertexFlow::min_cut() const {
  std::vector<int> par_in, par_out;
  bool reached = false;
  int t = -1;
  bfs(par_in, par_out, reached, t);
  std::set<int> cut;
  for (int v = 0; v < n_; ++v) {
    const bool in_seen = par_in[v] != kUnseen;
    const bool out_seen = par_out[v] != kUnseen;
    if (in_seen && !out_seen && cap_[v] < kInf && used_[v] >= cap_[v])
      cut.insert(v);
    if (src_cap_[v] > 0 && src_cap_[v] < kInf && !in_seen &&
        src_flow_[v] >= src_cap_[v] && allowed_.test(v))
      cut.insert(v);
    if (snk_cap_[v] > 0 && snk_cap_[v] < kInf && out_seen &&
        snk_flow_[v] >= snk_cap_[v])
      cut.insert(v);
  }
  return {cut.begin(), cut.end()};
}

}  // namespace tourlink
