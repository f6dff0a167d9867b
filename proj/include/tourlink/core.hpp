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

// Tournament and digraph data model shared by every other module.

#ifndef TOURLINK_CORE_HPP_
#define TOURLINK_CORE_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tourlink/bitset.hpp"
#include "tourlink/report.hpp"

namespace tourlink {

/// Which way a one-sided construction (domination, degree) looks.
enum class Side { kIn, kOut };

inline Side opposite(Side s) { return s == Side::kIn ? Side::kOut : Side::kIn; }
inline const char* to_string(Side s) { return s == Side::kIn ? "in" : "out"; }

/// A complete oriented graph on n vertices stored as bit-packed out-rows.
/// Copies share the immutable adjacency storage.
class Tournament {
 public:
  using ArcDecider = std::function<bool(int u, int v)>;

  Tournament() = default;

  /// For each u < v, `u_to_v(u, v)` decides whether the arc is u->v.
  static Tournament build(int n, const ArcDecider& u_to_v);
  /// Adjacency matrix form; rejects loops and pairs with both or neither arc.
  static Tournament from_matrix(const std::vector<std::vector<bool>>& m);

  int n() const { return n_; }
  bool arc(int u, int v) const {
    return (row_ptr(u)[v >> 6] >> (v & 63)) & 1U;
  }

  std::span<const std::uint64_t> out_words(int v) const {
    return {row_ptr(v), words_per_row_};
  }
  void out_row(int v, Bitset& dst) const;
  void in_row(int v, Bitset& dst) const;
  Bitset out_row(int v) const;
  Bitset in_row(int v) const;

  int out_degree(int v) const;
  int in_degree(int v) const { return n_ - 1 - out_degree(v); }
  int degree(int v, Side s) const {
    return s == Side::kOut ? out_degree(v) : in_degree(v);
  }
  /// Degrees inside the subtournament on `mask` (v itself may or may not be
  /// in the mask).
  int out_degree_in(int v, const Bitset& mask) const;
  int in_degree_in(int v, const Bitset& mask) const;
  int degree_in(int v, const Bitset& mask, Side s) const {
    return s == Side::kOut ? out_degree_in(v, mask) : in_degree_in(v, mask);
  }

  int min_out_degree() const;
  int min_in_degree() const;

  std::size_t arc_count() const;

  Tournament reversed() const;

  friend bool operator==(const Tournament& a, const Tournament& b);

 private:
  const std::uint64_t* row_ptr(int v) const {
    return rows_->data() + static_cast<std::size_t>(v) * words_per_row_;
  }

  int n_ = 0;
  std::size_t words_per_row_ = 0;
  std::shared_ptr<const std::vector<std::uint64_t>> rows_;
};

/// Subtournament together with the map from new ids to host ids.
struct InducedTournament {
  Tournament tournament;
  std::vector<int> to_host;
};

Tournament reverse(const Tournament& t);
InducedTournament induced(const Tournament& t, std::span<const int> vertices);

/// Transitive tournament on n vertices with order 0..n-1 (i->j iff i<j).
Tournament transitive_tournament(int n);

/// A tournament read either as stored or with every arc reversed, without
/// copying the adjacency. One-sided constructions are written for the in
/// side and run on the reversed view for the out side.
class OrientedView {
 public:
  OrientedView(const Tournament& t, bool reversed) : t_(&t), reversed_(reversed) {}
  /// The view on which an in-side construction yields the `side` result.
  static OrientedView for_side(const Tournament& t, Side side) {
    return OrientedView(t, side == Side::kOut);
  }

  const Tournament& base() const { return *t_; }
  bool reversed() const { return reversed_; }
  int n() const { return t_->n(); }
  bool arc(int u, int v) const { return reversed_ ? t_->arc(v, u) : t_->arc(u, v); }
  void out_row(int v, Bitset& dst) const {
    reversed_ ? t_->in_row(v, dst) : t_->out_row(v, dst);
  }
  void in_row(int v, Bitset& dst) const {
    reversed_ ? t_->out_row(v, dst) : t_->in_row(v, dst);
  }
  int out_degree(int v) const { return reversed_ ? t_->in_degree(v) : t_->out_degree(v); }
  int in_degree(int v) const { return reversed_ ? t_->out_degree(v) : t_->in_degree(v); }
  int out_degree_in(int v, const Bitset& mask) const {
    return reversed_ ? t_->in_degree_in(v, mask) : t_->out_degree_in(v, mask);
  }
  int in_degree_in(int v, const Bitset& mask) const {
    return reversed_ ? t_->out_degree_in(v, mask) : t_->in_degree_in(v, mask);
  }

 private:
  const Tournament* t_;
  bool reversed_;
};

/// A spanning subdigraph of a tournament: the base with some arcs removed.
class WorkingDigraph {
 public:
  WorkingDigraph() = default;
  explicit WorkingDigraph(Tournament base);

  const Tournament& base() const { return base_; }
  int n() const { return base_.n(); }

  bool has_arc(int u, int v) const {
    return base_.arc(u, v) && (removed_.empty() || !removed_.contains(key(u, v)));
  }
  bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }

  void out_row(int v, Bitset& dst) const;
  void in_row(int v, Bitset& dst) const;

  int out_degree(int v) const;
  int in_degree(int v) const;
  int degree(int v) const { return out_degree(v) + in_degree(v); }
  int min_degree() const;
  int min_out_degree() const;
  int min_in_degree() const;

  /// Removes a base arc; removing an already-removed arc is a no-op.
  void remove_arc(int u, int v);
  /// Puts a removed base arc back.
  void restore_arc(int u, int v);
  std::size_t removed_count() const { return removed_.size(); }
  std::vector<std::pair<int, int>> removed_arcs() const;

  WorkingDigraph reversed() const;

 private:
  std::uint64_t key(int u, int v) const {
    return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n()) +
           static_cast<std::uint64_t>(v);
  }

  Tournament base_;
  std::unordered_set<std::uint64_t> removed_;
  std::vector<std::vector<int>> removed_out_;
  std::vector<std::vector<int>> removed_in_;
};

/// Ordered, duplicate-free vertex sequence. A single vertex is a path of
/// length 0.
struct Path {
  std::vector<int> vertices;

  Path() = default;
  Path(std::initializer_list<int> vs) : vertices(vs) {}
  explicit Path(std::vector<int> vs) : vertices(std::move(vs)) {}

  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }
  std::size_t size() const { return vertices.size(); }
  bool empty() const { return vertices.empty(); }
  int length() const { return static_cast<int>(vertices.size()) - 1; }
  auto begin() const { return vertices.begin(); }
  auto end() const { return vertices.end(); }

  /// Appends `other`, which must continue from back().
  void append(const Path& other) {
    vertices.insert(vertices.end(), other.vertices.begin(), other.vertices.end());
  }
  Path reversed() const;

  friend bool operator==(const Path&, const Path&) = default;
};

/// Concatenation of non-empty parts.
Path join(std::initializer_list<const Path*> parts);

struct PathSystem {
  std::vector<Path> paths;
  /// When set, paths may share endpoints (internally disjoint mode).
  bool internally_disjoint = false;

  std::size_t size() const { return paths.size(); }
  std::size_t vertex_count() const;
  std::vector<int> vertex_union() const;
};

/// Checks that `p` is a duplicate-free sequence of host vertices joined by
/// host arcs.
bool is_path(const Tournament& t, const Path& p);
bool is_path(const WorkingDigraph& d, const Path& p);
/// Hamiltonian-cycle check (closing arc back()->front() required unless
/// the graph has one vertex).
bool is_ham_cycle(const WorkingDigraph& d, const Path& cycle);
bool is_ham_cycle(const Tournament& t, const Path& cycle);

/// Verifies every path and pairwise (internal) disjointness.
VerificationReport verify_path_system(const WorkingDigraph& d,
                                      const PathSystem& ps);

bool is_strongly_connected(const Tournament& t);
bool is_strongly_connected(const WorkingDigraph& d);
/// Strong connectivity of the subdigraph induced on `mask`.
bool is_strongly_connected(const WorkingDigraph& d, const Bitset& mask);

/// Largest k such that t is strongly k-connected, capped at n-1; 0 when t
/// is not strongly connected (and for n = 1).
int strong_connectivity(const Tournament& t);

/// Maximum number of internally vertex-disjoint u->v paths avoiding the
/// direct arc, stopping once `limit` is reached. Vertices outside `allowed`
/// (if given) are unusable.
int local_connectivity(const Tournament& t, int u, int v, int limit,
                       const Bitset* allowed = nullptr);

}  // namespace tourlink

#endif  // TOURLINK_CORE_HPP_
