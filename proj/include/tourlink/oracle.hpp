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

// Seeded generators and exhaustive oracles. The oracles have hard size caps:
// asking for more throws PreconditionError instead of quietly truncating.
//
// Random stream: SplitMix64 (Steele, Lea, Flood 2014). Each 64-bit output is
// consumed as 64 coins, least significant bit first. A uniform tournament
// visits pairs (i, j), i < j, in row-major order and orients i->j when the
// coin is 1. Blowups spend coins the same way but only on pairs inside a
// block.

#ifndef TOURLINK_ORACLE_HPP_
#define TOURLINK_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tourlink/core.hpp"

namespace tourlink {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform integer in [0, bound) by rejection (bound > 0).
  std::uint64_t below(std::uint64_t bound);
  /// Probability-p event from the top 53 bits.
  bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

 private:
  std::uint64_t state_;
};

/// Coin stream over SplitMix64 outputs, LSB first.
class CoinStream {
 public:
  explicit CoinStream(std::uint64_t seed) : rng_(seed) {}
  bool next() {
    if (left_ == 0) {
      word_ = rng_.next();
      left_ = 64;
    }
    const bool c = word_ & 1U;
    word_ >>= 1;
    --left_;
    return c;
  }

 private:
  SplitMix64 rng_;
  std::uint64_t word_ = 0;
  int left_ = 0;
};

enum class Model { kUniform, kPaley, kBlowup };

struct GeneratorSpec {
  Model model = Model::kUniform;
  int n = 0;
  std::uint64_t seed = 0;
  /// Blowup only: base tournament and one block size per base vertex. Block
  /// b occupies a contiguous id range in base order.
  Tournament base;
  std::vector<int> block_sizes;
};

Tournament generate(const GeneratorSpec& spec);

Tournament uniform_tournament(int n, std::uint64_t seed);
Tournament paley_tournament(int p);
Tournament blowup(const Tournament& base, const std::vector<int>& block_sizes,
                  std::uint64_t seed);
/// Rotational tournament on odd b vertices: i->j iff (j-i) mod b lies in
/// [1, (b-1)/2]. Regular, and a common base for blowups.
Tournament circulant_tournament(int b);

/// Transitive tournament on b vertices with every arc of span at least
/// b-w turned backwards (i->j iff j-i < b-w for i < j). Strongly connected,
/// and its blowups keep an almost linear order of positions.
Tournament near_transitive_tournament(int b, int w);

/// Uniform tournament with each arc independently removed with
/// probability `removal`.
WorkingDigraph random_working_digraph(int n, std::uint64_t seed, double removal);

Model parse_model(const std::string& name);
std::string to_string(Model m);

inline constexpr int kHamOracleCap = 14;
inline constexpr int kIndependenceOracleCap = 24;
inline constexpr int kPathsOracleCap = 14;

/// Hamiltonian x->y path by subset dynamic programming, or nullopt.
std::optional<Path> brute_ham_path(const Tournament& t, int x, int y);
/// Hamiltonian cycle by subset dynamic programming, or nullopt.
std::optional<Path> brute_ham_cycle(const Tournament& t);
/// Exact independence number; arcs in either direction make a pair adjacent.
int independence_number(const WorkingDigraph& d);
/// Maximum number of internally vertex-disjoint u->v paths of length at
/// most max_len (the direct arc counts as one path).
int brute_disjoint_paths(const Tournament& t, int u, int v, int max_len);
/// Strong connectivity by enumerating vertex subsets in size order.
int brute_strong_connectivity(const Tournament& t);
/// Size of a largest transitive subtournament, by enumeration.
int max_transitive_size(const Tournament& t);

}  // namespace tourlink

#endif  // TOURLINK_ORACLE_HPP_
