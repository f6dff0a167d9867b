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

#include "tourlink/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace tourlink {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  while (true) {
    const std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

Tournament uniform_tournament(int n, std::uint64_t seed) {
  if (n <= 0) throw PreconditionError("uniform: n must be >= 1");
  CoinStream coins(seed);
  // build() visits pairs u < v in row-major order, which is the documented
  // coin order.
  return Tournament::build(n, [&](int, int) { return coins.next(); });
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Tournament paley_tournament(int p) {
  if (!is_prime(p) || p % 4 != 3)
    throw PreconditionError("paley: n must be a prime congruent to 3 mod 4, got " +
                            std::to_string(p));
  std::vector<char> residue(p, 0);
  for (long long x = 1; x < p; ++x) residue[(x * x) % p] = 1;
  return Tournament::build(p, [&](int i, int j) { return residue[(j - i + p) % p]; });
}

Tournament circulant_tournament(int b) {
  if (b <= 0 || b % 2 == 0)
    throw PreconditionError("circulant: size must be odd and positive");
  const int half = (b - 1) / 2;
  return Tournament::build(b, [&](int i, int j) {
    const int d = (j - i + b) % b;
    return d >= 1 && d <= half;
  });
}

Tournament near_transitive_tournament(int b, int w) {
  if (b < 3 || w < 1 || w > b - 2)
    throw PreconditionError("near-transitive: need b >= 3 and 1 <= w <= b-2");
  return Tournament::build(b, [&](int i, int j) { return j - i < b - w; });
}

Tournament blowup(const Tournament& base, const std::vector<int>& block_sizes,
                  std::uint64_t seed) {
  if (block_sizes.empty()) throw PreconditionError("blowup: zero blocks");
  if (static_cast<int>(block_sizes.size()) != base.n())
    throw PreconditionError("blowup: need one block size per base vertex");
  std::vector<int> block;
  for (int b = 0; b < base.n(); ++b) {
    if (block_sizes[b] <= 0) throw PreconditionError("blowup: empty block");
    block.insert(block.end(), block_sizes[b], b);
  }
  CoinStream coins(seed);
  return Tournament::build(static_cast<int>(block.size()), [&](int u, int v) {
    if (block[u] == block[v]) return coins.next();
    return base.arc(block[u], block[v]);
  });
}

Tournament generate(const GeneratorSpec& spec) {
  switch (spec.model) {
    case Model::kUniform:
      return uniform_tournament(spec.n, spec.seed);
    case Model::kPaley:
      return paley_tournament(spec.n);
    case Model::kBlowup:
      return blowup(spec.base, spec.block_sizes, spec.seed);
  }
  throw PreconditionError("unknown model");
}

WorkingDigraph random_working_digraph(int n, std::uint64_t seed, double removal) {
  WorkingDigraph d(uniform_tournament(n, seed));
  SplitMix64 rng(seed ^ 0x5bd1e9955bd1e995ULL);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (d.base().arc(u, v) && rng.chance(removal)) d.remove_arc(u, v);
  return d;
}

Model parse_model(const std::string& name) {
  if (name == "uniform") return Model::kUniform;
  if (name == "paley") return Model::kPaley;
  if (name == "blowup") return Model::kBlowup;
  throw PreconditionError("unknown model '" + name + "'");
}

std::string to_string(Model m) {
  switch (m) {
    case Model::kUniform: return "uniform";
    case Model::kPaley: return "paley";
    case Model::kBlowup: return "blowup";
  }
  return "?";
}

// --- Exhaustive oracles -----------------------------------------------------

namespace {

void require_cap(const char* what, int n, int cap) {
  if (n > cap)
    throw PreconditionError(std::string(what) + ": oracle cap is " +
                            std::to_string(cap) + " vertices, got " +
                            std::to_string(n));
}

std::vector<std::uint32_t> out_masks(const Tournament& t) {
  std::vector<std::uint32_t> out(t.n(), 0);
  for (int u = 0; u < t.n(); ++u)
    for (int v = 0; v < t.n(); ++v)
      if (t.arc(u, v)) out[u] |= 1U << v;
  return out;
}

// reach[mask] = set of end vertices e such that some path starting at
// `start` visits exactly `mask` and ends at e.
std::vector<std::uint32_t> path_table(const std::vector<std::uint32_t>& out,
                                      int n, int start) {
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  reach[std::size_t{1} << start] = 1U << start;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::uint32_t ends = reach[mask];
    while (ends) {
      const int e = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint32_t next = out[e] & ~mask;
      while (next) {
        const int w = std::countr_zero(next);
        next &= next - 1;
        reach[mask | (1U << w)] |= 1U << w;
      }
    }
  }
  return reach;
}

Path walk_back(const std::vector<std::uint32_t>& reach,
               const std::vector<std::uint32_t>& out, std::uint32_t mask, int end) {
  std::vector<int> rev{end};
  while (std::popcount(mask) > 1) {
    const std::uint32_t prev_mask = mask & ~(1U << end);
    std::uint32_t cands = reach[prev_mask];
    int prev = -1;
    while (cands) {
      const int c = std::countr_zero(cands);
      cands &= cands - 1;
      if (out[c] >> end & 1U) {
        prev = c;
        break;
      }
    }
    rev.push_back(prev);
    mask = prev_mask;
    end = prev;
  }
  return Path(std::vector<int>(rev.rbegin(), rev.rend()));
}

}  // namespace

std::optional<Path> brute_ham_path(const Tournament& t, int x, int y) {
  const int n = t.n();
  require_cap("brute_ham_path", n, kHamOracleCap);
  if (x == y) throw PreconditionError("brute_ham_path: x == y");
  const auto out = out_masks(t);
  const auto reach = path_table(out, n, x);
  const std::uint32_t full = (1U << n) - 1;
  if (!(reach[full] >> y & 1U)) return std::nullopt;
  return walk_back(reach, out, full, y);
}

std::optional<Path> brute_ham_cycle(const Tournament& t) {
  const int n = t.n();
  require_cap("brute_ham_cycle", n, kHamOracleCap);
  if (n == 1) return Path{0};
  const auto out = out_masks(t);
  const auto reach = path_table(out, n, 0);
  const std::uint32_t full = (1U << n) - 1;
  for (int e = 1; e < n; ++e)
    if ((reach[full] >> e & 1U) && t.arc(e, 0)) return walk_back(reach, out, full, e);
  return std::nullopt;
}

int independence_number(const WorkingDigraph& d) {
  const int n = d.n();
  require_cap("independence_number", n, kIndependenceOracleCap);
  std::vector<std::uint32_t> adj(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && d.adjacent(u, v)) adj[u] |= 1U << v;
  // Branch on the lowest candidate: either exclude it or take it and drop
  // its neighbours.
  int best = 0;
  auto rec = [&](auto&& self, std::uint32_t cand, int size) -> void {
    if (size + std::popcount(cand) <= best) return;
    if (cand == 0) {
      best = size;
      return;
    }
    const int v = std::countr_zero(cand);
    self(self, cand & ~adj[v] & ~(1U << v), size + 1);
    self(self, cand & ~(1U << v), size);
  };
  rec(rec, n == 32 ? ~0U : (1U << n) - 1, 0);
  return best;
}

int brute_disjoint_paths(const Tournament& t, int u, int v, int max_len) {
  const int n = t.n();
  require_cap("brute_disjoint_paths", n, kPathsOracleCap);
  if (u == v) throw PreconditionError("brute_disjoint_paths: u == v");
  const auto out = out_masks(t);
  const auto reach = path_table(out, n, u);
  // Internal vertex sets of admissible u->v paths other than the direct arc.
  std::vector<std::uint32_t> sets;
  const std::uint32_t ends = (1U << u) | (1U << v);
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if ((mask & ends) != ends) continue;
    const int len = std::popcount(mask) - 1;
    if (len < 2 || len > max_len) continue;
    if (reach[mask] >> v & 1U) sets.push_back(mask & ~ends);
  }
  // Only inclusion-minimal internal sets matter for packing.
  std::vector<std::uint32_t> minimal;
  std::sort(sets.begin(), sets.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b)
                                                : a < b;
  });
  for (auto s : sets) {
    bool dominated = false;
    for (auto m : minimal)
      if ((m & s) == m) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(s);
  }
  int best = 0;
  auto rec = [&](auto&& self, std::size_t from, std::uint32_t used, int count) -> void {
    best = std::max(best, count);
    const int room = n - 2 - std::popcount(used);
    if (count + room <= best) return;
    for (std::size_t i = from; i < minimal.size(); ++i)
      if ((minimal[i] & used) == 0) self(self, i + 1, used | minimal[i], count + 1);
  };
  rec(rec, 0, 0, 0);
  const int direct = (max_len >= 1 && t.arc(u, v)) ? 1 : 0;
  return best + direct;
}

int brute_strong_connectivity(const Tournament& t) {
  const int n = t.n();
  require_cap("brute_strong_connectivity", n, kPathsOracleCap);
  if (n == 1) return 0;
  const auto out = out_masks(t);
  auto strong_after_removing = [&](std::uint32_t removed) {
    const std::uint32_t keep = ((1U << n) - 1) & ~removed;
    const int start = std::countr_zero(keep);
    auto closure = [&](bool forward) {
      std::uint32_t seen = 1U << start, frontier = seen;
      while (frontier) {
        const int w = std::countr_zero(frontier);
        frontier &= frontier - 1;
        std::uint32_t nb = 0;
        if (forward) {
          nb = out[w];
        } else {
          for (int z = 0; z < n; ++z)
            if (out[z] >> w & 1U) nb |= 1U << z;
        }
        nb &= keep & ~seen;
        seen |= nb;
        frontier |= nb;
      }
      return seen == keep;
    };
    return closure(true) && closure(false);
  };
  for (int k = 0; k < n - 1; ++k) {
    for (std::uint32_t s = 0; s < (1U << n); ++s)
      if (std::popcount(s) == k && !strong_after_removing(s)) return k;
  }
  return n - 1;
}

int max_transitive_size(const Tournament& t) {
  const int n = t.n();
  require_cap("max_transitive_size", n, 20);
  const auto out = out_masks(t);
  // A transitive set has a source vertex beating all the others, so grow
  // from sources: best(cand) = 1 + max over v in cand of best(cand & N+(v)).
  std::vector<int> memo(std::size_t{1} << n, -1);
  auto best = [&](auto&& self, std::uint32_t cand) -> int {
    if (cand == 0) return 0;
    int& m = memo[cand];
    if (m >= 0) return m;
    int r = 0;
    std::uint32_t c = cand;
    while (c) {
      const int v = std::countr_zero(c);
      c &= c - 1;
      r = std::max(r, 1 + self(self, cand & out[v]));
    }
    return m = r;
  };
  return best(best, (1U << n) - 1);
}

}  // namespace tourlink
