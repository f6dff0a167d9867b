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

#include "tourlink/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace tourlink {

void write_tournament(std::ostream& os, const Tournament& t) {
  const int n = t.n();
  os << n << '\n';
  std::string line(n, '0');
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) line[j] = t.arc(i, j) ? '1' : '0';
    os << line << '\n';
  }
}

Tournament read_tournament(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw PreconditionError("tournament file: missing n");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(line, &used);
    if (used != line.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw PreconditionError("tournament file: bad vertex count '" + line + "'");
  }
  if (n <= 0) throw PreconditionError("tournament file: n must be >= 1");
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i) {
    if (!std::getline(is, line))
      throw PreconditionError("tournament file: missing row " + std::to_string(i));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (static_cast<int>(line.size()) != n)
      throw PreconditionError("tournament file: row " + std::to_string(i) +
                              " has " + std::to_string(line.size()) +
                              " characters, expected " + std::to_string(n));
    for (int j = 0; j < n; ++j) {
      if (line[j] != '0' && line[j] != '1')
        throw PreconditionError("tournament file: bad character in row " +
                                std::to_string(i));
      m[i][j] = line[j] == '1';
    }
  }
  return Tournament::from_matrix(m);
}

void save_tournament(const std::string& path, const Tournament& t) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path);
  write_tournament(os, t);
}

Tournament load_tournament(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path);
  return read_tournament(is);
}

void write_dot(std::ostream& os, const Tournament& t,
               const std::vector<int>& highlight,
               const std::vector<Path>& paths, bool background) {
  std::set<std::pair<int, int>> bold;
  for (const auto& p : paths)
    for (std::size_t i = 1; i < p.size(); ++i)
      bold.emplace(p.vertices[i - 1], p.vertices[i]);
  const std::set<int> marked(highlight.begin(), highlight.end());
  os << "digraph T {\n  node [shape=circle];\n";
  for (int v = 0; v < t.n(); ++v) {
    os << "  " << v;
    if (marked.count(v)) os << " [style=filled, fillcolor=lightblue]";
    os << ";\n";
  }
  for (int u = 0; u < t.n(); ++u)
    for (int v = 0; v < t.n(); ++v) {
      if (!t.arc(u, v)) continue;
      if (!background && !bold.count({u, v})) continue;
      os << "  " << u << " -> " << v;
      os << (bold.count({u, v}) ? " [penwidth=2.5];\n" : " [color=gray80];\n");
    }
  os << "}\n";
}

}  // namespace tourlink
