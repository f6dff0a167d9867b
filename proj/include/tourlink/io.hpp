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

// Tournament text format:
//
//   n
//   <row 0: n characters from {0,1}>
//   ...
//   <row n-1>
//
// Character j of row i is 1 iff the arc i->j is present. The diagonal is 0
// and every off-diagonal pair has exactly one 1. Writing then reading is
// the identity, byte for byte.

#ifndef TOURLINK_IO_HPP_
#define TOURLINK_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "tourlink/core.hpp"

namespace tourlink {

void write_tournament(std::ostream& os, const Tournament& t);
Tournament read_tournament(std::istream& is);

void save_tournament(const std::string& path, const Tournament& t);
Tournament load_tournament(const std::string& path);

/// Graphviz rendering. Vertices in `highlight` are filled; arcs of the
/// listed paths are drawn bold, every other arc is drawn light grey unless
/// `background` is false, in which case only path arcs are written.
void write_dot(std::ostream& os, const Tournament& t,
               const std::vector<int>& highlight = {},
               const std::vector<Path>& paths = {}, bool background = true);

}  // namespace tourlink

#endif  // TOURLINK_IO_HPP_
