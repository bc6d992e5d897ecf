/*
 *  Copyright 2026 The lazex authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#ifndef LAZEX_GEN_HPP
#define LAZEX_GEN_HPP

#include <cstdint>

#include "lazex/program.hpp"

namespace lazex {

// Parameters of a random layered reachability program: `width` nodes per
// layer, edges only between adjacent layers, each with probability drawn
// uniformly from [0.1, 0.9]. `density` is the chance of each possible
// edge; a spine of edges along the first column is always present, so the
// query node reaches the sink and the query atom is always defined.
struct GenConfig {
  std::uint64_t seed = 1;
  int layers = 4;
  int width = 3;
  double density = 0.5;
};

// Builds the program: e/2 facts for the edges, ground p/2 reachability
// rules toward the sink n<layers-1>_0, and query(p(n0_0, sink)). The
// output is deterministic in the config and always validates.
GroundProgram generate_layered(const GenConfig& cfg);

}  // namespace lazex

#endif  // LAZEX_GEN_HPP
