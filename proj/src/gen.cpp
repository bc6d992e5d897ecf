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

#include "lazex/gen.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace lazex {

namespace {

// mt19937_64 output mapped to [0,1) by hand; the standard distributions
// are not bit-reproducible across library implementations.
double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string node_name(int layer, int col) {
  return "n" + std::to_string(layer) + "_" + std::to_string(col);
}

}  // namespace

GroundProgram generate_layered(const GenConfig& cfg) {
  if (cfg.layers < 2 || cfg.width < 1) {
    throw std::invalid_argument("generator needs at least 2 layers and width 1");
  }
  if (cfg.density < 0.0 || cfg.density > 1.0) {
    throw std::invalid_argument("density outside [0,1]");
  }

  std::mt19937_64 rng(cfg.seed);
  const int last = cfg.layers - 1;

  // adjacency[i][a] lists the columns of layer i+1 that node (i,a) feeds
  std::vector<std::vector<std::vector<int>>> adjacency(last);
  for (int i = 0; i < last; ++i) {
    adjacency[i].resize(cfg.width);
    for (int a = 0; a < cfg.width; ++a) {
      for (int b = 0; b < cfg.width; ++b) {
        bool spine = a == 0 && b == 0;
        bool keep = unit(rng) < cfg.density;
        if (spine || keep) adjacency[i][a].push_back(b);
      }
      if (adjacency[i][a].empty()) {
        adjacency[i][a].push_back(static_cast<int>(rng() % cfg.width));
      }
    }
  }

  GroundProgram p;
  for (int i = 0; i < last; ++i) {
    for (int a = 0; a < cfg.width; ++a) {
      for (int b : adjacency[i][a]) {
        Atom e{"e", {node_name(i, a), node_name(i + 1, b)}};
        p.facts.push_back({std::move(e), 0.1 + 0.8 * unit(rng)});
      }
    }
  }

  // which nodes reach the sink, per layer
  const std::string sink = node_name(last, 0);
  std::vector<std::vector<char>> reaches(cfg.layers, std::vector<char>(cfg.width, 0));
  reaches[last][0] = 1;
  for (int i = last - 1; i >= 0; --i) {
    for (int a = 0; a < cfg.width; ++a) {
      for (int b : adjacency[i][a]) {
        if (reaches[i + 1][b]) reaches[i][a] = 1;
      }
    }
  }

  for (int i = 0; i < last; ++i) {
    for (int a = 0; a < cfg.width; ++a) {
      if (!reaches[i][a]) continue;
      for (int b : adjacency[i][a]) {
        if (!reaches[i + 1][b]) continue;
        Atom head{"p", {node_name(i, a), sink}};
        BodyLiteral edge{{"e", {node_name(i, a), node_name(i + 1, b)}}, true};
        Rule r{std::move(head), {std::move(edge)}};
        if (i + 1 != last || b != 0) {
          r.body.push_back({{"p", {node_name(i + 1, b), sink}}, true});
        }
        p.rules.push_back(std::move(r));
      }
    }
  }

  p.queries.push_back({"p", {node_name(0, 0), sink}});
  return p;
}

}  // namespace lazex
