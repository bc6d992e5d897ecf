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

#ifndef LAZEX_EXPLANATION_HPP
#define LAZEX_EXPLANATION_HPP

#include <compare>
#include <string>
#include <vector>

#include "lazex/program.hpp"

namespace lazex {

// The two search directions: prove the query, or refute it.
enum class Target { Query, NotQuery };

inline Target opposite(Target t) {
  return t == Target::Query ? Target::NotQuery : Target::Query;
}

const char* to_string(Target t);

// Assignment of one probabilistic fact, by fact position in the program.
struct FactLiteral {
  int fact = -1;
  bool value = true;

  auto operator<=>(const FactLiteral&) const = default;
};

// Transient literal over an unexpanded head, by atom id.
struct HeadLiteral {
  int atom = -1;
  bool value = true;

  auto operator<=>(const HeadLiteral&) const = default;
};

// A partial assignment of probabilistic facts under which the target holds
// in every extending world. While the lazy search is in progress it may
// additionally carry unexpanded-head literals; those contribute probability
// factor one and disqualify it as a final explanation.
struct Explanation {
  std::vector<FactLiteral> facts;  // sorted by fact index, no duplicates
  std::vector<HeadLiteral> heads;  // sorted by atom id, no duplicates
  double probability = 1.0;

  bool head_free() const { return heads.empty(); }
  bool operator==(const Explanation&) const = default;

  // Rendering like {e(1,2), \+e(2,4)}; heads are suffixed with '?'.
  std::string str(const ProgramIndex& ix) const;
};

// Builds an explanation over fact literals only: sorts, checks for
// duplicates, and computes the probability product.
Explanation make_explanation(const GroundProgram& p, std::vector<FactLiteral> lits);

}  // namespace lazex

#endif  // LAZEX_EXPLANATION_HPP
