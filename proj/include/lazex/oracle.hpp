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

#ifndef LAZEX_ORACLE_HPP
#define LAZEX_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lazex/explanation.hpp"
#include "lazex/program.hpp"

// Exact inference by exhaustive enumeration of possible worlds. This is the
// ground truth the rest of the engine is tested against; it is exponential
// on purpose and guarded accordingly.
namespace lazex::oracle {

inline constexpr int kDefaultGuard = 24;

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Total truth assignment over the program's probabilistic facts, indexed by
// fact position.
struct World {
  std::vector<bool> truth;

  static World from_mask(std::uint64_t mask, int num_facts);
  bool operator[](int fact) const { return truth[fact]; }
};

// Product of the fact probabilities matching the world's literals.
double world_probability(const GroundProgram& p, const World& w);

// Truth of `a` in the unique model determined by the world and the rules
// (least model of the validated acyclic program).
bool entails(const ProgramIndex& ix, const World& w, const Atom& a);
bool entails(const GroundProgram& p, const World& w, const Atom& a);

// Sum of world_probability over the worlds entailing q. Throws
// GuardExceeded when the program has more than max_facts facts.
double exact_probability(const GroundProgram& p, const Atom& q, int max_facts = kDefaultGuard);

// Truth of q in every world, indexed by fact bitmask (bit i = fact i).
std::vector<bool> query_table(const ProgramIndex& ix, const Atom& q, int max_facts = kDefaultGuard);

// Whether every world extending e gives the target its polarity.
bool is_explanation(const GroundProgram& p, const Explanation& e, const Atom& q, Target t,
                    int max_facts = kDefaultGuard);
bool is_explanation(const std::vector<bool>& table, int num_facts, const Explanation& e, Target t);

}  // namespace lazex::oracle

#endif  // LAZEX_ORACLE_HPP
