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

#ifndef LAZEX_ENCODE_HPP
#define LAZEX_ENCODE_HPP

#include <vector>

#include "lazex/explanation.hpp"
#include "lazex/lazy.hpp"
#include "lazex/maxsat.hpp"
#include "lazex/program.hpp"

namespace lazex {

// Each fact and each tracked head owns a pair of selector variables. What
// the pair means depends on the role:
//
//   Fact, Unexpanded:  pos = choose-true,  neg = choose-false
//   Expanded:          pos = derivable,    neg = blocked
//
// Facts and unexpanded heads select literals of the explanation under
// construction; derivable/blocked are derived bookkeeping with zero cost.
enum class SelectorRole : unsigned char { Fact, Unexpanded, Expanded };

struct SelectorEntry {
  int atom = -1;
  SelectorRole role = SelectorRole::Fact;
  maxsat::Var pos = -1;
  maxsat::Var neg = -1;
};

struct SelectorSpace {
  std::vector<SelectorEntry> entries;  // ascending atom id
  std::vector<int> entry_of_atom;      // atom id to entry index, -1 if absent
  int selector_vars = 0;               // variables at or above this are Tseitin aux

  const SelectorEntry& entry(int atom) const { return entries[entry_of_atom[atom]]; }
  bool has(int atom) const {
    return atom < static_cast<int>(entry_of_atom.size()) && entry_of_atom[atom] >= 0;
  }
};

struct Encoding {
  SelectorSpace space;
  maxsat::MaxSatInstance instance;
};

// Builds the weighted instance whose optima are optimal explanations of
// the target in the current lazy program. Hard clauses: selector mutual
// exclusion, support and refutation clauses for expanded atoms, the target
// unit, and one blocking clause per explanation already found for this
// target. Soft costs are negative log probabilities on fact selectors.
Encoding encode_target(const LazyState& ls, Target target);

// Forbids the explanation and all of its supersets. An empty explanation
// yields the empty clause, making the instance infeasible.
maxsat::Clause blocking_clause(const SelectorSpace& space, const Explanation& e);

// Reads the chosen fact literals and unexpanded-head literals back out of
// a model of the hard clauses.
Explanation decode(const std::vector<bool>& assignment, const LazyState& ls,
                   const SelectorSpace& space);

}  // namespace lazex

#endif  // LAZEX_ENCODE_HPP
