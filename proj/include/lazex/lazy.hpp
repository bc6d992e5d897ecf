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

#ifndef LAZEX_LAZY_HPP
#define LAZEX_LAZY_HPP

#include <array>
#include <functional>
#include <vector>

#include "lazex/explanation.hpp"
#include "lazex/maxsat.hpp"
#include "lazex/program.hpp"

namespace lazex {

// Tracking status of a defined atom in the lazy program. Untracked atoms
// are invisible to the search; unexpanded atoms stand in as zero-cost
// pseudo-facts; expanded atoms carry all of their rules.
enum class HeadStatus : unsigned char { Untracked, Unexpanded, Expanded };

// The lazy program: the base program plus which rules are currently
// included, which heads are pseudo-facts, and the per-target record of
// explanations already found (each blocks its supersets in later solves).
//
// Holds non-owning pointers into the caller's program and index; both must
// outlive the state. Expansion is shared between the two targets, the
// blocking records are not.
struct LazyState {
  const GroundProgram* program = nullptr;
  const ProgramIndex* index = nullptr;
  Atom query;
  int query_id = -1;

  std::vector<HeadStatus> head_status;  // by atom id; facts stay Untracked
  std::vector<char> rule_included;      // by rule position in program->rules
  int rules_added = 0;                  // rules ever included
  int expansions = 0;                   // expand calls that touched a head

  std::array<std::vector<Explanation>, 2> found;  // per target, in discovery order

  std::vector<Explanation>& found_for(Target t) {
    return found[t == Target::Query ? 0 : 1];
  }
  const std::vector<Explanation>& found_for(Target t) const {
    return found[t == Target::Query ? 0 : 1];
  }

  bool tracked(int atom) const {
    return head_status[atom] != HeadStatus::Untracked;
  }
  bool unexpanded(int atom) const {
    return head_status[atom] == HeadStatus::Unexpanded;
  }
  bool expanded(int atom) const {
    return head_status[atom] == HeadStatus::Expanded;
  }

  // Currently unexpanded heads, ascending atom id.
  std::vector<int> unexpanded_heads() const;
};

// Starts with no rules included: every defined atom reachable from q
// becomes an unexpanded pseudo-fact. Throws std::invalid_argument when q
// does not occur in the program.
LazyState init_lazy(const GroundProgram& p, const ProgramIndex& ix, const Atom& q);

// Reference mode: all reachable heads expanded up front.
LazyState init_full(const GroundProgram& p, const ProgramIndex& ix, const Atom& q);

// Includes every rule of each given head and starts tracking defined atoms
// newly mentioned in those rule bodies. Throws when a head is not
// currently unexpanded.
void expand(LazyState& ls, const std::vector<int>& heads);

enum class NextStatus { Found, Exhausted, Timeout };

struct NextResult {
  NextStatus status = NextStatus::Exhausted;
  Explanation explanation;  // meaningful only when status == Found
};

// One inner search iteration: the lazy optimum, its cost, and the heads it
// forced open (empty when it was head-free and got returned).
struct IterationRecord {
  int iteration = 0;  // 1-based within one next_explanation call
  Target target = Target::Query;
  Explanation explanation;
  double cost = 0.0;
  std::vector<int> expanded;  // atom ids
};

struct SearchHooks {
  std::function<void(const IterationRecord&)> on_iteration;
  std::function<void(const maxsat::MaxSatInstance&, Target)> on_encoded;
};

// Searches for the next-best explanation of the target: solve the current
// lazy instance, expand any heads in the optimum, repeat until the optimum
// is head-free. The found explanation is recorded so later calls skip it
// and its supersets. Exhausted means no further explanations exist;
// Timeout discards the iteration in progress.
NextResult next_explanation(LazyState& ls, Target target, const maxsat::Budget& budget,
                            const SearchHooks& hooks = {});

}  // namespace lazex

#endif  // LAZEX_LAZY_HPP
