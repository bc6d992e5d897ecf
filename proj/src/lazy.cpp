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

#include "lazex/lazy.hpp"

#include <stdexcept>
#include <utility>

#include "lazex/encode.hpp"

namespace lazex {

std::vector<int> LazyState::unexpanded_heads() const {
  std::vector<int> out;
  for (int a = 0; a < static_cast<int>(head_status.size()); ++a) {
    if (head_status[a] == HeadStatus::Unexpanded) out.push_back(a);
  }
  return out;
}

namespace {

LazyState init_common(const GroundProgram& p, const ProgramIndex& ix, const Atom& q) {
  LazyState ls;
  ls.program = &p;
  ls.index = &ix;
  ls.query = q;
  ls.query_id = ix.atom_id(q);
  if (ls.query_id < 0) throw std::invalid_argument("unknown query atom " + q.str());
  ls.head_status.assign(ix.num_atoms(), HeadStatus::Untracked);
  ls.rule_included.assign(p.rules.size(), 0);
  return ls;
}

}  // namespace

LazyState init_lazy(const GroundProgram& p, const ProgramIndex& ix, const Atom& q) {
  LazyState ls = init_common(p, ix, q);
  for (int a : ix.reachable_derived(ls.query_id)) {
    ls.head_status[a] = HeadStatus::Unexpanded;
  }
  return ls;
}

LazyState init_full(const GroundProgram& p, const ProgramIndex& ix, const Atom& q) {
  LazyState ls = init_common(p, ix, q);
  for (int a : ix.reachable_derived(ls.query_id)) {
    ls.head_status[a] = HeadStatus::Expanded;
    for (int ri : ix.rules_of(a)) {
      ls.rule_included[ri] = 1;
      ++ls.rules_added;
    }
  }
  return ls;
}

void expand(LazyState& ls, const std::vector<int>& heads) {
  const ProgramIndex& ix = *ls.index;
  for (int h : heads) {
    if (!ls.unexpanded(h)) {
      throw std::invalid_argument("expanding a head that is not unexpanded: " +
                                  ix.atom(h).str());
    }
  }
  if (heads.empty()) return;
  ++ls.expansions;
  for (int h : heads) {
    ls.head_status[h] = HeadStatus::Expanded;
    for (int ri : ix.rules_of(h)) {
      if (ls.rule_included[ri]) continue;
      ls.rule_included[ri] = 1;
      ++ls.rules_added;
      for (const BodyLiteral& bl : ls.program->rules[ri].body) {
        int a = ix.atom_id(bl.atom);
        if (ix.is_derived(a) && ls.head_status[a] == HeadStatus::Untracked) {
          ls.head_status[a] = HeadStatus::Unexpanded;
        }
      }
    }
  }
}

NextResult next_explanation(LazyState& ls, Target target, const maxsat::Budget& budget,
                            const SearchHooks& hooks) {
  for (int iteration = 1;; ++iteration) {
    if (budget.expired()) return {NextStatus::Timeout, {}};

    Encoding enc = encode_target(ls, target);
    if (hooks.on_encoded) hooks.on_encoded(enc.instance, target);

    maxsat::Solver solver(std::move(enc.instance));
    maxsat::Result res = solver.solve(budget);
    if (res.status == maxsat::SolveStatus::Timeout) return {NextStatus::Timeout, {}};
    if (res.status == maxsat::SolveStatus::Infeasible) return {NextStatus::Exhausted, {}};

    Explanation e = decode(res.assignment, ls, enc.space);
    IterationRecord rec{iteration, target, e, res.cost, {}};
    if (e.head_free()) {
      ls.found_for(target).push_back(e);
      if (hooks.on_iteration) hooks.on_iteration(rec);
      return {NextStatus::Found, std::move(e)};
    }
    for (const HeadLiteral& hl : e.heads) rec.expanded.push_back(hl.atom);
    expand(ls, rec.expanded);
    if (hooks.on_iteration) hooks.on_iteration(rec);
  }
}

}  // namespace lazex
