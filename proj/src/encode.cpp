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

#include "lazex/encode.hpp"

#include <cmath>
#include <stdexcept>

namespace lazex {

namespace {

using maxsat::Clause;
using maxsat::Lit;
using maxsat::MaxSatInstance;
using maxsat::Var;

SelectorSpace build_space(const LazyState& ls, MaxSatInstance& inst) {
  const ProgramIndex& ix = *ls.index;
  SelectorSpace sp;
  sp.entry_of_atom.assign(ix.num_atoms(), -1);
  for (int a = 0; a < ix.num_atoms(); ++a) {
    SelectorEntry e;
    e.atom = a;
    if (ix.is_fact(a)) {
      e.role = SelectorRole::Fact;
      double p = ix.program().facts[ix.fact_index(a)].prob;
      e.pos = inst.new_var(-std::log(p));
      e.neg = inst.new_var(-std::log(1.0 - p));
    } else if (ls.unexpanded(a)) {
      e.role = SelectorRole::Unexpanded;
      e.pos = inst.new_var();
      e.neg = inst.new_var();
    } else if (ls.expanded(a)) {
      e.role = SelectorRole::Expanded;
      e.pos = inst.new_var();
      e.neg = inst.new_var();
    } else {
      continue;
    }
    sp.entry_of_atom[a] = static_cast<int>(sp.entries.size());
    sp.entries.push_back(e);
  }
  sp.selector_vars = inst.num_vars();
  return sp;
}

// The literal that makes a body literal hold: a positive occurrence wants
// the atom chosen true (or derivable), a negated fact wants it chosen
// false.
Lit lit_plus(const SelectorSpace& sp, const ProgramIndex& ix, const BodyLiteral& bl) {
  const SelectorEntry& e = sp.entry(ix.atom_id(bl.atom));
  return Lit::pos(bl.positive ? e.pos : e.neg);
}

// The literal that falsifies a body literal.
Lit lit_minus(const SelectorSpace& sp, const ProgramIndex& ix, const BodyLiteral& bl) {
  const SelectorEntry& e = sp.entry(ix.atom_id(bl.atom));
  return Lit::pos(bl.positive ? e.neg : e.pos);
}

}  // namespace

Encoding encode_target(const LazyState& ls, Target target) {
  const ProgramIndex& ix = *ls.index;
  const GroundProgram& p = *ls.program;

  Encoding enc;
  enc.space = build_space(ls, enc.instance);
  MaxSatInstance& inst = enc.instance;
  const SelectorSpace& sp = enc.space;

  // a selector pair never picks both polarities
  for (const SelectorEntry& e : sp.entries) {
    if (e.role != SelectorRole::Expanded) {
      inst.add_hard({Lit::neg(e.pos), Lit::neg(e.neg)});
    }
  }

  for (const SelectorEntry& e : sp.entries) {
    if (e.role != SelectorRole::Expanded) continue;

    // support: derivable only via some included rule whose body holds
    Clause support{Lit::neg(e.pos)};
    bool always_derivable = false;
    for (int ri : ix.rules_of(e.atom)) {
      if (!ls.rule_included[ri]) continue;
      const Rule& r = p.rules[ri];
      if (r.body.empty()) {
        always_derivable = true;
        break;
      }
      if (r.body.size() == 1) {
        support.push_back(lit_plus(sp, ix, r.body[0]));
      } else {
        Var t = inst.new_var();
        for (const BodyLiteral& bl : r.body) {
          inst.add_hard({Lit::neg(t), lit_plus(sp, ix, bl)});
        }
        support.push_back(Lit::pos(t));
      }
    }
    if (!always_derivable) inst.add_hard(std::move(support));

    // refutation: blocked only if every included rule has a broken literal
    for (int ri : ix.rules_of(e.atom)) {
      if (!ls.rule_included[ri]) continue;
      const Rule& r = p.rules[ri];
      Clause refute{Lit::neg(e.neg)};
      for (const BodyLiteral& bl : r.body) {
        refute.push_back(lit_minus(sp, ix, bl));
      }
      inst.add_hard(std::move(refute));
    }
  }

  const SelectorEntry& q = sp.entry(ls.query_id);
  inst.add_hard({Lit::pos(target == Target::Query ? q.pos : q.neg)});

  for (const Explanation& e : ls.found_for(target)) {
    inst.add_hard(blocking_clause(sp, e));
  }
  return enc;
}

maxsat::Clause blocking_clause(const SelectorSpace& space, const Explanation& e) {
  if (!e.head_free()) throw std::invalid_argument("blocking a non-head-free explanation");
  Clause c;
  for (const FactLiteral& fl : e.facts) {
    const SelectorEntry& se = space.entries[fl.fact];  // fact entries lead the space
    c.push_back(Lit::neg(fl.value ? se.pos : se.neg));
  }
  return c;
}

Explanation decode(const std::vector<bool>& assignment, const LazyState& ls,
                   const SelectorSpace& space) {
  const ProgramIndex& ix = *ls.index;
  Explanation e;
  for (const SelectorEntry& se : space.entries) {
    switch (se.role) {
      case SelectorRole::Fact:
        if (assignment[se.pos]) {
          e.facts.push_back({ix.fact_index(se.atom), true});
          e.probability *= ix.program().facts[ix.fact_index(se.atom)].prob;
        } else if (assignment[se.neg]) {
          e.facts.push_back({ix.fact_index(se.atom), false});
          e.probability *= 1.0 - ix.program().facts[ix.fact_index(se.atom)].prob;
        }
        break;
      case SelectorRole::Unexpanded:
        if (assignment[se.pos]) {
          e.heads.push_back({se.atom, true});
        } else if (assignment[se.neg]) {
          e.heads.push_back({se.atom, false});
        }
        break;
      case SelectorRole::Expanded:
        break;
    }
  }
  return e;
}

}  // namespace lazex
