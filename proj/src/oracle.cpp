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

#include "lazex/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace lazex::oracle {

namespace {

// Flattened body literal: fact positions resolve against the world,
// derived ids against the evaluation buffer.
struct EvalLit {
  bool is_fact;
  int index;  // fact position or atom id
  bool positive;
};

struct EvalRule {
  int head;  // atom id
  std::vector<EvalLit> body;
};

// One-pass evaluator for the least model given a world.
class Evaluator {
 public:
  explicit Evaluator(const ProgramIndex& ix) : ix_(ix) {
    const GroundProgram& p = ix.program();
    for (int id : ix.derived_topo()) {
      for (int ri : ix.rules_of(id)) {
        EvalRule er;
        er.head = id;
        for (const auto& lit : p.rules[ri].body) {
          int aid = ix.atom_id(lit.atom);
          if (ix.is_fact(aid)) {
            er.body.push_back({true, ix.fact_index(aid), lit.positive});
          } else {
            er.body.push_back({false, aid, lit.positive});
          }
        }
        rules_.push_back(std::move(er));
      }
    }
    value_.resize(ix.num_atoms());
  }

  // Evaluates all derived atoms bottom-up for the world encoded in mask.
  void run(std::uint64_t mask) {
    std::fill(value_.begin(), value_.end(), 0);
    for (const auto& r : rules_) {
      if (value_[r.head]) continue;
      bool fires = true;
      for (const auto& l : r.body) {
        bool v = l.is_fact ? ((mask >> l.index) & 1) != 0 : value_[l.index] != 0;
        if (v != l.positive) {
          fires = false;
          break;
        }
      }
      if (fires) value_[r.head] = 1;
    }
  }

  bool derived_value(int atom_id) const { return value_[atom_id] != 0; }

 private:
  const ProgramIndex& ix_;
  std::vector<EvalRule> rules_;  // in topological head order
  std::vector<char> value_;
};

std::uint64_t world_mask(const World& w) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < w.truth.size(); ++i) {
    if (w.truth[i]) m |= std::uint64_t{1} << i;
  }
  return m;
}

bool atom_truth(const ProgramIndex& ix, Evaluator& ev, std::uint64_t mask, const Atom& a) {
  int id = ix.atom_id(a);
  if (id < 0) return false;  // unmentioned atom: never derivable
  if (ix.is_fact(id)) return ((mask >> ix.fact_index(id)) & 1) != 0;
  ev.run(mask);
  return ev.derived_value(id);
}

void check_guard(const GroundProgram& p, int max_facts) {
  if (static_cast<int>(p.facts.size()) > max_facts) {
    throw GuardExceeded("program has " + std::to_string(p.facts.size()) +
                        " facts, enumeration guard is " + std::to_string(max_facts));
  }
}

}  // namespace

World World::from_mask(std::uint64_t mask, int num_facts) {
  World w;
  w.truth.resize(num_facts);
  for (int i = 0; i < num_facts; ++i) w.truth[i] = ((mask >> i) & 1) != 0;
  return w;
}

double world_probability(const GroundProgram& p, const World& w) {
  if (w.truth.size() != p.facts.size()) {
    throw std::invalid_argument("world does not cover the program's facts");
  }
  double prob = 1.0;
  for (std::size_t i = 0; i < p.facts.size(); ++i) {
    prob *= w.truth[i] ? p.facts[i].prob : 1.0 - p.facts[i].prob;
  }
  return prob;
}

bool entails(const ProgramIndex& ix, const World& w, const Atom& a) {
  Evaluator ev(ix);
  return atom_truth(ix, ev, world_mask(w), a);
}

bool entails(const GroundProgram& p, const World& w, const Atom& a) {
  ProgramIndex ix(p);
  return entails(ix, w, a);
}

double exact_probability(const GroundProgram& p, const Atom& q, int max_facts) {
  check_guard(p, max_facts);
  ProgramIndex ix(p);
  Evaluator ev(ix);
  int n = static_cast<int>(p.facts.size());
  int id = ix.atom_id(q);
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool holds;
    if (id >= 0 && ix.is_fact(id)) {
      holds = ((mask >> ix.fact_index(id)) & 1) != 0;
    } else if (id >= 0) {
      ev.run(mask);
      holds = ev.derived_value(id);
    } else {
      holds = false;
    }
    if (!holds) continue;
    double prob = 1.0;
    for (int i = 0; i < n; ++i) {
      prob *= ((mask >> i) & 1) ? p.facts[i].prob : 1.0 - p.facts[i].prob;
    }
    total += prob;
  }
  return total;
}

std::vector<bool> query_table(const ProgramIndex& ix, const Atom& q, int max_facts) {
  check_guard(ix.program(), max_facts);
  Evaluator ev(ix);
  int n = ix.num_facts();
  std::vector<bool> table(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = atom_truth(ix, ev, mask, q);
  }
  return table;
}

bool is_explanation(const std::vector<bool>& table, int num_facts, const Explanation& e, Target t) {
  bool want = t == Target::Query;
  std::uint64_t fixed_mask = 0, fixed_value = 0;
  for (const auto& l : e.facts) {
    fixed_mask |= std::uint64_t{1} << l.fact;
    if (l.value) fixed_value |= std::uint64_t{1} << l.fact;
  }
  std::vector<int> free_bits;
  for (int i = 0; i < num_facts; ++i) {
    if (!((fixed_mask >> i) & 1)) free_bits.push_back(i);
  }
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << free_bits.size()); ++k) {
    std::uint64_t mask = fixed_value;
    for (std::size_t b = 0; b < free_bits.size(); ++b) {
      if ((k >> b) & 1) mask |= std::uint64_t{1} << free_bits[b];
    }
    if (table[mask] != want) return false;
  }
  return true;
}

bool is_explanation(const GroundProgram& p, const Explanation& e, const Atom& q, Target t,
                    int max_facts) {
  if (!e.head_free()) return false;
  ProgramIndex ix(p);
  auto table = query_table(ix, q, max_facts);
  return is_explanation(table, static_cast<int>(p.facts.size()), e, t);
}

}  // namespace lazex::oracle
