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

#ifndef LAZEX_ENGINE_HPP
#define LAZEX_ENGINE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "lazex/explanation.hpp"
#include "lazex/lazy.hpp"
#include "lazex/program.hpp"

namespace lazex {

// Result quality categories by bound gap.
enum class Bucket { AlmostExact, TightBound, LooseBound, NoAnswer };

// gap < 0.01 almost exact; [0.01, 0.25) tight; [0.25, 1) loose; 1 no answer.
Bucket bucket(double lower, double upper);
const char* to_string(Bucket b);

// Why the run stopped. Exact: both sides exhausted, the bounds meet at the
// true probability. Converged: gap dropped to epsilon or below (only
// reported for epsilon > 0, so an epsilon of zero always runs a query to
// exhaustion or out of budget). BudgetExhausted: out of time or
// explanation cap hit.
enum class Terminal { Exact, Converged, BudgetExhausted };
const char* to_string(Terminal t);

// One bound improvement: the explanation found and the bounds after
// incorporating it.
struct Event {
  int index = 0;  // 1-based
  double seconds = 0.0;
  Target side = Target::Query;
  Explanation explanation;
  double lower = 0.0;
  double upper = 1.0;
};

struct Trace {
  std::vector<Event> events;
  Terminal terminal = Terminal::BudgetExhausted;
  Bucket bucket = Bucket::NoAnswer;
  double lower = 0.0;
  double upper = 1.0;
  double seconds = 0.0;
  int rules_added = 0;
  int expansions = 0;
  bool query_exhausted = false;
  bool not_query_exhausted = false;
};

struct EngineOptions {
  bool lazy = true;
  // Exactly one of these governs termination: with explanation_cap set the
  // wall clock is ignored and the run stops after that many found
  // explanations (deterministic mode).
  double budget_seconds = 900.0;
  std::optional<int> explanation_cap;
  double epsilon = 1e-6;

  std::function<void(const Event&)> on_event;
  SearchHooks search_hooks;
};

// Owns the normalized program and its index for one query, and runs the
// anytime loop: alternate next_explanation between q and not-q, fold each
// found explanation into the matching side's DNF, update bounds, stop on
// exhaustion, convergence, or budget.
class Engine {
 public:
  // Validates and normalizes. Throws std::invalid_argument carrying the
  // validation report when the program is ill-formed or the query atom
  // does not occur.
  Engine(const GroundProgram& p, Atom query);

  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  const GroundProgram& program() const { return normalized_; }
  const ProgramIndex& index() const { return index_; }
  const Atom& query() const { return query_; }

  Trace run(const EngineOptions& opt = {}) const;

 private:
  GroundProgram normalized_;
  ProgramIndex index_;
  Atom query_;
};

}  // namespace lazex

#endif  // LAZEX_ENGINE_HPP
