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

#include "lazex/engine.hpp"

#include <chrono>
#include <limits>
#include <stdexcept>
#include <utility>

#include "lazex/wmc.hpp"

namespace lazex {

Bucket bucket(double lower, double upper) {
  double gap = upper - lower;
  if (gap < 0.01) return Bucket::AlmostExact;
  if (gap < 0.25) return Bucket::TightBound;
  if (gap < 1.0) return Bucket::LooseBound;
  return Bucket::NoAnswer;
}

const char* to_string(Bucket b) {
  switch (b) {
    case Bucket::AlmostExact: return "almost_exact";
    case Bucket::TightBound: return "tight_bound";
    case Bucket::LooseBound: return "loose_bound";
    case Bucket::NoAnswer: return "no_answer";
  }
  return "?";
}

const char* to_string(Terminal t) {
  switch (t) {
    case Terminal::Exact: return "exact";
    case Terminal::Converged: return "converged";
    case Terminal::BudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

namespace {

GroundProgram checked_normalize(const GroundProgram& p) {
  ValidationReport report = validate(p);
  if (!report.ok()) throw std::invalid_argument(report.str());
  return normalize(p);
}

}  // namespace

Engine::Engine(const GroundProgram& p, Atom query)
    : normalized_(checked_normalize(p)), index_(normalized_), query_(std::move(query)) {
  if (index_.atom_id(query_) < 0) {
    throw std::invalid_argument("query atom does not occur in the program: " +
                                query_.str());
  }
}

Trace Engine::run(const EngineOptions& opt) const {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(clock::now() - t0).count();
  };

  // deterministic mode counts explanations instead of watching the clock
  maxsat::Budget budget = opt.explanation_cap
                              ? maxsat::Budget::unlimited()
                              : maxsat::Budget::seconds(opt.budget_seconds);

  LazyState ls = opt.lazy ? init_lazy(normalized_, index_, query_)
                          : init_full(normalized_, index_, query_);

  std::vector<double> probs;
  probs.reserve(normalized_.facts.size());
  for (const ProbFact& f : normalized_.facts) probs.push_back(f.prob);
  ExplanationDnf proving(probs);
  ExplanationDnf refuting(probs);

  constexpr double kInf = std::numeric_limits<double>::infinity();
  bool exhausted[2] = {false, false};
  double last_prob[2] = {kInf, kInf};  // drives the greedy gap attack
  auto side_index = [](Target t) { return t == Target::Query ? 0 : 1; };

  Trace tr;
  double lower = 0.0;
  double upper = 1.0;
  int found = 0;

  while (true) {
    if (exhausted[0] && exhausted[1]) {
      tr.terminal = Terminal::Exact;
      break;
    }
    if (opt.epsilon > 0.0 && upper - lower <= opt.epsilon) {
      tr.terminal = Terminal::Converged;
      break;
    }
    if (opt.explanation_cap && found >= *opt.explanation_cap) {
      tr.terminal = Terminal::BudgetExhausted;
      break;
    }
    if (budget.expired()) {
      tr.terminal = Terminal::BudgetExhausted;
      break;
    }

    Target side;
    if (exhausted[0]) {
      side = Target::NotQuery;
    } else if (exhausted[1]) {
      side = Target::Query;
    } else {
      side = last_prob[1] > last_prob[0] ? Target::NotQuery : Target::Query;
    }

    NextResult nr = next_explanation(ls, side, budget, opt.search_hooks);
    if (nr.status == NextStatus::Timeout) {
      tr.terminal = Terminal::BudgetExhausted;
      break;
    }
    if (nr.status == NextStatus::Exhausted) {
      exhausted[side_index(side)] = true;
      continue;
    }

    ++found;
    last_prob[side_index(side)] = nr.explanation.probability;
    (side == Target::Query ? proving : refuting).add(nr.explanation);
    std::tie(lower, upper) = bounds(proving, refuting);

    Event ev;
    ev.index = static_cast<int>(tr.events.size()) + 1;
    ev.seconds = elapsed();
    ev.side = side;
    ev.explanation = std::move(nr.explanation);
    ev.lower = lower;
    ev.upper = upper;
    tr.events.push_back(ev);
    if (opt.on_event) opt.on_event(tr.events.back());
  }

  tr.bucket = lazex::bucket(lower, upper);
  tr.lower = lower;
  tr.upper = upper;
  tr.seconds = elapsed();
  tr.rules_added = ls.rules_added;
  tr.expansions = ls.expansions;
  tr.query_exhausted = exhausted[0];
  tr.not_query_exhausted = exhausted[1];
  return tr;
}

}  // namespace lazex
