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

#include "lazex/maxsat.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lazex::maxsat {

namespace {

// Depth-first branch and bound over one clause database. The branch order
// is the lowest-index unassigned variable, false before true; together
// with incumbent replacement on strict improvement only, the first
// optimum met is the lexicographically smallest one.
//
// A true-branch is decided only when the variable still occurs positively
// in a clause with no true literal: flipping a true assignment without
// such an occurrence to false keeps all hard clauses satisfied at equal
// or lower cost, so the lex-smallest optimum never needs that branch.
class Searcher {
 public:
  Searcher(const MaxSatInstance& inst, const Budget& budget)
      : cost_(inst.cost), n_(inst.num_vars()), budget_(budget) {
    occ_.resize(2 * n_);
    for (const Clause& c : inst.hard) {
      Clause cl = c;
      std::sort(cl.begin(), cl.end(), [](Lit a, Lit b) { return a.code < b.code; });
      cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
      bool tautology = false;
      for (std::size_t i = 0; i + 1 < cl.size(); ++i) {
        if (cl[i].var() == cl[i + 1].var()) tautology = true;
      }
      if (tautology) continue;
      int ci = static_cast<int>(clauses_.size());
      for (Lit l : cl) occ_[l.code].push_back(ci);
      clauses_.push_back(std::move(cl));
    }
    n_true_.assign(clauses_.size(), 0);
    n_false_.assign(clauses_.size(), 0);
    unsat_ = static_cast<int>(clauses_.size());
    value_.assign(n_, -1);
  }

  Result run() {
    Result res;
    // a budget that is already gone never reports infeasibility it did not prove
    if (budget_.expired()) {
      res.status = SolveStatus::Timeout;
      return res;
    }
    if (root_propagate() && !timed_out_) search();
    undo(0);
    if (timed_out_) {
      res.status = SolveStatus::Timeout;
    } else if (found_) {
      res.status = SolveStatus::Optimal;
    } else {
      res.status = SolveStatus::Infeasible;
      return res;
    }
    if (found_) {
      res.has_assignment = true;
      res.assignment = best_;
      res.cost = canonical_cost(best_);
    }
    return res;
  }

 private:
  double canonical_cost(const std::vector<bool>& a) const {
    double c = 0.0;
    for (int v = 0; v < n_; ++v) {
      if (a[v]) c += cost_[v];
    }
    return c;
  }

  bool assign_one(Var v, bool val) {
    value_[v] = val ? 1 : 0;
    trail_.push_back(v);
    if (val) acc_ += cost_[v];
    int tcode = val ? Lit::pos(v).code : Lit::neg(v).code;
    for (int ci : occ_[tcode]) {
      if (n_true_[ci]++ == 0) --unsat_;
    }
    bool ok = true;
    for (int ci : occ_[tcode ^ 1]) {
      ++n_false_[ci];
      if (n_true_[ci] == 0) {
        int rem = static_cast<int>(clauses_[ci].size()) - n_false_[ci];
        if (rem == 0) ok = false;
        else if (rem == 1) units_.push_back(ci);
      }
    }
    return ok;
  }

  bool drain() {
    while (!units_.empty()) {
      int ci = units_.back();
      units_.pop_back();
      if (n_true_[ci] > 0) continue;
      Lit pending{-1};
      for (Lit l : clauses_[ci]) {
        if (value_[l.var()] < 0) {
          pending = l;
          break;
        }
      }
      if (pending.code < 0) return false;  // all literals false
      if (!assign_one(pending.var(), !pending.negative())) return false;
    }
    return true;
  }

  bool root_propagate() {
    units_.clear();
    for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
      if (clauses_[ci].empty()) return false;
      if (clauses_[ci].size() == 1) units_.push_back(static_cast<int>(ci));
    }
    return drain();
  }

  bool decide(Var v, bool val) {
    units_.clear();
    if (!assign_one(v, val)) return false;
    return drain();
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Var v = trail_.back();
      trail_.pop_back();
      bool val = value_[v] == 1;
      value_[v] = -1;
      if (val) acc_ -= cost_[v];
      int tcode = val ? Lit::pos(v).code : Lit::neg(v).code;
      for (int ci : occ_[tcode]) {
        if (--n_true_[ci] == 0) ++unsat_;
      }
      for (int ci : occ_[tcode ^ 1]) --n_false_[ci];
    }
  }

  bool positive_in_unsat(Var v) const {
    for (int ci : occ_[Lit::pos(v).code]) {
      if (n_true_[ci] == 0) return true;
    }
    return false;
  }

  void search() {
    if ((++nodes_ & 1023) == 0 && budget_.expired()) {
      timed_out_ = true;
      return;
    }
    if (found_ && acc_ >= best_cost_ - kCostTolerance) return;
    if (unsat_ == 0) {
      // every remaining variable completes to false at zero extra cost
      found_ = true;
      best_cost_ = acc_;
      best_.assign(n_, false);
      for (Var v = 0; v < n_; ++v) {
        if (value_[v] == 1) best_[v] = true;
      }
      return;
    }
    Var x = -1;
    for (Var v = 0; v < n_; ++v) {
      if (value_[v] < 0) {
        x = v;
        break;
      }
    }
    if (x < 0) return;  // cannot happen: an unsat clause always has an unassigned literal

    std::size_t mark = trail_.size();
    if (decide(x, false)) search();
    undo(mark);
    if (timed_out_) return;

    if (!positive_in_unsat(x)) return;
    if (found_ && acc_ + cost_[x] >= best_cost_ - kCostTolerance) return;
    mark = trail_.size();
    if (decide(x, true)) search();
    undo(mark);
  }

  const std::vector<double>& cost_;
  int n_;
  Budget budget_;
  std::vector<Clause> clauses_;
  std::vector<std::vector<int>> occ_;
  std::vector<int> n_true_, n_false_;
  std::vector<signed char> value_;
  std::vector<Var> trail_;
  std::vector<int> units_;
  double acc_ = 0.0;
  int unsat_ = 0;
  bool found_ = false;
  double best_cost_ = std::numeric_limits<double>::infinity();
  std::vector<bool> best_;
  bool timed_out_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Solver::Solver(MaxSatInstance inst) : inst_(std::move(inst)) {
  for (double c : inst_.cost) {
    if (c < 0.0) throw std::invalid_argument("negative soft cost");
  }
}

void Solver::add_hard(Clause c) {
  for (Lit l : c) {
    if (l.code < 0) throw std::invalid_argument("bad literal");
    while (l.var() >= inst_.num_vars()) inst_.new_var(0.0);
  }
  inst_.add_hard(std::move(c));
}

Result Solver::solve(const Budget& budget) { return Searcher(inst_, budget).run(); }

void write_wcnf(const MaxSatInstance& inst, std::ostream& os) {
  std::vector<std::pair<Var, long long>> soft;
  long long total = 0;
  for (Var v = 0; v < inst.num_vars(); ++v) {
    long long w = std::llround(inst.cost[v] * 1e6);
    if (w > 0) {
      soft.emplace_back(v, w);
      total += w;
    }
  }
  long long top = total + 1;
  os << "p wcnf " << inst.num_vars() << ' ' << inst.hard.size() + soft.size() << ' ' << top
     << '\n';
  for (const Clause& c : inst.hard) {
    os << top;
    for (Lit l : c) os << ' ' << (l.negative() ? -(l.var() + 1) : l.var() + 1);
    os << " 0\n";
  }
  for (auto [v, w] : soft) os << w << ' ' << -(v + 1) << " 0\n";
}

MaxSatInstance read_wcnf(std::istream& is) {
  MaxSatInstance inst;
  long long top = -1;
  std::string line;
  bool had_header = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      int nv = 0;
      long long nc = 0;
      if (!(ls >> p >> fmt >> nv >> nc >> top) || fmt != "wcnf") {
        throw std::runtime_error("bad wcnf header");
      }
      inst.cost.assign(nv, 0.0);
      had_header = true;
      continue;
    }
    if (!had_header) throw std::runtime_error("wcnf clause before header");
    long long w = 0;
    if (!(ls >> w)) throw std::runtime_error("bad wcnf clause");
    Clause c;
    long long lit = 0;
    while (ls >> lit && lit != 0) {
      Var v = static_cast<Var>(std::abs(lit) - 1);
      if (v >= inst.num_vars()) throw std::runtime_error("wcnf literal out of range");
      c.push_back(lit > 0 ? Lit::pos(v) : Lit::neg(v));
    }
    if (w == top) {
      inst.add_hard(std::move(c));
    } else {
      // soft costs are representable only as negative unit clauses
      if (c.size() != 1 || !c[0].negative()) {
        throw std::runtime_error("unsupported soft clause (want unit negative literal)");
      }
      inst.cost[c[0].var()] += static_cast<double>(w) / 1e6;
    }
  }
  if (!had_header) throw std::runtime_error("missing wcnf header");
  return inst;
}

}  // namespace lazex::maxsat
