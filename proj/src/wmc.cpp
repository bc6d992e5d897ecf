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

#include "lazex/wmc.hpp"

#include <algorithm>
#include <climits>
#include <ostream>
#include <stdexcept>

namespace lazex {

namespace {

constexpr int kTerminalVar = INT_MAX;

// 20 bits of variable, 22 bits per child
constexpr int kMaxVar = (1 << 20) - 1;
constexpr int kMaxRef = (1 << 22) - 1;

std::uint64_t node_key(int var, Bdd::Ref lo, Bdd::Ref hi) {
  return (static_cast<std::uint64_t>(var) << 44) |
         (static_cast<std::uint64_t>(lo) << 22) | static_cast<std::uint64_t>(hi);
}

std::uint64_t pair_key(Bdd::Ref a, Bdd::Ref b) {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

}  // namespace

Bdd::Bdd() {
  nodes_.push_back({kTerminalVar, kFalse, kFalse});
  nodes_.push_back({kTerminalVar, kTrue, kTrue});
}

Bdd::Ref Bdd::mk(int var, Ref lo, Ref hi) {
  if (lo == hi) return lo;
  if (var < 0 || var > kMaxVar || lo > kMaxRef || hi > kMaxRef) {
    throw std::length_error("bdd capacity exceeded");
  }
  std::uint64_t key = node_key(var, lo, hi);
  auto [it, fresh] = unique_.try_emplace(key, static_cast<Ref>(nodes_.size()));
  if (fresh) nodes_.push_back({var, lo, hi});
  return it->second;
}

Bdd::Ref Bdd::literal(int var, bool value) {
  return value ? mk(var, kFalse, kTrue) : mk(var, kTrue, kFalse);
}

Bdd::Ref Bdd::cube(const std::vector<FactLiteral>& lits) {
  Ref acc = kTrue;
  for (auto it = lits.rbegin(); it != lits.rend(); ++it) {
    acc = it->value ? mk(it->fact, kFalse, acc) : mk(it->fact, acc, kFalse);
  }
  return acc;
}

Bdd::Ref Bdd::disjoin(Ref a, Ref b) {
  if (a == kTrue || b == kTrue) return kTrue;
  if (a == kFalse) return b;
  if (b == kFalse) return a;
  if (a == b) return a;
  if (a > b) std::swap(a, b);
  std::uint64_t key = pair_key(a, b);
  if (auto it = or_memo_.find(key); it != or_memo_.end()) return it->second;

  int v = std::min(nodes_[a].var, nodes_[b].var);
  Ref alo = nodes_[a].var == v ? nodes_[a].lo : a;
  Ref ahi = nodes_[a].var == v ? nodes_[a].hi : a;
  Ref blo = nodes_[b].var == v ? nodes_[b].lo : b;
  Ref bhi = nodes_[b].var == v ? nodes_[b].hi : b;
  Ref r = mk(v, disjoin(alo, blo), disjoin(ahi, bhi));
  or_memo_.emplace(key, r);
  return r;
}

double Bdd::weighted_count(Ref r, const std::vector<double>& prob) const {
  std::unordered_map<Ref, double> memo;
  auto rec = [&](auto&& self, Ref n) -> double {
    if (n == kFalse) return 0.0;
    if (n == kTrue) return 1.0;
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    const Node& nd = nodes_[n];
    double p = prob.at(nd.var);
    double val = p * self(self, nd.hi) + (1.0 - p) * self(self, nd.lo);
    memo.emplace(n, val);
    return val;
  };
  return rec(rec, r);
}

void Bdd::write_dot(Ref root, const std::vector<std::string>& names,
                    std::ostream& os) const {
  os << "digraph bdd {\n";
  os << "  n0 [shape=box,label=\"0\"];\n";
  os << "  n1 [shape=box,label=\"1\"];\n";
  std::vector<Ref> stack{root};
  std::vector<char> seen(nodes_.size(), 0);
  while (!stack.empty()) {
    Ref n = stack.back();
    stack.pop_back();
    if (n <= kTrue || seen[n]) continue;
    seen[n] = 1;
    const Node& nd = nodes_[n];
    std::string label = nd.var < static_cast<int>(names.size())
                            ? names[nd.var]
                            : "v" + std::to_string(nd.var);
    os << "  n" << n << " [label=\"" << label << "\"];\n";
    os << "  n" << n << " -> n" << nd.lo << " [style=dashed];\n";
    os << "  n" << n << " -> n" << nd.hi << ";\n";
    stack.push_back(nd.lo);
    stack.push_back(nd.hi);
  }
  os << "}\n";
}

ExplanationDnf::ExplanationDnf(std::vector<double> fact_probs)
    : probs_(std::move(fact_probs)) {}

void ExplanationDnf::add(const Explanation& e) {
  if (!e.head_free()) throw std::invalid_argument("adding a non-head-free explanation");
  root_ = bdd_.disjoin(root_, bdd_.cube(e.facts));
  cached_ = bdd_.weighted_count(root_, probs_);
  explanations_.push_back(e);
}

std::pair<double, double> bounds(const ExplanationDnf& query_side,
                                 const ExplanationDnf& not_query_side) {
  auto clamp01 = [](double v) { return std::min(1.0, std::max(0.0, v)); };
  return {clamp01(query_side.probability()), clamp01(1.0 - not_query_side.probability())};
}

}  // namespace lazex
