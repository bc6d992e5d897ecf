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

#ifndef LAZEX_WMC_HPP
#define LAZEX_WMC_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lazex/explanation.hpp"

namespace lazex {

// Reduced ordered BDD with a hash-consed unique table. Variables are fact
// positions; the order is fixed to ascending position, i.e. source order.
// Node handles stay valid for the lifetime of the Bdd.
class Bdd {
 public:
  using Ref = int;
  static constexpr Ref kFalse = 0;
  static constexpr Ref kTrue = 1;

  Bdd();

  // Canonical node; collapses lo == hi and reuses structurally equal nodes.
  Ref mk(int var, Ref lo, Ref hi);
  Ref literal(int var, bool value);

  // Conjunction of fact literals, e.g. one explanation.
  Ref cube(const std::vector<FactLiteral>& lits);

  // Disjunction, memoized across calls.
  Ref disjoin(Ref a, Ref b);

  // Probability that a random world satisfies the function: one bottom-up
  // pass with p(var) branch weights.
  double weighted_count(Ref r, const std::vector<double>& prob) const;

  int var(Ref r) const { return nodes_[r].var; }
  Ref lo(Ref r) const { return nodes_[r].lo; }
  Ref hi(Ref r) const { return nodes_[r].hi; }
  std::size_t size() const { return nodes_.size(); }

  // Graphviz dump; `names` labels variables (may be empty for v<i> labels).
  void write_dot(Ref root, const std::vector<std::string>& names, std::ostream& os) const;

 private:
  struct Node {
    int var;
    Ref lo;
    Ref hi;
  };

  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, Ref> unique_;
  std::unordered_map<std::uint64_t, Ref> or_memo_;
};

// Running disjunction of the head-free explanations found for one target,
// with its probability kept current.
class ExplanationDnf {
 public:
  // One probability per fact, indexed by fact position.
  explicit ExplanationDnf(std::vector<double> fact_probs);

  // Disjoins the explanation in; the probability never decreases.
  void add(const Explanation& e);

  double probability() const { return cached_; }
  const std::vector<Explanation>& explanations() const { return explanations_; }
  const Bdd& diagram() const { return bdd_; }
  Bdd::Ref root() const { return root_; }

 private:
  std::vector<double> probs_;
  Bdd bdd_;
  Bdd::Ref root_ = Bdd::kFalse;
  std::vector<Explanation> explanations_;
  double cached_ = 0.0;
};

// (lower, upper) from the two sides: the q-side mass directly, and one
// minus the refuting mass. Each clamped into [0,1].
std::pair<double, double> bounds(const ExplanationDnf& query_side,
                                 const ExplanationDnf& not_query_side);

}  // namespace lazex

#endif  // LAZEX_WMC_HPP
