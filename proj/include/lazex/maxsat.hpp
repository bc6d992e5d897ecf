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

#ifndef LAZEX_MAXSAT_HPP
#define LAZEX_MAXSAT_HPP

#include <chrono>
#include <iosfwd>
#include <limits>
#include <optional>
#include <vector>

// Exact weighted partial MAX-SAT by branch and bound: satisfy all hard
// clauses while minimizing the summed cost of variables assigned true.
namespace lazex::maxsat {

using Var = int;

struct Lit {
  int code = -1;  // (var << 1) | negated

  constexpr Lit() = default;
  constexpr explicit Lit(int c) : code(c) {}
  static constexpr Lit pos(Var v) { return Lit(v << 1); }
  static constexpr Lit neg(Var v) { return Lit((v << 1) | 1); }
  constexpr Var var() const { return code >> 1; }
  constexpr bool negative() const { return (code & 1) != 0; }
  constexpr Lit operator~() const { return Lit(code ^ 1); }
  constexpr bool operator==(const Lit&) const = default;
};

using Clause = std::vector<Lit>;

// Hard clauses plus a nonnegative cost per variable, charged when the
// variable is assigned true. Costs are negative log-probabilities.
struct MaxSatInstance {
  std::vector<double> cost;
  std::vector<Clause> hard;

  int num_vars() const { return static_cast<int>(cost.size()); }
  Var new_var(double c = 0.0) {
    cost.push_back(c);
    return static_cast<Var>(cost.size() - 1);
  }
  void add_hard(Clause c) { hard.push_back(std::move(c)); }
};

struct Budget {
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static Budget unlimited() { return {}; }
  static Budget at(std::chrono::steady_clock::time_point t) { return Budget{t}; }
  static Budget seconds(double s) {
    return Budget{std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(s))};
  }
  bool expired() const {
    return deadline && std::chrono::steady_clock::now() >= *deadline;
  }
};

enum class SolveStatus { Optimal, Infeasible, Timeout };

struct Result {
  SolveStatus status = SolveStatus::Infeasible;
  bool has_assignment = false;           // incumbent available (always for Optimal)
  std::vector<bool> assignment;
  double cost = std::numeric_limits<double>::infinity();
};

// Cost comparisons use this absolute tolerance; the incumbent is replaced
// only on strict improvement, so equal-cost optima resolve to the first
// one met, which is the lexicographically smallest assignment (variables
// in index order, false < true).
inline constexpr double kCostTolerance = 1e-12;

class Solver {
 public:
  explicit Solver(MaxSatInstance inst);

  // Clauses added between solves constrain all later solves; results
  // already returned are unaffected.
  void add_hard(Clause c);

  Result solve(const Budget& budget = Budget::unlimited());

  const MaxSatInstance& instance() const { return inst_; }

 private:
  MaxSatInstance inst_;
};

// WCNF-style text format: "p wcnf <vars> <clauses> <top>", hard clauses
// carry the sentinel weight, soft costs appear as unit clauses "<w> -v 0"
// with integer weights scaled by 1e6.
void write_wcnf(const MaxSatInstance& inst, std::ostream& os);
MaxSatInstance read_wcnf(std::istream& is);

}  // namespace lazex::maxsat

#endif  // LAZEX_MAXSAT_HPP
