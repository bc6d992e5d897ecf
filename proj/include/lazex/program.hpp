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

#ifndef LAZEX_PROGRAM_HPP
#define LAZEX_PROGRAM_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lazex {

// A ground atom: lowercase functor plus constant arguments, e.g. e(1,2).
struct Atom {
  std::string name;
  std::vector<std::string> args;

  bool operator==(const Atom&) const = default;
  std::string str() const;
};

struct AtomHash {
  std::size_t operator()(const Atom& a) const;
};

// Body literal; negation is only legal on probabilistic facts (see validate).
struct BodyLiteral {
  Atom atom;
  bool positive = true;

  bool operator==(const BodyLiteral&) const = default;
};

struct ProbFact {
  Atom atom;
  double prob = 0.0;

  bool operator==(const ProbFact&) const = default;
};

struct Rule {
  Atom head;
  std::vector<BodyLiteral> body;  // may be empty after normalize

  bool operator==(const Rule&) const = default;
};

// Parsed ground program. Facts, rules and queries keep source order.
struct GroundProgram {
  std::vector<ProbFact> facts;
  std::vector<Rule> rules;
  std::vector<Atom> queries;

  bool operator==(const GroundProgram&) const = default;
  bool empty() const { return facts.empty() && rules.empty() && queries.empty(); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Parses the textual program format:
//
//   program   := (fact | rule | query)*
//   fact      := FLOAT "::" atom "."
//   rule      := atom ":-" literal ("," literal)* "."
//   literal   := atom | "\+" atom
//   query     := "query(" atom ")."
//
// '%' starts a line comment, whitespace is insignificant, FLOAT must lie
// in [0,1]. Throws ParseError with 1-based line/column on bad input, on a
// duplicate probabilistic fact, and on out-of-range probabilities.
GroundProgram parse_program(std::string_view text);

// Parses a single atom written as in the program syntax, e.g. "p(1,4)".
Atom parse_atom(std::string_view text);

// Prints a program in the surface syntax. For parser output the result
// re-parses to an equal program. Empty rule bodies (which only normalize
// introduces) are printed as "head :- true." and do not re-parse.
std::string to_text(const GroundProgram& p);

struct Violation {
  enum class Kind {
    FactAndDefined,   // atom is both a probabilistic fact and a rule head
    PositiveCycle,    // cyclic dependency among defined atoms
    NegatedNonFact,   // \+ applied to a non-fact atom
    UnknownQuery,     // query atom is neither fact nor defined
  };
  Kind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string str() const;
};

// Checks the structural invariants. Total: reports violations as data and
// never throws on parser output.
ValidationReport validate(const GroundProgram& p);

// Removes deterministic facts. prob=1 facts become true in rule bodies,
// prob=0 facts false (dropping rules that positively depend on them);
// queried prob=1 atoms are kept derivable through an empty-body rule.
// All remaining facts have prob in (0,1). Idempotent. Requires validate ok.
GroundProgram normalize(const GroundProgram& p);

// Index over a validated program: dense atom ids in first-occurrence order
// (facts, then rule heads and bodies, then queries), rule lists per head,
// and a topological order of the non-fact atoms.
class ProgramIndex {
 public:
  explicit ProgramIndex(const GroundProgram& p);

  const GroundProgram& program() const { return *program_; }
  int num_atoms() const { return static_cast<int>(atoms_.size()); }
  int atom_id(const Atom& a) const;  // -1 if the atom does not occur
  const Atom& atom(int id) const { return atoms_[id]; }

  bool is_fact(int id) const { return fact_index_[id] >= 0; }
  int fact_index(int id) const { return fact_index_[id]; }
  int fact_atom_id(int fact) const { return fact_atom_[fact]; }
  int num_facts() const { return static_cast<int>(fact_atom_.size()); }

  // Non-fact atoms are "derived": defined by rules, or false if they have
  // none. Facts are never derived.
  bool is_derived(int id) const { return fact_index_[id] < 0; }
  const std::vector<int>& rules_of(int id) const { return rules_[id]; }

  // Derived atom ids with every body dependency before its head.
  const std::vector<int>& derived_topo() const { return topo_; }

  // Derived atoms reachable from `from` through rule bodies, including
  // `from` itself when derived. Sorted by atom id.
  std::vector<int> reachable_derived(int from) const;

 private:
  const GroundProgram* program_;
  std::vector<Atom> atoms_;
  std::unordered_map<Atom, int, AtomHash> ids_;
  std::vector<int> fact_index_;  // per atom id, -1 for non-facts
  std::vector<int> fact_atom_;   // per fact position
  std::vector<std::vector<int>> rules_;
  std::vector<int> topo_;
};

// Shortest round-trip formatting for probabilities and bounds.
std::string format_double(double v);

}  // namespace lazex

#endif  // LAZEX_PROGRAM_HPP
