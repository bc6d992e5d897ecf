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

#include <doctest.h>

#include <algorithm>
#include <utility>

#include "lazex/program.hpp"
#include "testutil.hpp"

using namespace lazex;

TEST_CASE("toy program parses") {
  GroundProgram p = parse_program(test::kToyText);
  REQUIRE(p.facts.size() == 4);
  REQUIRE(p.rules.size() == 4);
  REQUIRE(p.queries.size() == 1);
  CHECK(p.facts[0].atom.str() == "e(1,2)");
  CHECK(p.facts[0].prob == doctest::Approx(0.8));
  CHECK(p.facts[3].prob == doctest::Approx(0.4));
  CHECK(p.rules[0].head.str() == "p(1,4)");
  REQUIRE(p.rules[0].body.size() == 2);
  CHECK(p.rules[0].body[0].atom.str() == "e(1,2)");
  CHECK(p.rules[0].body[0].positive);
  CHECK(p.queries[0].str() == "p(1,4)");
}

TEST_CASE("round trip through to_text") {
  GroundProgram p = parse_program(test::kToyText);
  CHECK(parse_program(to_text(p)) == p);
}

TEST_CASE("comments, whitespace, zero-arg atoms, negation") {
  GroundProgram p = parse_program(
      "% a comment\n"
      "  0.25 :: a .  % trailing comment\n"
      "q :- \\+ a, b.\n"
      "0.75::b.\n"
      "query( q ).\n");
  REQUIRE(p.facts.size() == 2);
  CHECK(p.facts[0].atom.args.empty());
  REQUIRE(p.rules.size() == 1);
  CHECK_FALSE(p.rules[0].body[0].positive);
  CHECK(p.rules[0].body[1].positive);
}

TEST_CASE("parse errors carry positions") {
  auto bad = [](const char* text) {
    try {
      parse_program(text);
      return std::pair{-1, -1};
    } catch (const ParseError& e) {
      return std::pair{e.line(), e.column()};
    }
  };

  // the missing dot is noticed at the next token
  CHECK(bad("0.5::a\nquery(a).\n") == std::pair{2, 1});
  CHECK(bad("1.5::a.\n").first == 1);               // probability out of range
  CHECK(bad("0.5::a.\n0.5::a.\n").first == 2);      // duplicate fact
  CHECK(bad("query :- a.\n") == std::pair{1, 7});   // reserved word wants '('
  CHECK(bad("q :- .\n").first == 1);                // empty body
  CHECK(bad("q.\n").first == 1);                    // bare atom is not a clause
  CHECK(bad("0.5::a. junk").first == 1);
  CHECK(bad("0.5::a(1,.\n").first == 1);            // broken argument list
  CHECK_THROWS_AS((void)parse_atom("p(1,"), ParseError);
  CHECK_THROWS_AS((void)parse_atom("p(1) extra"), ParseError);
}

TEST_CASE("validation kinds") {
  auto kinds = [](const char* text) {
    std::vector<Violation::Kind> ks;
    for (const Violation& v : validate(parse_program(text)).violations) {
      ks.push_back(v.kind);
    }
    return ks;
  };

  CHECK(validate(parse_program(test::kToyText)).ok());
  CHECK(kinds("0.5::a.\na :- b.\n0.2::b.\nquery(a).\n") ==
        std::vector{Violation::Kind::FactAndDefined});
  CHECK(kinds("0.5::a.\np :- q.\nq :- p.\nquery(a).\n") ==
        std::vector{Violation::Kind::PositiveCycle});
  CHECK(kinds("0.5::a.\nr :- a.\nq :- \\+r.\nquery(q).\n") ==
        std::vector{Violation::Kind::NegatedNonFact});
  CHECK(kinds("0.5::a.\nquery(z).\n") == std::vector{Violation::Kind::UnknownQuery});
  CHECK(kinds("p :- p.\n0.5::a.\nquery(a).\n") ==
        std::vector{Violation::Kind::PositiveCycle});
}

TEST_CASE("normalize removes deterministic facts") {
  SUBCASE("prob 1 fact becomes true") {
    GroundProgram n = normalize(parse_program("1.0::a.\n0.5::b.\nq :- a, b.\nquery(q).\n"));
    REQUIRE(n.facts.size() == 1);
    CHECK(n.facts[0].atom.str() == "b");
    REQUIRE(n.rules.size() == 1);
    REQUIRE(n.rules[0].body.size() == 1);
    CHECK(n.rules[0].body[0].atom.str() == "b");
  }
  SUBCASE("prob 0 fact drops depending rules") {
    GroundProgram n =
        normalize(parse_program("0.0::a.\n0.5::b.\nq :- a.\nq :- b.\nquery(q).\n"));
    REQUIRE(n.rules.size() == 1);
    CHECK(n.rules[0].body[0].atom.str() == "b");
  }
  SUBCASE("negated prob 1 fact drops the rule") {
    GroundProgram n =
        normalize(parse_program("1.0::a.\n0.5::b.\nq :- \\+a, b.\nquery(q).\n"));
    CHECK(n.rules.empty());
  }
  SUBCASE("negated prob 0 fact vanishes from the body") {
    GroundProgram n =
        normalize(parse_program("0.0::a.\n0.5::b.\nq :- \\+a, b.\nquery(q).\n"));
    REQUIRE(n.rules.size() == 1);
    REQUIRE(n.rules[0].body.size() == 1);
    CHECK(n.rules[0].body[0].atom.str() == "b");
  }
  SUBCASE("queried prob 1 atom stays derivable") {
    GroundProgram n = normalize(parse_program("1.0::a.\nquery(a).\n"));
    CHECK(n.facts.empty());
    REQUIRE(n.rules.size() == 1);
    CHECK(n.rules[0].head.str() == "a");
    CHECK(n.rules[0].body.empty());
  }
  SUBCASE("idempotent and a fixpoint on the toy") {
    GroundProgram toy = parse_program(test::kToyText);
    CHECK(normalize(toy) == toy);
    GroundProgram once =
        normalize(parse_program("1.0::a.\n0.5::b.\nq :- a, b.\nquery(q).\n"));
    CHECK(normalize(once) == once);
  }
}

TEST_CASE("program index") {
  GroundProgram p = parse_program(test::kToyText);
  ProgramIndex ix(p);

  REQUIRE(ix.num_atoms() == 7);
  REQUIRE(ix.num_facts() == 4);
  // first-occurrence order: the four facts, then heads/bodies
  CHECK(ix.atom(0).str() == "e(1,2)");
  CHECK(ix.atom(3).str() == "e(3,4)");
  CHECK(ix.atom(4).str() == "p(1,4)");
  CHECK(ix.atom(5).str() == "p(2,4)");
  CHECK(ix.atom(6).str() == "p(3,4)");
  CHECK(ix.atom_id(parse_atom("p(2,4)")) == 5);
  CHECK(ix.atom_id(parse_atom("missing")) == -1);

  CHECK(ix.is_fact(0));
  CHECK(ix.fact_index(2) == 2);
  CHECK(ix.fact_atom_id(2) == 2);
  CHECK(ix.is_derived(4));
  CHECK_FALSE(ix.is_derived(0));

  CHECK(ix.rules_of(4) == std::vector{0, 1});
  CHECK(ix.rules_of(5) == std::vector{2});
  CHECK(ix.rules_of(0).empty());

  // dependencies precede dependents
  const std::vector<int>& topo = ix.derived_topo();
  auto pos = [&](int id) {
    return std::find(topo.begin(), topo.end(), id) - topo.begin();
  };
  CHECK(topo.size() == 3);
  CHECK(pos(5) < pos(4));
  CHECK(pos(6) < pos(4));

  CHECK(ix.reachable_derived(4) == std::vector{4, 5, 6});
  CHECK(ix.reachable_derived(5) == std::vector{5});
  CHECK(ix.reachable_derived(0).empty());
}

TEST_CASE("format_double is shortest round trip") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(0.424) == "0.424");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(0.1) == "0.1");
}
