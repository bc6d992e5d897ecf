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

#include <string>

#include "lazex/oracle.hpp"
#include "lazex/program.hpp"
#include "testutil.hpp"

using namespace lazex;

TEST_CASE("toy exact probability") {
  GroundProgram p = parse_program(test::kToyText);
  CHECK(oracle::exact_probability(p, parse_atom("p(1,4)")) == doctest::Approx(0.424).epsilon(1e-9));
  CHECK(oracle::exact_probability(p, parse_atom("p(2,4)")) == doctest::Approx(0.5));
  CHECK(oracle::exact_probability(p, parse_atom("e(1,2)")) == doctest::Approx(0.8));
  // atoms that never occur are false everywhere
  CHECK(oracle::exact_probability(p, parse_atom("nothing")) == 0.0);
}

TEST_CASE("world probabilities sum to one") {
  GroundProgram p = parse_program(test::kToyText);
  double total = 0.0;
  for (std::uint64_t m = 0; m < 16; ++m) {
    total += oracle::world_probability(p, oracle::World::from_mask(m, 4));
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("entailment in single worlds") {
  GroundProgram p = parse_program(test::kToyText);
  ProgramIndex ix(p);
  Atom q = parse_atom("p(1,4)");

  // facts ordered e(1,2) e(1,3) e(2,4) e(3,4); bit i = fact i
  CHECK(oracle::entails(ix, oracle::World::from_mask(0b1111, 4), q));
  CHECK(oracle::entails(ix, oracle::World::from_mask(0b0101, 4), q));   // e12, e24
  CHECK(oracle::entails(ix, oracle::World::from_mask(0b1010, 4), q));   // e13, e34
  CHECK_FALSE(oracle::entails(ix, oracle::World::from_mask(0b0011, 4), q));
  CHECK_FALSE(oracle::entails(ix, oracle::World::from_mask(0b0000, 4), q));
  CHECK(oracle::entails(ix, oracle::World::from_mask(0b0001, 4), parse_atom("e(1,2)")));
}

TEST_CASE("query table matches per-world entailment") {
  GroundProgram p = parse_program(test::kToyText);
  ProgramIndex ix(p);
  Atom q = parse_atom("p(1,4)");
  std::vector<bool> table = oracle::query_table(ix, q);
  REQUIRE(table.size() == 16);
  double from_table = 0.0;
  for (std::uint64_t m = 0; m < 16; ++m) {
    oracle::World w = oracle::World::from_mask(m, 4);
    CHECK(table[m] == oracle::entails(ix, w, q));
    if (table[m]) from_table += oracle::world_probability(p, w);
  }
  CHECK(from_table == doctest::Approx(0.424).epsilon(1e-12));
}

TEST_CASE("is_explanation") {
  GroundProgram p = parse_program(test::kToyText);
  Atom q = parse_atom("p(1,4)");

  Explanation both = make_explanation(p, {{0, true}, {2, true}});  // e12, e24
  CHECK(oracle::is_explanation(p, both, q, Target::Query));
  CHECK_FALSE(oracle::is_explanation(p, both, q, Target::NotQuery));

  Explanation lone = make_explanation(p, {{0, true}});
  CHECK_FALSE(oracle::is_explanation(p, lone, q, Target::Query));

  Explanation refute = make_explanation(p, {{1, false}, {2, false}});  // not e13, not e24
  CHECK(oracle::is_explanation(p, refute, q, Target::NotQuery));

  Explanation empty;
  CHECK_FALSE(oracle::is_explanation(p, empty, q, Target::Query));
  CHECK_FALSE(oracle::is_explanation(p, empty, q, Target::NotQuery));
}

TEST_CASE("enumeration guard") {
  std::string text;
  for (int i = 0; i < 25; ++i) {
    text += "0.5::f" + std::to_string(i) + ".\n";
  }
  text += "query(f0).\n";
  GroundProgram p = parse_program(text);
  CHECK_THROWS_AS((void)oracle::exact_probability(p, parse_atom("f0")),
                  oracle::GuardExceeded);
  CHECK(oracle::exact_probability(p, parse_atom("f0"), 25) == doctest::Approx(0.5));
}

TEST_CASE("normalization preserves the distribution") {
  for (const char* text : {
           "1.0::a.\n0.5::b.\nq :- a, b.\nquery(q).\n",
           "0.0::a.\n0.5::b.\nq :- a.\nq :- b.\nquery(q).\n",
           "1.0::a.\n0.5::b.\nq :- \\+a, b.\nquery(q).\n",
           "0.0::a.\n0.5::b.\nq :- \\+a, b.\nquery(q).\n",
           "1.0::a.\nquery(a).\n",
       }) {
    GroundProgram p = parse_program(text);
    Atom q = p.queries.front();
    CHECK(oracle::exact_probability(normalize(p), q) ==
          doctest::Approx(oracle::exact_probability(p, q)).epsilon(1e-12));
  }
}

TEST_CASE("minimal explanation enumeration on the toy") {
  GroundProgram p = parse_program(test::kToyText);
  ProgramIndex ix(p);
  std::vector<bool> table = oracle::query_table(ix, parse_atom("p(1,4)"));

  auto qs = test::minimal_explanations(table, 4, Target::Query);
  REQUIRE(qs.size() == 2);
  CHECK(qs[0] == test::MaskExplanation{0b0101, 0b0101});  // e12, e24
  CHECK(qs[1] == test::MaskExplanation{0b1010, 0b1010});  // e13, e34
  CHECK(test::mask_probability(p, qs[0]) == doctest::Approx(0.4));
  CHECK(test::mask_probability(p, qs[1]) == doctest::Approx(0.04));

  auto ns = test::minimal_explanations(table, 4, Target::NotQuery);
  REQUIRE(ns.size() == 4);
  for (const auto& m : ns) {
    CHECK(oracle::is_explanation(p, test::to_explanation(p, m), parse_atom("p(1,4)"),
                                 Target::NotQuery));
  }
}
