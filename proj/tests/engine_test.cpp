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

#include <cmath>
#include <vector>

#include "lazex/engine.hpp"
#include "lazex/oracle.hpp"
#include "testutil.hpp"

using namespace lazex;

namespace {

Engine toy_engine() {
  return Engine(parse_program(test::kToyText), parse_atom("p(1,4)"));
}

EngineOptions exhaustive() {
  EngineOptions opt;
  opt.explanation_cap = 1000;
  opt.epsilon = 0.0;
  return opt;
}

}  // namespace

TEST_CASE("bucket thresholds") {
  CHECK(bucket(0.424, 0.424) == Bucket::AlmostExact);
  CHECK(bucket(0.42, 0.4299) == Bucket::AlmostExact);
  CHECK(bucket(0.4, 0.55) == Bucket::TightBound);
  CHECK(bucket(0.4, 0.649) == Bucket::TightBound);
  CHECK(bucket(0.4, 0.66) == Bucket::LooseBound);
  CHECK(bucket(0.0, 0.9999) == Bucket::LooseBound);
  CHECK(bucket(0.0, 1.0) == Bucket::NoAnswer);
}

TEST_CASE("status strings") {
  CHECK(std::string(to_string(Bucket::AlmostExact)) == "almost_exact");
  CHECK(std::string(to_string(Bucket::TightBound)) == "tight_bound");
  CHECK(std::string(to_string(Bucket::LooseBound)) == "loose_bound");
  CHECK(std::string(to_string(Bucket::NoAnswer)) == "no_answer");
  CHECK(std::string(to_string(Terminal::Exact)) == "exact");
  CHECK(std::string(to_string(Terminal::Converged)) == "converged");
  CHECK(std::string(to_string(Terminal::BudgetExhausted)) == "budget_exhausted");
}

TEST_CASE("toy runs to exactness") {
  Engine engine = toy_engine();
  Trace tr = engine.run(exhaustive());

  CHECK(tr.terminal == Terminal::Exact);
  CHECK(tr.bucket == Bucket::AlmostExact);
  CHECK(tr.lower == doctest::Approx(0.424).epsilon(1e-9));
  CHECK(tr.upper == doctest::Approx(0.424).epsilon(1e-9));
  CHECK(tr.query_exhausted);
  CHECK(tr.not_query_exhausted);
  CHECK(tr.rules_added == 4);
  CHECK(tr.expansions == 3);

  REQUIRE(tr.events.size() == 6);
  const Target Q = Target::Query;
  const Target N = Target::NotQuery;
  const std::vector<Target> sides{Q, N, N, Q, N, N};
  const std::vector<double> probs{0.4, 0.45, 0.3, 0.04, 0.18, 0.12};
  const std::vector<double> lowers{0.4, 0.4, 0.4, 0.424, 0.424, 0.424};
  const std::vector<double> uppers{1.0, 0.55, 0.52, 0.52, 0.43, 0.424};
  for (std::size_t i = 0; i < 6; ++i) {
    CAPTURE(i);
    CHECK(tr.events[i].index == static_cast<int>(i) + 1);
    CHECK(tr.events[i].side == sides[i]);
    CHECK(tr.events[i].explanation.probability == doctest::Approx(probs[i]).epsilon(1e-9));
    CHECK(tr.events[i].lower == doctest::Approx(lowers[i]).epsilon(1e-9));
    CHECK(tr.events[i].upper == doctest::Approx(uppers[i]).epsilon(1e-9));
    if (i > 0) CHECK(tr.events[i].seconds >= tr.events[i - 1].seconds);
  }
  CHECK(tr.seconds >= tr.events.back().seconds);
}

TEST_CASE("the default epsilon reports convergence") {
  Engine engine = toy_engine();
  // budget mode with the default epsilon: the gap hits zero after the last
  // refutation and the run stops before discovering exhaustion
  EngineOptions opt;
  Trace tr = engine.run(opt);
  CHECK(tr.terminal == Terminal::Converged);
  CHECK(tr.events.size() == 6);
  CHECK(tr.lower == doctest::Approx(0.424).epsilon(1e-9));
  CHECK(tr.upper == doctest::Approx(0.424).epsilon(1e-9));
  CHECK_FALSE(tr.query_exhausted);
  CHECK_FALSE(tr.not_query_exhausted);
}

TEST_CASE("a loose epsilon stops early") {
  Engine engine = toy_engine();
  EngineOptions opt = exhaustive();
  opt.epsilon = 0.2;
  Trace tr = engine.run(opt);
  CHECK(tr.terminal == Terminal::Converged);
  CHECK(tr.events.size() == 2);
  CHECK(tr.lower == doctest::Approx(0.4).epsilon(1e-9));
  CHECK(tr.upper == doctest::Approx(0.55).epsilon(1e-9));
  CHECK(tr.bucket == Bucket::TightBound);
}

TEST_CASE("a zero budget yields the trivial bounds") {
  Engine engine = toy_engine();
  EngineOptions opt;
  opt.budget_seconds = 0.0;
  Trace tr = engine.run(opt);
  CHECK(tr.terminal == Terminal::BudgetExhausted);
  CHECK(tr.events.empty());
  CHECK(tr.lower == 0.0);
  CHECK(tr.upper == 1.0);
  CHECK(tr.bucket == Bucket::NoAnswer);
}

TEST_CASE("the explanation cap is a hard ceiling") {
  Engine engine = toy_engine();
  EngineOptions opt = exhaustive();
  opt.explanation_cap = 1;
  Trace tr = engine.run(opt);
  CHECK(tr.terminal == Terminal::BudgetExhausted);
  REQUIRE(tr.events.size() == 1);
  CHECK(tr.events[0].side == Target::Query);
  CHECK(tr.lower == doctest::Approx(0.4).epsilon(1e-9));
  CHECK(tr.upper == 1.0);
  CHECK(tr.bucket == Bucket::LooseBound);

  opt.explanation_cap = 0;
  CHECK(engine.run(opt).events.empty());
}

TEST_CASE("eager mode finds the same answer the expensive way") {
  Engine engine = toy_engine();
  Trace lazy = engine.run(exhaustive());
  EngineOptions opt = exhaustive();
  opt.lazy = false;
  Trace eager = engine.run(opt);

  CHECK(eager.terminal == Terminal::Exact);
  CHECK(eager.rules_added == 4);
  CHECK(eager.expansions == 0);
  REQUIRE(eager.events.size() == lazy.events.size());
  for (std::size_t i = 0; i < eager.events.size(); ++i) {
    CHECK(eager.events[i].side == lazy.events[i].side);
    CHECK(eager.events[i].explanation == lazy.events[i].explanation);
    CHECK(eager.events[i].lower == doctest::Approx(lazy.events[i].lower).epsilon(1e-12));
    CHECK(eager.events[i].upper == doctest::Approx(lazy.events[i].upper).epsilon(1e-12));
  }
}

TEST_CASE("laziness leaves irrelevant heads closed") {
  GroundProgram p = parse_program(
      "0.5::a.\n0.5::b.\nq :- a.\nq :- a, h.\nh :- b.\nquery(q).\n");
  Engine engine(p, parse_atom("q"));

  Trace lazy = engine.run(exhaustive());
  CHECK(lazy.terminal == Terminal::Exact);
  CHECK(lazy.lower == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(lazy.upper == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(lazy.events.size() == 2);
  CHECK(lazy.rules_added == 2);  // h :- b never enters the encoding
  CHECK(lazy.expansions == 1);

  EngineOptions opt = exhaustive();
  opt.lazy = false;
  Trace eager = engine.run(opt);
  CHECK(eager.rules_added == 3);
  CHECK(eager.lower == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(eager.upper == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("repeat runs are identical") {
  Engine engine = toy_engine();
  Trace a = engine.run(exhaustive());
  Trace b = engine.run(exhaustive());
  REQUIRE(a.events.size() == b.events.size());
  for (std::size_t i = 0; i < a.events.size(); ++i) {
    CHECK(a.events[i].side == b.events[i].side);
    CHECK(a.events[i].explanation == b.events[i].explanation);
    CHECK(a.events[i].lower == b.events[i].lower);
    CHECK(a.events[i].upper == b.events[i].upper);
  }
  CHECK(a.terminal == b.terminal);
  CHECK(a.lower == b.lower);
  CHECK(a.upper == b.upper);
}

TEST_CASE("the event hook sees every event") {
  Engine engine = toy_engine();
  std::vector<Event> seen;
  EngineOptions opt = exhaustive();
  opt.on_event = [&](const Event& e) { seen.push_back(e); };
  Trace tr = engine.run(opt);
  REQUIRE(seen.size() == tr.events.size());
  for (std::size_t i = 0; i < seen.size(); ++i) {
    CHECK(seen[i].index == tr.events[i].index);
    CHECK(seen[i].explanation == tr.events[i].explanation);
  }
}

TEST_CASE("construction rejects bad inputs") {
  GroundProgram cyclic = parse_program("0.5::a.\nq :- r.\nr :- q, a.\nquery(q).\n");
  CHECK_THROWS_AS(Engine(cyclic, parse_atom("q")), std::invalid_argument);

  GroundProgram fine = parse_program("0.5::a.\nquery(a).\n");
  CHECK_THROWS_AS(Engine(fine, parse_atom("b")), std::invalid_argument);
  CHECK_NOTHROW(Engine(fine, parse_atom("a")));
}

TEST_CASE("degenerate probabilities collapse immediately") {
  {
    Engine engine(parse_program("0.0::a.\nquery(a).\n"), parse_atom("a"));
    Trace tr = engine.run(exhaustive());
    CHECK(tr.terminal == Terminal::Exact);
    CHECK(tr.lower == 0.0);
    CHECK(tr.upper == 0.0);
    REQUIRE(tr.events.size() == 1);
    CHECK(tr.events[0].side == Target::NotQuery);
    CHECK(tr.events[0].explanation.facts.empty());
  }
  {
    Engine engine(parse_program("1.0::a.\nquery(a).\n"), parse_atom("a"));
    Trace tr = engine.run(exhaustive());
    CHECK(tr.terminal == Terminal::Exact);
    CHECK(tr.lower == 1.0);
    CHECK(tr.upper == 1.0);
    REQUIRE(tr.events.size() == 1);
    CHECK(tr.events[0].side == Target::Query);
  }
  {
    Engine engine(parse_program("0.8::a.\nquery(a).\n"), parse_atom("a"));
    Trace tr = engine.run(exhaustive());
    CHECK(tr.terminal == Terminal::Exact);
    CHECK(tr.lower == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(tr.upper == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(tr.events.size() == 2);
  }
}

TEST_CASE("exhaustive runs land on the oracle") {
  for (const test::CorpusEntry& entry : test::small_corpus(12)) {
    CAPTURE(entry.name);
    Engine engine(entry.program, entry.program.queries.at(0));
    Trace tr = engine.run(exhaustive());
    double exact = oracle::exact_probability(entry.program, entry.program.queries.at(0));
    CHECK(tr.terminal == Terminal::Exact);
    CHECK(tr.lower == doctest::Approx(exact).epsilon(1e-6));
    CHECK(tr.upper == doctest::Approx(exact).epsilon(1e-6));
    CHECK(std::abs(tr.upper - tr.lower) <= 1e-9);
  }
}
