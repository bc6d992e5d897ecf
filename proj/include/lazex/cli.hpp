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

#ifndef LAZEX_CLI_HPP
#define LAZEX_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "lazex/engine.hpp"
#include "lazex/oracle.hpp"

namespace lazex {

// Everything the subcommands need; argv parsing fills this in.
struct RunConfig {
  std::string input_path;
  std::string query;  // empty: first query(...) declaration in the file

  bool lazy = true;
  double budget_seconds = 900.0;
  std::optional<int> cap;  // explanation cap; set implies deterministic mode
  double epsilon = 1e-6;
  std::string format = "text";  // "text" | "ndjson"
  bool dump_wcnf = false;       // instances to the error stream
  bool dump_bdd = false;        // final diagrams to the error stream

  int max_facts = oracle::kDefaultGuard;  // exact enumeration guard

  std::uint64_t seed = 1;  // bench
  int queries = 10;
  int layers = 4;
  int width = 3;
  double density = 0.5;
};

// The pinned one-line result format:
// lower=0.424 upper=0.424 status=exact bucket=almost_exact
std::string format_summary(const Trace& t);

// Anytime inference on one program file. Events stream to `out` (text or
// NDJSON), diagnostics and debug dumps to `err`. Returns 0 for every
// terminal status, nonzero on input errors.
int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Brute-force exact probability by world enumeration, guarded by
// cfg.max_facts.
int cmd_exact(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Generates cfg.queries random layered programs and runs both modes on
// each under the same budget; prints the bucket count matrix.
int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace lazex

#endif  // LAZEX_CLI_HPP
