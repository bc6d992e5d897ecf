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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lazex/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"anytime approximate inference for ground probabilistic logic programs"};
  app.require_subcommand(1);

  lazex::RunConfig cfg;
  std::string mode = "lazy";

  CLI::App* solve = app.add_subcommand("solve", "anytime lower/upper bounds for a query");
  solve->add_option("file", cfg.input_path, "program file")->required();
  solve->add_option("--query", cfg.query, "query atom, e.g. p(1,4); default: first query(...) in the file");
  solve->add_option("--mode", mode, "lazy (default) or nonlazy")
      ->check(CLI::IsMember({"lazy", "nonlazy"}));
  solve->add_option("--budget", cfg.budget_seconds, "wall-clock budget in seconds")
      ->envname("LAZEX_BUDGET");
  solve->add_option("--cap", cfg.cap,
                    "stop after this many explanations instead of watching the clock");
  solve->add_option("--epsilon", cfg.epsilon, "stop when upper-lower <= epsilon (0: run to exhaustion)");
  solve->add_option("--format", cfg.format, "text (default) or ndjson")
      ->check(CLI::IsMember({"text", "ndjson"}));
  solve->add_flag("--dump-wcnf", cfg.dump_wcnf, "dump each solver instance to stderr");
  solve->add_flag("--dump-bdd", cfg.dump_bdd, "dump the final diagrams as DOT to stderr");

  CLI::App* exact = app.add_subcommand("exact", "exact probability by world enumeration");
  exact->add_option("file", cfg.input_path, "program file")->required();
  exact->add_option("--query", cfg.query, "query atom; default: first query(...) in the file");
  exact->add_option("--max-facts", cfg.max_facts, "enumeration guard");

  CLI::App* bench = app.add_subcommand("bench", "bucket matrix over generated programs");
  bench->add_option("--seed", cfg.seed, "base seed")->required();
  bench->add_option("--queries", cfg.queries, "number of generated programs");
  bench->add_option("--layers", cfg.layers, "graph layers");
  bench->add_option("--width", cfg.width, "nodes per layer");
  bench->add_option("--density", cfg.density, "edge density in [0,1]");
  bench->add_option("--budget", cfg.budget_seconds, "per-run budget in seconds")
      ->envname("LAZEX_BUDGET");
  bench->add_option("--cap", cfg.cap, "per-run explanation cap (deterministic)");
  bench->add_option("--epsilon", cfg.epsilon, "convergence threshold");

  CLI11_PARSE(app, argc, argv);
  cfg.lazy = mode == "lazy";

  try {
    if (solve->parsed()) return lazex::cmd_solve(cfg, std::cout, std::cerr);
    if (exact->parsed()) return lazex::cmd_exact(cfg, std::cout, std::cerr);
    if (bench->parsed()) return lazex::cmd_bench(cfg, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
