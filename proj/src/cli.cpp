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

#include "lazex/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "lazex/gen.hpp"
#include "lazex/maxsat.hpp"
#include "lazex/wmc.hpp"

namespace lazex {

namespace {

using nlohmann::json;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// --query wins over the file's first query(...) declaration
std::optional<Atom> resolve_query(const GroundProgram& p, const RunConfig& cfg,
                                  std::ostream& err) {
  if (!cfg.query.empty()) {
    try {
      return parse_atom(cfg.query);
    } catch (const ParseError& e) {
      err << "bad --query atom: " << e.what() << '\n';
      return std::nullopt;
    }
  }
  if (!p.queries.empty()) return p.queries.front();
  err << "no query: the file declares none and --query was not given\n";
  return std::nullopt;
}

std::optional<GroundProgram> load_program(const RunConfig& cfg, std::ostream& err) {
  std::optional<std::string> text = read_file(cfg.input_path);
  if (!text) {
    err << "cannot read " << cfg.input_path << '\n';
    return std::nullopt;
  }
  try {
    return parse_program(*text);
  } catch (const ParseError& e) {
    err << cfg.input_path << ':' << e.line() << ':' << e.column() << ": " << e.what()
        << '\n';
    return std::nullopt;
  }
}

json explanation_json(const Explanation& e, const ProgramIndex& ix) {
  json lits = json::array();
  for (const FactLiteral& fl : e.facts) {
    lits.push_back({{"atom", ix.atom(ix.fact_atom_id(fl.fact)).str()},
                    {"value", fl.value}});
  }
  return lits;
}

void print_event_text(const Event& ev, const ProgramIndex& ix, std::ostream& out) {
  out << "event=" << ev.index << " side=" << to_string(ev.side)
      << " explanation=" << ev.explanation.str(ix)
      << " p=" << format_double(ev.explanation.probability)
      << " lower=" << format_double(ev.lower) << " upper=" << format_double(ev.upper)
      << '\n';
}

void print_event_ndjson(const Event& ev, const ProgramIndex& ix, std::ostream& out) {
  json j{{"event", ev.index},
         {"seconds", ev.seconds},
         {"side", to_string(ev.side)},
         {"explanation", explanation_json(ev.explanation, ix)},
         {"probability", ev.explanation.probability},
         {"lower", ev.lower},
         {"upper", ev.upper}};
  out << j.dump() << '\n';
}

void dump_diagrams(const Trace& tr, const Engine& engine, std::ostream& err) {
  std::vector<double> probs;
  std::vector<std::string> names;
  for (const ProbFact& f : engine.program().facts) {
    probs.push_back(f.prob);
    names.push_back(f.atom.str());
  }
  for (Target t : {Target::Query, Target::NotQuery}) {
    ExplanationDnf dnf(probs);
    for (const Event& ev : tr.events) {
      if (ev.side == t) dnf.add(ev.explanation);
    }
    err << "c bdd target=" << to_string(t)
        << " probability=" << format_double(dnf.probability()) << '\n';
    dnf.diagram().write_dot(dnf.root(), names, err);
  }
}

}  // namespace

std::string format_summary(const Trace& t) {
  std::ostringstream os;
  os << "lower=" << format_double(t.lower) << " upper=" << format_double(t.upper)
     << " status=" << to_string(t.terminal) << " bucket=" << to_string(t.bucket);
  return os.str();
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<GroundProgram> p = load_program(cfg, err);
  if (!p) return 1;
  std::optional<Atom> q = resolve_query(*p, cfg, err);
  if (!q) return 1;

  std::optional<Engine> engine;
  try {
    engine.emplace(*p, *q);
  } catch (const std::invalid_argument& e) {
    err << cfg.input_path << ": " << e.what() << '\n';
    return 1;
  }
  const ProgramIndex& ix = engine->index();

  EngineOptions opt;
  opt.lazy = cfg.lazy;
  opt.budget_seconds = cfg.budget_seconds;
  opt.explanation_cap = cfg.cap;
  opt.epsilon = cfg.epsilon;
  opt.on_event = [&](const Event& ev) {
    if (cfg.format == "ndjson") {
      print_event_ndjson(ev, ix, out);
    } else {
      print_event_text(ev, ix, out);
    }
  };
  int instance_seq = 0;
  if (cfg.dump_wcnf) {
    opt.search_hooks.on_encoded = [&](const maxsat::MaxSatInstance& inst, Target t) {
      err << "c instance seq=" << ++instance_seq << " target=" << to_string(t) << '\n';
      maxsat::write_wcnf(inst, err);
    };
  }

  Trace tr = engine->run(opt);

  if (cfg.format == "ndjson") {
    json j{{"summary", true},
           {"lower", tr.lower},
           {"upper", tr.upper},
           {"status", to_string(tr.terminal)},
           {"bucket", to_string(tr.bucket)},
           {"events", tr.events.size()},
           {"seconds", tr.seconds},
           {"rules_added", tr.rules_added},
           {"expansions", tr.expansions}};
    out << j.dump() << '\n';
  } else {
    out << format_summary(tr) << '\n';
  }
  if (cfg.dump_bdd) dump_diagrams(tr, *engine, err);
  return 0;
}

int cmd_exact(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<GroundProgram> p = load_program(cfg, err);
  if (!p) return 1;

  // an unknown query atom is simply false everywhere, so tolerate it
  ValidationReport report = validate(*p);
  for (const Violation& v : report.violations) {
    if (v.kind != Violation::Kind::UnknownQuery) {
      err << cfg.input_path << ": " << report.str() << '\n';
      return 1;
    }
  }

  std::optional<Atom> q = resolve_query(*p, cfg, err);
  if (!q) return 1;
  try {
    out << format_double(oracle::exact_probability(*p, *q, cfg.max_facts)) << '\n';
  } catch (const oracle::GuardExceeded& e) {
    err << e.what() << "; use `solve` for anytime bounds\n";
    return 1;
  }
  return 0;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.queries < 1) {
    err << "bench needs at least one query\n";
    return 1;
  }

  // counts[bucket][0] = lazy, [1] = nonlazy
  int counts[4][2] = {};
  long long rules_total[2] = {};

  for (int k = 0; k < cfg.queries; ++k) {
    GenConfig gc{cfg.seed + static_cast<std::uint64_t>(k), cfg.layers, cfg.width,
                 cfg.density};
    GroundProgram p = generate_layered(gc);
    Engine engine(p, p.queries.front());
    for (int mode = 0; mode < 2; ++mode) {
      EngineOptions opt;
      opt.lazy = mode == 0;
      opt.budget_seconds = cfg.budget_seconds;
      opt.explanation_cap = cfg.cap;
      opt.epsilon = cfg.epsilon;
      Trace tr = engine.run(opt);
      ++counts[static_cast<int>(tr.bucket)][mode];
      rules_total[mode] += tr.rules_added;
      out << "query=" << k << " mode=" << (mode == 0 ? "lazy" : "nonlazy") << ' '
          << format_summary(tr) << " rules_added=" << tr.rules_added << '\n';
    }
  }

  const char* row_names[4] = {"almost_exact", "tight_bound", "loose_bound", "no_answer"};
  out << '\n' << std::left << std::setw(14) << "bucket" << std::right << std::setw(8)
      << "lazy" << std::setw(10) << "nonlazy" << '\n';
  int sums[2] = {};
  for (int b = 0; b < 4; ++b) {
    out << std::left << std::setw(14) << row_names[b] << std::right << std::setw(8)
        << counts[b][0] << std::setw(10) << counts[b][1] << '\n';
    sums[0] += counts[b][0];
    sums[1] += counts[b][1];
  }
  out << std::left << std::setw(14) << "total" << std::right << std::setw(8) << sums[0]
      << std::setw(10) << sums[1] << '\n';
  out << "rules added: lazy=" << rules_total[0] << " nonlazy=" << rules_total[1] << '\n';
  return 0;
}

}  // namespace lazex
