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

#include "lazex/explanation.hpp"

#include <algorithm>
#include <stdexcept>

namespace lazex {

const char* to_string(Target t) { return t == Target::Query ? "q" : "not_q"; }

std::string Explanation::str(const ProgramIndex& ix) const {
  std::string out = "{";
  bool first = true;
  for (const auto& l : facts) {
    if (!first) out += ", ";
    first = false;
    if (!l.value) out += "\\+";
    out += ix.program().facts[l.fact].atom.str();
  }
  for (const auto& h : heads) {
    if (!first) out += ", ";
    first = false;
    if (!h.value) out += "\\+";
    out += ix.atom(h.atom).str();
    out += '?';
  }
  out += '}';
  return out;
}

Explanation make_explanation(const GroundProgram& p, std::vector<FactLiteral> lits) {
  std::sort(lits.begin(), lits.end());
  for (std::size_t i = 0; i + 1 < lits.size(); ++i) {
    if (lits[i].fact == lits[i + 1].fact) {
      throw std::invalid_argument("explanation assigns a fact twice");
    }
  }
  Explanation e;
  e.facts = std::move(lits);
  for (const auto& l : e.facts) {
    if (l.fact < 0 || l.fact >= static_cast<int>(p.facts.size())) {
      throw std::invalid_argument("explanation references unknown fact");
    }
    e.probability *= l.value ? p.facts[l.fact].prob : 1.0 - p.facts[l.fact].prob;
  }
  return e;
}

}  // namespace lazex
