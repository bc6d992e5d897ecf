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

#include "lazex/program.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_set>

namespace lazex {

std::string Atom::str() const {
  if (args.empty()) return name;
  std::string out = name;
  out += '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ',';
    out += args[i];
  }
  out += ')';
  return out;
}

std::size_t AtomHash::operator()(const Atom& a) const {
  std::size_t h = std::hash<std::string>{}(a.name);
  for (const auto& arg : a.args) {
    h ^= std::hash<std::string>{}(arg) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class TokKind {
  Number,   // digits with optional fraction
  Word,     // [a-z0-9_A-Z]+ not starting with a digit-only number
  ColonColon,
  Implies,  // :-
  Comma,
  Dot,
  LParen,
  RParen,
  Naf,      // \+
  End,
};

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  double value = 0.0;   // for Number
  bool pure_digits = false;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
        ++col_;
      } else {
        break;
      }
    }
  }

  static bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void advance() {
    skip_space();
    tok_ = Token{};
    tok_.line = line_;
    tok_.column = col_;
    if (pos_ >= text_.size()) {
      tok_.kind = TokKind::End;
      return;
    }
    char c = text_[pos_];
    auto consume = [&](std::size_t n) {
      pos_ += n;
      col_ += static_cast<int>(n);
    };
    if (c == '(') { tok_.kind = TokKind::LParen; consume(1); return; }
    if (c == ')') { tok_.kind = TokKind::RParen; consume(1); return; }
    if (c == ',') { tok_.kind = TokKind::Comma; consume(1); return; }
    if (c == '.') {
      // A '.' followed by a digit would be a fraction without integer part;
      // the grammar has no such float, so '.' always ends a statement here.
      tok_.kind = TokKind::Dot;
      consume(1);
      return;
    }
    if (c == ':') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == ':') {
        tok_.kind = TokKind::ColonColon;
        consume(2);
        return;
      }
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
        tok_.kind = TokKind::Implies;
        consume(2);
        return;
      }
      fail("expected '::' or ':-'");
    }
    if (c == '\\') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '+') {
        tok_.kind = TokKind::Naf;
        consume(2);
        return;
      }
      fail("expected '\\+'");
    }
    if (word_char(c)) {
      std::size_t end = pos_;
      bool digits_only = true;
      while (end < text_.size() && word_char(text_[end])) {
        if (!std::isdigit(static_cast<unsigned char>(text_[end]))) digits_only = false;
        ++end;
      }
      std::string word(text_.substr(pos_, end - pos_));
      if (digits_only && end < text_.size() && text_[end] == '.' &&
          end + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end + 1]))) {
        // decimal fraction
        std::size_t fend = end + 1;
        while (fend < text_.size() && std::isdigit(static_cast<unsigned char>(text_[fend]))) ++fend;
        word.assign(text_.substr(pos_, fend - pos_));
        tok_.kind = TokKind::Number;
        tok_.text = word;
        tok_.pure_digits = false;
        double v = 0.0;
        auto res = std::from_chars(word.data(), word.data() + word.size(), v);
        if (res.ec != std::errc{}) fail("bad number '" + word + "'");
        tok_.value = v;
        consume(fend - pos_);
        return;
      }
      if (digits_only) {
        tok_.kind = TokKind::Number;
        tok_.text = word;
        tok_.pure_digits = true;
        double v = 0.0;
        auto res = std::from_chars(word.data(), word.data() + word.size(), v);
        if (res.ec != std::errc{}) fail("bad number '" + word + "'");
        tok_.value = v;
        consume(word.size());
        return;
      }
      tok_.kind = TokKind::Word;
      tok_.text = word;
      consume(word.size());
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  GroundProgram parse() {
    GroundProgram p;
    std::unordered_set<Atom, AtomHash> fact_atoms;
    while (lex_.peek().kind != TokKind::End) {
      const Token& t = lex_.peek();
      if (t.kind == TokKind::Number) {
        Token num = lex_.take();
        if (num.value < 0.0 || num.value > 1.0) {
          throw ParseError(num.line, num.column,
                           "probability " + num.text + " outside [0,1]");
        }
        expect(TokKind::ColonColon, "'::'");
        Token at = lex_.peek();
        Atom a = parse_atom_();
        expect(TokKind::Dot, "'.'");
        if (!fact_atoms.insert(a).second) {
          throw ParseError(at.line, at.column,
                           "duplicate probabilistic fact for " + a.str());
        }
        p.facts.push_back(ProbFact{std::move(a), num.value});
      } else if (t.kind == TokKind::Word && t.text == "query") {
        lex_.take();
        expect(TokKind::LParen, "'('");
        Atom a = parse_atom_();
        expect(TokKind::RParen, "')'");
        expect(TokKind::Dot, "'.'");
        p.queries.push_back(std::move(a));
      } else if (t.kind == TokKind::Word) {
        Atom head = parse_atom_();
        expect(TokKind::Implies, "':-'");
        Rule r;
        r.head = std::move(head);
        for (;;) {
          BodyLiteral lit;
          if (lex_.peek().kind == TokKind::Naf) {
            lex_.take();
            lit.positive = false;
          }
          lit.atom = parse_atom_();
          r.body.push_back(std::move(lit));
          if (lex_.peek().kind == TokKind::Comma) {
            lex_.take();
            continue;
          }
          break;
        }
        expect(TokKind::Dot, "'.'");
        p.rules.push_back(std::move(r));
      } else {
        throw ParseError(t.line, t.column, "expected fact, rule or query");
      }
    }
    return p;
  }

  Atom parse_single_atom() {
    Atom a = parse_atom_();
    const Token& t = lex_.peek();
    if (t.kind != TokKind::End) throw ParseError(t.line, t.column, "trailing input after atom");
    return a;
  }

 private:
  Token expect(TokKind k, const char* what) {
    const Token& t = lex_.peek();
    if (t.kind != k) {
      throw ParseError(t.line, t.column, std::string("expected ") + what);
    }
    return lex_.take();
  }

  Atom parse_atom_() {
    const Token& t = lex_.peek();
    if (t.kind != TokKind::Word ||
        !std::islower(static_cast<unsigned char>(t.text[0]))) {
      throw ParseError(t.line, t.column, "expected atom name (lowercase identifier)");
    }
    if (t.text == "query") {
      throw ParseError(t.line, t.column, "'query' is reserved");
    }
    Atom a;
    a.name = lex_.take().text;
    if (lex_.peek().kind == TokKind::LParen) {
      lex_.take();
      for (;;) {
        const Token& c = lex_.peek();
        if (c.kind == TokKind::Word || (c.kind == TokKind::Number && c.pure_digits)) {
          a.args.push_back(lex_.take().text);
        } else {
          throw ParseError(c.line, c.column, "expected constant argument");
        }
        if (lex_.peek().kind == TokKind::Comma) {
          lex_.take();
          continue;
        }
        break;
      }
      expect(TokKind::RParen, "')'");
    }
    return a;
  }

  Lexer lex_;
};

}  // namespace

GroundProgram parse_program(std::string_view text) { return Parser(text).parse(); }

Atom parse_atom(std::string_view text) { return Parser(text).parse_single_atom(); }

std::string to_text(const GroundProgram& p) {
  std::string out;
  for (const auto& f : p.facts) {
    out += format_double(f.prob);
    out += "::";
    out += f.atom.str();
    out += ".\n";
  }
  for (const auto& r : p.rules) {
    out += r.head.str();
    out += " :- ";
    if (r.body.empty()) {
      out += "true";
    } else {
      for (std::size_t i = 0; i < r.body.size(); ++i) {
        if (i) out += ", ";
        if (!r.body[i].positive) out += "\\+";
        out += r.body[i].atom.str();
      }
    }
    out += ".\n";
  }
  for (const auto& q : p.queries) {
    out += "query(";
    out += q.str();
    out += ").\n";
  }
  return out;
}

std::string ValidationReport::str() const {
  std::ostringstream os;
  for (const auto& v : violations) os << v.detail << '\n';
  return os.str();
}

ValidationReport validate(const GroundProgram& p) {
  ValidationReport rep;
  std::unordered_set<Atom, AtomHash> facts;
  for (const auto& f : p.facts) facts.insert(f.atom);
  std::unordered_set<Atom, AtomHash> heads;
  for (const auto& r : p.rules) heads.insert(r.head);

  for (const auto& r : p.rules) {
    if (facts.count(r.head)) {
      rep.violations.push_back({Violation::Kind::FactAndDefined,
                                "atom " + r.head.str() + " is both a probabilistic fact and a rule head"});
      facts.erase(r.head);  // report once
    }
  }
  std::unordered_set<Atom, AtomHash> reported_neg;
  for (const auto& r : p.rules) {
    for (const auto& lit : r.body) {
      if (!lit.positive && !facts.count(lit.atom) && !reported_neg.count(lit.atom)) {
        rep.violations.push_back({Violation::Kind::NegatedNonFact,
                                  "negated literal \\+" + lit.atom.str() +
                                      " does not reference a probabilistic fact"});
        reported_neg.insert(lit.atom);
      }
    }
  }

  // Positive-cycle detection over the defined-atom dependency graph.
  std::vector<Atom> head_list(heads.begin(), heads.end());
  std::sort(head_list.begin(), head_list.end(),
            [](const Atom& a, const Atom& b) { return a.str() < b.str(); });
  std::unordered_map<Atom, int, AtomHash> head_id;
  for (std::size_t i = 0; i < head_list.size(); ++i) head_id[head_list[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(head_list.size());
  for (const auto& r : p.rules) {
    int h = head_id[r.head];
    for (const auto& lit : r.body) {
      if (!lit.positive) continue;
      auto it = head_id.find(lit.atom);
      if (it != head_id.end()) adj[h].push_back(it->second);
    }
  }
  std::vector<int> color(head_list.size(), 0);  // 0 white, 1 gray, 2 black
  std::vector<int> stack, on_path;
  for (std::size_t s = 0; s < head_list.size(); ++s) {
    if (color[s]) continue;
    // iterative DFS recording the gray path to name cycle members
    std::vector<std::pair<int, std::size_t>> frames{{static_cast<int>(s), 0}};
    color[s] = 1;
    on_path.assign(1, static_cast<int>(s));
    while (!frames.empty()) {
      auto& [u, next] = frames.back();
      if (next < adj[u].size()) {
        int v = adj[u][next++];
        if (color[v] == 1) {
          std::string members;
          auto it = std::find(on_path.begin(), on_path.end(), v);
          for (; it != on_path.end(); ++it) {
            if (!members.empty()) members += ", ";
            members += head_list[*it].str();
          }
          rep.violations.push_back({Violation::Kind::PositiveCycle,
                                    "positive cycle among defined atoms: {" + members + "}"});
          color[v] = 2;  // avoid re-reporting the same entry point
        } else if (color[v] == 0) {
          color[v] = 1;
          on_path.push_back(v);
          frames.emplace_back(v, 0);
        }
      } else {
        color[u] = 2;
        on_path.pop_back();
        frames.pop_back();
      }
    }
  }

  for (const auto& q : p.queries) {
    if (!facts.count(q) && !heads.count(q)) {
      rep.violations.push_back({Violation::Kind::UnknownQuery,
                                "query atom " + q.str() + " is neither a fact nor defined by a rule"});
    }
  }
  return rep;
}

GroundProgram normalize(const GroundProgram& p) {
  std::unordered_set<Atom, AtomHash> always_true, always_false;
  GroundProgram out;
  for (const auto& f : p.facts) {
    if (f.prob == 1.0) {
      always_true.insert(f.atom);
    } else if (f.prob == 0.0) {
      always_false.insert(f.atom);
    } else {
      out.facts.push_back(f);
    }
  }
  for (const auto& r : p.rules) {
    Rule kept;
    kept.head = r.head;
    bool dropped = false;
    for (const auto& lit : r.body) {
      bool in_true = always_true.count(lit.atom) > 0;
      bool in_false = always_false.count(lit.atom) > 0;
      if (!in_true && !in_false) {
        kept.body.push_back(lit);
        continue;
      }
      bool value = lit.positive ? in_true : in_false;
      if (!value) {
        dropped = true;  // body literal is constant false
        break;
      }
      // constant true: drop the literal
    }
    if (!dropped) out.rules.push_back(std::move(kept));
  }
  out.queries = p.queries;
  // A queried prob=1 atom must stay derivable once the fact is gone.
  for (const auto& q : p.queries) {
    if (always_true.count(q)) out.rules.push_back(Rule{q, {}});
  }
  return out;
}

ProgramIndex::ProgramIndex(const GroundProgram& p) : program_(&p) {
  auto intern = [&](const Atom& a) {
    auto [it, inserted] = ids_.emplace(a, static_cast<int>(atoms_.size()));
    if (inserted) {
      atoms_.push_back(a);
      fact_index_.push_back(-1);
      rules_.emplace_back();
    }
    return it->second;
  };
  for (std::size_t i = 0; i < p.facts.size(); ++i) {
    int id = intern(p.facts[i].atom);
    fact_index_[id] = static_cast<int>(i);
    fact_atom_.push_back(id);
  }
  for (std::size_t i = 0; i < p.rules.size(); ++i) {
    int h = intern(p.rules[i].head);
    rules_[h].push_back(static_cast<int>(i));
    for (const auto& lit : p.rules[i].body) intern(lit.atom);
  }
  for (const auto& q : p.queries) intern(q);

  // Topological order of derived atoms, dependencies first. Requires the
  // validated acyclicity invariant.
  std::vector<std::vector<int>> deps(atoms_.size());
  for (int id = 0; id < num_atoms(); ++id) {
    if (!is_derived(id)) continue;
    for (int ri : rules_[id]) {
      for (const auto& lit : p.rules[ri].body) {
        int v = ids_.at(lit.atom);
        if (is_derived(v)) deps[id].push_back(v);
      }
    }
  }
  std::vector<int> state(atoms_.size(), 0);
  std::vector<std::pair<int, std::size_t>> frames;
  for (int id = 0; id < num_atoms(); ++id) {
    if (!is_derived(id) || state[id]) continue;
    frames.assign(1, {id, 0});
    state[id] = 1;
    while (!frames.empty()) {
      auto& [u, next] = frames.back();
      if (next < deps[u].size()) {
        int v = deps[u][next++];
        if (state[v] == 2) continue;
        if (state[v] == 1) throw std::logic_error("ProgramIndex: cyclic program");
        state[v] = 1;
        frames.emplace_back(v, 0);
      } else {
        state[u] = 2;
        topo_.push_back(u);
        frames.pop_back();
      }
    }
  }
}

int ProgramIndex::atom_id(const Atom& a) const {
  auto it = ids_.find(a);
  return it == ids_.end() ? -1 : it->second;
}

std::vector<int> ProgramIndex::reachable_derived(int from) const {
  std::vector<int> out;
  if (from < 0 || !is_derived(from)) return out;
  std::vector<char> seen(atoms_.size(), 0);
  std::vector<int> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (int ri : rules_[u]) {
      for (const auto& lit : program_->rules[ri].body) {
        int v = ids_.at(lit.atom);
        if (is_derived(v) && !seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lazex
