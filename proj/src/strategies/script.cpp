// Copyright 2026 The Clarith Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clarith/script.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "clarith/error.hpp"
#include "clarith/text.hpp"

namespace clarith {

Path parse_path(const std::string& text) {
  if (text.empty() || text[0] != '@')
    throw ScriptError("path must start with '@': '" + text + "'");
  Path path;
  std::size_t i = 1;
  while (i < text.size()) {
    std::uint32_t v = 0;
    auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc() || end == text.data() + i)
      throw ScriptError("malformed path '" + text + "'");
    path.push_back(v);
    i = static_cast<std::size_t>(end - text.data());
    if (i < text.size()) {
      if (text[i] != '.' || i + 1 == text.size())
        throw ScriptError("malformed path '" + text + "'");
      ++i;
    }
  }
  return path;
}

std::string to_string(const Endpoint& e) { return e.game + to_string(e.path); }

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return s != "v" && s != "vv";
}

struct Block {
  enum class Kind { If, Else, Loop } kind;
  std::size_t open;                 // index of Branch / LoopTest
  std::vector<std::size_t> breaks;  // Jump instructions to patch
  std::size_t line;
};

class Compiler {
 public:
  explicit Compiler(const std::vector<std::string>& lines) : lines_(lines) {}

  void run(std::vector<ScriptInstr>& code, std::set<std::string>& slots) {
    for (line_ = 1; line_ <= lines_.size(); ++line_) {
      std::string text = lines_[line_ - 1];
      if (auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
      std::istringstream in(text);
      std::string head;
      if (!(in >> head)) continue;
      statement(head, in, code, slots);
    }
    if (!blocks_.empty())
      fail_at(blocks_.back().line, "block is not closed by 'end'");
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(line_, msg); }
  [[noreturn]] void fail_at(std::size_t line, const std::string& msg) const {
    throw ScriptError("script line " + std::to_string(line) + ": " + msg);
  }

  std::string word(std::istringstream& in, const char* what) {
    std::string w;
    if (!(in >> w)) fail(std::string("expected ") + what);
    return w;
  }

  std::string name(std::istringstream& in, const char* what) {
    std::string w = word(in, what);
    if (!is_identifier(w)) fail("'" + w + "' is not a valid " + what);
    return w;
  }

  static std::string rest(std::istringstream& in) {
    std::string r;
    std::getline(in, r);
    auto b = r.find_first_not_of(" \t");
    return b == std::string::npos ? "" : r.substr(b);
  }

  void no_rest(std::istringstream& in) {
    if (!rest(in).empty()) fail("unexpected trailing text");
  }

  Path path(std::istringstream& in) {
    std::string w = word(in, "path");
    try {
      return parse_path(w);
    } catch (const ScriptError& e) {
      fail(e.what());
    }
  }

  Endpoint endpoint(std::istringstream& in, std::set<std::string>& slots) {
    std::string w = word(in, "endpoint");
    auto at = w.find('@');
    if (at == std::string::npos || at == 0) fail("malformed endpoint '" + w + "'");
    Endpoint e;
    e.game = w.substr(0, at);
    if (!is_identifier(e.game)) fail("malformed endpoint '" + w + "'");
    if (e.game != "main") slots.insert(e.game);
    try {
      e.path = parse_path(w.substr(at));
    } catch (const ScriptError& err) {
      fail(err.what());
    }
    return e;
  }

  Term term(const std::string& text) {
    if (text.empty()) fail("expected a term");
    try {
      return parse_term(text);
    } catch (const SyntaxError& e) {
      fail(std::string("bad term: ") + e.what());
    }
  }

  void payload(std::istringstream& in, ScriptInstr& ins) {
    std::string kind = word(in, "payload");
    if (kind == "left") {
      ins.kind = Payload::Kind::Left;
      no_rest(in);
    } else if (kind == "right") {
      ins.kind = Payload::Kind::Right;
      no_rest(in);
    } else if (kind == "const") {
      ins.kind = Payload::Kind::Const;
      ins.term = term(rest(in));
    } else {
      fail("payload must be left, right or const, not '" + kind + "'");
    }
  }

  void statement(const std::string& head, std::istringstream& in,
                 std::vector<ScriptInstr>& code, std::set<std::string>& slots) {
    ScriptInstr ins;
    ins.line = line_;
    using Op = ScriptInstr::Op;
    if (head == "wait") {
      ins.op = Op::Wait;
      ins.name = name(in, "variable");
      std::string kind = word(in, "const or choice");
      if (kind == "const") ins.kind = Payload::Kind::Const;
      else if (kind == "choice") ins.kind = Payload::Kind::Left;
      else fail("wait expects 'const' or 'choice', not '" + kind + "'");
      ins.path = path(in);
      no_rest(in);
    } else if (head == "move") {
      ins.op = Op::Move;
      ins.path = path(in);
      payload(in, ins);
    } else if (head == "start") {
      ins.op = Op::Start;
      ins.slot = name(in, "slot");
      slots.insert(ins.slot);
      no_rest(in);
    } else if (head == "feed") {
      ins.op = Op::Feed;
      ins.slot = name(in, "slot");
      slots.insert(ins.slot);
      ins.path = path(in);
      payload(in, ins);
    } else if (head == "await") {
      ins.op = Op::Await;
      ins.name = name(in, "variable");
      ins.slot = name(in, "slot");
      slots.insert(ins.slot);
      ins.path = path(in);
      no_rest(in);
    } else if (head == "link") {
      ins.op = Op::Link;
      ins.a = endpoint(in, slots);
      ins.b = endpoint(in, slots);
      no_rest(in);
    } else if (head == "if") {
      std::string text = rest(in);
      if (text.empty()) fail("expected a formula after 'if'");
      try {
        ins.cond = parse_formula(text);
      } catch (const SyntaxError& e) {
        fail(std::string("bad formula: ") + e.what());
      }
      if (!is_elementary(*ins.cond)) fail("'if' needs an elementary formula");
      ins.op = Op::Branch;
      blocks_.push_back({Block::Kind::If, code.size(), {}, line_});
    } else if (head == "else") {
      no_rest(in);
      if (blocks_.empty() || blocks_.back().kind != Block::Kind::If)
        fail("'else' without 'if'");
      ins.op = Op::Jump;
      Block& b = blocks_.back();
      b.kind = Block::Kind::Else;
      code[b.open].target = code.size() + 1;
      b.open = code.size();
    } else if (head == "end") {
      no_rest(in);
      if (blocks_.empty()) fail("'end' without an open block");
      Block b = blocks_.back();
      blocks_.pop_back();
      if (b.kind == Block::Kind::Loop) {
        ScriptInstr next;
        next.op = Op::LoopNext;
        next.line = line_;
        next.name = code[b.open].name;
        next.target = b.open;
        code.push_back(next);
        code[b.open].target = code.size();
        for (auto j : b.breaks) code[j].target = code.size();
      } else {
        code[b.open].target = code.size();
      }
      return;
    } else if (head == "loop") {
      ins.name = name(in, "variable");
      if (word(in, "'from'") != "from") fail("expected 'from'");
      std::string spec = rest(in);
      std::optional<Term> limit;
      if (auto to = spec.rfind(" to "); to != std::string::npos) {
        limit = term(spec.substr(to + 4));
        spec.resize(to);
      }
      ScriptInstr init;
      init.op = Op::LoopInit;
      init.line = line_;
      init.name = ins.name;
      init.term = term(spec);
      code.push_back(init);
      ins.op = Op::LoopTest;
      ins.limit = limit;
      blocks_.push_back({Block::Kind::Loop, code.size(), {}, line_});
    } else if (head == "break") {
      no_rest(in);
      Block* loop = nullptr;
      for (auto it = blocks_.rbegin(); it != blocks_.rend(); ++it)
        if (it->kind == Block::Kind::Loop) {
          loop = &*it;
          break;
        }
      if (!loop) fail("'break' outside a loop");
      ins.op = Op::Jump;
      loop->breaks.push_back(code.size());
    } else if (head == "retire") {
      no_rest(in);
      ins.op = Op::Retire;
    } else {
      fail("unknown statement '" + head + "'");
    }
    code.push_back(std::move(ins));
  }

  const std::vector<std::string>& lines_;
  std::size_t line_ = 0;
  std::vector<Block> blocks_;
};

}  // namespace

WitnessScript WitnessScript::parse(const std::vector<std::string>& lines) {
  WitnessScript w;
  w.source_ = lines;
  Compiler(lines).run(w.code_, w.slots_);
  return w;
}

}  // namespace clarith
