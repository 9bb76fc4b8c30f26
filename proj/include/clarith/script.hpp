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

// Witness scripts: a small language for the machines that justify LC steps.
//
// A script is a list of statements, one per line:
//
//   wait NAME const PATH        block for an environment constant at PATH
//   wait NAME choice PATH       block for an environment left (0) / right (1)
//   move PATH left|right|const TERM
//   start SLOT                  restart SLOT with a fresh instance
//   feed SLOT PATH left|right|const TERM
//   await NAME SLOT PATH        block for a move of SLOT at PATH
//   link GAME@PATH GAME@PATH    copy moves between two subgames
//   if FORMULA ... [else ...] end
//   loop NAME from TERM [to TERM] ... end
//   break
//   retire                      stop executing; links stay active
//
// PATH is "@" for the root or "@i.j..." relative to the current yield; GAME is
// "main" or a slot name. Terms and formulas may mention script variables.
// Every slot starts automatically when the script starts, and links at the top
// of a script are made before any move is observed.

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "clarith/formula.hpp"
#include "clarith/occurrence.hpp"

namespace clarith {

struct Endpoint {
  std::string game;  ///< "main" or a slot name
  Path path;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

std::string to_string(const Endpoint& e);

struct ScriptInstr {
  enum class Op : std::uint8_t {
    Wait,
    Move,
    Start,
    Feed,
    Await,
    Link,
    Branch,    ///< jump to target when cond is false
    Jump,
    LoopInit,  ///< name := term
    LoopTest,  ///< jump to target when name > limit
    LoopNext,  ///< name += 1, jump to target
    Retire,
  };
  Op op = Op::Retire;
  std::string name;
  std::string slot;
  Path path;
  Payload::Kind kind = Payload::Kind::Const;
  std::optional<Term> term;
  std::optional<Term> limit;
  std::optional<Formula> cond;
  Endpoint a, b;
  std::size_t target = 0;
  std::size_t line = 0;  ///< 1-based source line
};

class WitnessScript {
 public:
  WitnessScript() = default;

  /// Parses and compiles. Throws ScriptError naming the offending line.
  static WitnessScript parse(const std::vector<std::string>& lines);

  const std::vector<std::string>& source() const { return source_; }
  const std::vector<ScriptInstr>& code() const { return code_; }
  /// Slot names the script mentions.
  const std::set<std::string>& referenced_slots() const { return slots_; }

 private:
  std::vector<std::string> source_;
  std::vector<ScriptInstr> code_;
  std::set<std::string> slots_;
};

/// Parses "@", "@0", "@1.0.2".
Path parse_path(const std::string& text);

}  // namespace clarith
