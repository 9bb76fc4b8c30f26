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

// JSON forms shared by proof files, strategy files and the play protocol.
//
// Terms and formulas are tagged nodes:
//   {"tag": "num", "value": 3}            {"tag": "var", "name": "x"}
//   {"tag": "succ", "children": [t]}      {"tag": "plus" | "times", "children": [a, b]}
//   {"tag": "eq", "terms": [a, b]}        {"tag": "pred", "name": "H", "terms": [...]}
//   {"tag": "not", "children": [f]}
//   {"tag": "and" | "or" | "implies" | "chand" | "chor", "children": [a, b]}
//   {"tag": "forall" | "exists" | "chall" | "chex", "var": "x", "children": [f]}
// Wherever a formula is read, a string in the concrete syntax is accepted too.
//
// Labmoves: {"player": "machine" | "environment", "path": [0, 1],
//            "payload": "left" | "right" | {"const": 3}}

#pragma once

#include "json.hpp"

#include "clarith/formula.hpp"
#include "clarith/occurrence.hpp"

namespace clarith {

using Json = nlohmann::ordered_json;

Json to_json(const Term& t);
Json to_json(const Formula& f);
Term term_from_json(const Json& j);
/// Accepts the tagged AST or a string in the concrete syntax.
Formula formula_from_json(const Json& j);

Json to_json(const Path& p);
Path path_from_json(const Json& j);
Json to_json(Player p);
Player player_from_json(const Json& j);
Json to_json(const Payload& p);
Payload payload_from_json(const Json& j);
Json to_json(const Labmove& m);
Labmove labmove_from_json(const Json& j);
Json to_json(const Run& run);
Run run_from_json(const Json& j);
/// Const templates carry the payload "const".
Json to_json(const MoveTemplate& m);

}  // namespace clarith
