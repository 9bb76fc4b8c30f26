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

// Concrete syntax.
//
//   formula  := quant | implies
//   quant    := ("AA" | "EE" | "A" | "E") var "." formula
//   implies  := disj ["->" formula]
//   disj     := conj (("v" | "vv") conj)*
//   conj     := unary (("&" | "&&") unary)*
//   unary    := "~" unary | quant | "(" formula ")" | atom
//   atom     := term "=" term | ("H" | "T") "(" term ("," term)* ")"
//   term     := product ("+" product)*
//   product  := postfix ("*" postfix)*
//   postfix  := primary "'"*
//   primary  := digits | var | "(" term ")"
//
// Doubled symbols are the choice operators. Variables start with a lowercase
// letter; "v" and "vv" are reserved. A quantifier extends as far right as
// possible.

#pragma once

#include <string>
#include <string_view>

#include "clarith/formula.hpp"

namespace clarith {

/// Throws SyntaxError. With `require_sentence`, free variables are rejected.
Formula parse_formula(std::string_view text, bool require_sentence = false);
Term parse_term(std::string_view text);

std::string to_string(const Term& t);
/// Canonical text; parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);

}  // namespace clarith
