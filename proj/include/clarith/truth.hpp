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

#pragma once

#include <optional>
#include <string>

#include "clarith/formula.hpp"

namespace clarith {

/// Verdict of the bounded truth oracle. True and False are final: they hold
/// at every larger bound. Unknown carries the reason the bound ran out.
class Truth3 {
 public:
  enum class Value : std::uint8_t { True, False, Unknown };

  static Truth3 yes() { return Truth3(Value::True, {}); }
  static Truth3 no() { return Truth3(Value::False, {}); }
  static Truth3 unknown(std::string reason) {
    return Truth3(Value::Unknown, std::move(reason));
  }
  static Truth3 of(bool b) { return b ? yes() : no(); }

  Value value() const { return value_; }
  bool is_true() const { return value_ == Value::True; }
  bool is_false() const { return value_ == Value::False; }
  bool is_unknown() const { return value_ == Value::Unknown; }
  const std::string& reason() const { return reason_; }

  Truth3 operator!() const;

  friend bool operator==(const Truth3& a, const Truth3& b) {
    return a.value_ == b.value_;
  }

 private:
  Truth3(Value v, std::string reason) : value_(v), reason_(std::move(reason)) {}
  Value value_;
  std::string reason_;
};

const char* to_string(Truth3::Value v);

struct EvalOptions {
  /// Resolve bound-free shapes exactly: a quantified variable that does not
  /// matter, Ex(x = t & ...) style explicit witnesses, Ax(x = t -> ...)
  /// style finite guards, bodies that are polynomial identities such as
  /// x + 0 = x or never hold such as x' = 0, and instances of the induction
  /// schema. Off means plain enumeration up to the bound.
  bool exact_shapes = true;
};

/// Value of a closed term, or nothing on arithmetic overflow. Throws Error
/// when the term has variables.
std::optional<Natural> term_value(const Term& t);

/// Truth of a closed elementary formula, with A and E ranging over 0..bound.
/// A universal that survives the bound, or an existential without a witness
/// up to it, is Unknown. Throws Error on open or non-elementary input.
Truth3 eval_elementary(const Formula& f, Natural bound,
                       const EvalOptions& options = {});

}  // namespace clarith
