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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clarith {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula or term text. `position` is a byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(message + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Substitution would capture a free variable of the substituted term.
class CaptureError : public Error {
 public:
  using Error::Error;
};

/// A labmove that is not legal in the position it was applied to.
/// `index` is the offending index inside a run, or npos for a single move.
class LegalityError : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  LegalityError(std::string condition, const std::string& message,
                std::size_t index = npos)
      : Error(index == npos ? message
                            : "move #" + std::to_string(index) + ": " + message),
        condition_(std::move(condition)),
        index_(index) {}

  /// Short machine-readable name of the violated condition, e.g. "wrong-path".
  const std::string& condition() const { return condition_; }
  std::size_t index() const { return index_; }

 private:
  std::string condition_;
  std::size_t index_;
};

/// Ill-formed witness script or ill-typed routing inside a strategy network.
class ScriptError : public Error {
 public:
  using Error::Error;
};

/// Schema violation, cycle or dangling reference in a proof or strategy file.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace clarith
