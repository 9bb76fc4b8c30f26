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

// Readable gtest failure output for library values.

#pragma once

#include <ostream>

#include "clarith/serialize.hpp"
#include "clarith/text.hpp"

namespace clarith {

inline void PrintTo(const Term& t, std::ostream* os) { *os << to_string(t); }
inline void PrintTo(const Formula& f, std::ostream* os) { *os << to_string(f); }
inline void PrintTo(const Labmove& m, std::ostream* os) { *os << to_string(m); }
inline void PrintTo(const MoveTemplate& t, std::ostream* os) {
  *os << to_json(t).dump();
}

}  // namespace clarith
