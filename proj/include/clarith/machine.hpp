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

// Register machines realising the halting relations T(m, y, z, t) and
// H(m, n), and the Cantor pairing used to fold two witnesses into one.
//
// Conventions: the input is loaded into r1, every other register starts at 0.
// Each executed instruction is one step, the halting instruction included, so
// a machine never halts at step 0. Running off the end of the program behaves
// like `halt r0`.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clarith/formula.hpp"

namespace clarith {

struct Instruction {
  enum class Op : std::uint8_t {
    Inc,    ///< r += 1
    DecJz,  ///< if r == 0 jump to target, else r -= 1
    Halt,   ///< halt with output r
  };
  Op op = Op::Halt;
  std::uint32_t reg = 0;
  std::uint32_t target = 0;

  static Instruction inc(std::uint32_t r) { return {Op::Inc, r, 0}; }
  static Instruction dec_jz(std::uint32_t r, std::uint32_t target) {
    return {Op::DecJz, r, target};
  }
  static Instruction halt(std::uint32_t r) { return {Op::Halt, r, 0}; }
};

struct MachineCode {
  std::string name;
  std::vector<Instruction> program;
};

struct HaltInfo {
  Natural step = 0;
  Natural output = 0;
  friend bool operator==(const HaltInfo&, const HaltInfo&) = default;
};

/// Deterministic simulation for at most `max_steps` steps; nullopt while the
/// machine is still running.
std::optional<HaltInfo> rm_run(const MachineCode& m, Natural input,
                               Natural max_steps);

/// True iff `m` on input `y` halts exactly at step `z` with output `t`.
bool turing_T(const MachineCode& m, Natural y, Natural z, Natural t);

/// The fixed ten-machine table that machine codes in formulas refer to.
const std::vector<MachineCode>& machine_corpus();
/// Corpus entry for `code`; codes past the table map to a looping machine.
const MachineCode& machine_by_code(Natural code);

/// H(code, n), memoised per thread so ascending scans stay linear.
bool halts_within(Natural code, Natural input, Natural steps);

/// Cantor pairing and its projections: proj1(pair(a, b)) == a,
/// proj2(pair(a, b)) == b.
Natural pair(Natural a, Natural b);
Natural proj1(Natural z);
Natural proj2(Natural z);

}  // namespace clarith
