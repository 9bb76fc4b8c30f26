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

#include "clarith/machine.hpp"

#include <cmath>
#include <map>
#include <utility>

namespace clarith {
namespace {

struct MachineState {
  std::vector<Natural> regs;
  std::size_t pc = 0;
  Natural steps = 0;
  std::optional<HaltInfo> halted;
};

MachineState initial_state(const MachineCode& m, Natural input) {
  std::uint32_t max_reg = 1;
  for (const auto& ins : m.program) max_reg = std::max(max_reg, ins.reg);
  MachineState s;
  s.regs.assign(max_reg + 1, 0);
  s.regs[1] = input;
  return s;
}

void advance(const MachineCode& m, MachineState& s, Natural until) {
  while (!s.halted && s.steps < until) {
    ++s.steps;
    if (s.pc >= m.program.size()) {
      s.halted = HaltInfo{s.steps, s.regs[0]};
      return;
    }
    const Instruction& ins = m.program[s.pc];
    switch (ins.op) {
      case Instruction::Op::Inc:
        ++s.regs[ins.reg];
        ++s.pc;
        break;
      case Instruction::Op::DecJz:
        if (s.regs[ins.reg] == 0) {
          s.pc = ins.target;
        } else {
          --s.regs[ins.reg];
          ++s.pc;
        }
        break;
      case Instruction::Op::Halt:
        s.halted = HaltInfo{s.steps, s.regs[ins.reg]};
        return;
    }
  }
}

std::vector<MachineCode> build_corpus() {
  using I = Instruction;
  std::vector<MachineCode> c;
  c.push_back({"halt0", {I::halt(0)}});
  c.push_back({"identity",
               {I::dec_jz(1, 3), I::inc(0), I::dec_jz(2, 0), I::halt(0)}});
  c.push_back({"successor",
               {I::dec_jz(1, 3), I::inc(0), I::dec_jz(2, 0), I::inc(0),
                I::halt(0)}});
  c.push_back({"double",
               {I::dec_jz(1, 4), I::inc(0), I::inc(0), I::dec_jz(2, 0),
                I::halt(0)}});
  c.push_back({"loop", {I::dec_jz(2, 0)}});
  c.push_back({"halts-on-even",
               {I::dec_jz(1, 4), I::dec_jz(1, 3), I::dec_jz(2, 0),
                I::dec_jz(2, 3), I::halt(0)}});
  c.push_back({"count-forever", {I::inc(0), I::dec_jz(2, 0)}});
  {
    // Adds 12 to the input, then counts it down: 38 steps on input 0.
    MachineCode slow{"slow-countdown", {}};
    for (int i = 0; i < 12; ++i) slow.program.push_back(I::inc(1));
    slow.program.push_back(I::dec_jz(1, 14));
    slow.program.push_back(I::dec_jz(2, 12));
    slow.program.push_back(I::halt(0));
    c.push_back(std::move(slow));
  }
  c.push_back({"halts-on-zero", {I::dec_jz(1, 2), I::dec_jz(2, 1), I::halt(0)}});
  c.push_back({"halts-on-odd",
               {I::dec_jz(1, 3), I::dec_jz(1, 4), I::dec_jz(2, 0),
                I::dec_jz(2, 3), I::halt(0)}});
  return c;
}

}  // namespace

std::optional<HaltInfo> rm_run(const MachineCode& m, Natural input,
                               Natural max_steps) {
  MachineState s = initial_state(m, input);
  advance(m, s, max_steps);
  return s.halted;
}

bool turing_T(const MachineCode& m, Natural y, Natural z, Natural t) {
  if (z == 0) return false;
  auto h = rm_run(m, y, z);
  return h && h->step == z && h->output == t;
}

const std::vector<MachineCode>& machine_corpus() {
  static const std::vector<MachineCode> corpus = build_corpus();
  return corpus;
}

const MachineCode& machine_by_code(Natural code) {
  const auto& corpus = machine_corpus();
  if (code < corpus.size()) return corpus[code];
  return corpus[4];
}

bool halts_within(Natural code, Natural input, Natural steps) {
  thread_local std::map<std::pair<Natural, Natural>, MachineState> cache;
  const MachineCode& m = machine_by_code(code);
  auto key = std::make_pair(code < machine_corpus().size() ? code : 4, input);
  auto it = cache.find(key);
  if (it == cache.end()) {
    if (cache.size() > 4096) cache.clear();
    it = cache.emplace(key, initial_state(m, input)).first;
  }
  MachineState& s = it->second;
  if (s.halted) return s.halted->step <= steps;
  advance(m, s, steps);
  return s.halted && s.halted->step <= steps;
}

Natural pair(Natural a, Natural b) {
  Natural s = a + b;
  return s * (s + 1) / 2 + b;
}

namespace {

// Largest w with w(w+1)/2 <= z.
Natural triangle_root(Natural z) {
  auto w = static_cast<Natural>(
      (std::sqrt(8.0L * static_cast<long double>(z) + 1.0L) - 1.0L) / 2.0L);
  while (w * (w + 1) / 2 > z) --w;
  while ((w + 1) * (w + 2) / 2 <= z) ++w;
  return w;
}

}  // namespace

Natural proj1(Natural z) {
  Natural w = triangle_root(z);
  return w - (z - w * (w + 1) / 2);
}

Natural proj2(Natural z) {
  Natural w = triangle_root(z);
  return z - w * (w + 1) / 2;
}

}  // namespace clarith
