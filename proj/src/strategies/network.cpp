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

#include "network.hpp"

#include <algorithm>

#include "clarith/error.hpp"
#include "clarith/text.hpp"
#include "clarith/truth.hpp"
#include "digest.hpp"

namespace clarith::detail {
namespace {

bool is_prefix(const Path& prefix, const Path& path) {
  return prefix.size() <= path.size() &&
         std::equal(prefix.begin(), prefix.end(), path.begin());
}

bool payload_matches(Payload::Kind wanted, const Payload& got) {
  if (wanted == Payload::Kind::Const) return got.kind == Payload::Kind::Const;
  return got.kind != Payload::Kind::Const;
}

Natural bound_value(const Payload& p) {
  switch (p.kind) {
    case Payload::Kind::Left: return 0;
    case Payload::Kind::Right: return 1;
    default: return p.constant;
  }
}

}  // namespace

Network::Network(Formula main, std::vector<SlotSpec> slots, StrategyContext ctx,
                 std::shared_ptr<const WitnessScript> script)
    : main_(std::move(main)), ctx_(ctx), script_(std::move(script)) {
  for (auto& spec : slots) {
    if (spec.name == "main") throw ScriptError("'main' cannot name a slot");
    for (const auto& s : slots_)
      if (s.name == spec.name)
        throw ScriptError("slot '" + spec.name + "' declared twice");
    Slot s{spec.name, spec.strategy, nullptr, spec.strategy->sentence(), {}, {},
           Activity::Busy, 0};
    s.machine = spec.strategy->start(ctx_);
    slots_.push_back(std::move(s));
  }
  if (script_) {
    for (const auto& name : script_->referenced_slots()) slot(name);
    // Leading links are made before any move can arrive.
    while (pc_ < script_->code().size() &&
           script_->code()[pc_].op == ScriptInstr::Op::Link)
      run_script_instruction();
  }
}

Network::Slot& Network::slot(const std::string& name) {
  for (auto& s : slots_)
    if (s.name == name) return s;
  throw ScriptError("undefined slot '" + name + "'");
}

const Formula& Network::view(const std::string& game) {
  return game == "main" ? main_ : slot(game).current;
}

void Network::start_slot(const std::string& name) {
  Slot& s = slot(name);
  s.machine = s.strategy->start(ctx_);
  s.current = s.strategy->sentence();
  s.inbox.clear();
  s.outbox.clear();
  s.activity = Activity::Busy;
  s.moves = 0;
  std::erase_if(links_, [&](const Link& l) {
    return l.a.game == name || l.b.game == name;
  });
}

void Network::check_unlinked(const std::string& game, const Path& path) const {
  for (const auto& l : links_)
    for (const Endpoint* e : {&l.a, &l.b})
      if (e->game == game && is_prefix(e->path, path))
        throw ScriptError("position " + game + to_string(path) +
                          " is inside the link at " + to_string(*e));
}

void Network::feed(const std::string& name, const Path& path,
                   const Payload& payload) {
  check_unlinked(name, path);
  Slot& s = slot(name);
  Labmove m{Player::Environment, path, payload};
  if (auto bad = check_move(s.current, m))
    throw ScriptError("cannot feed " + to_string(m) + " to slot '" + name +
                      "': " + bad->message);
  s.current = apply_move(s.current, m);
  s.inbox.push_back(std::move(m));
}

void Network::link(const Endpoint& a, const Endpoint& b) {
  auto side = [&](const Endpoint& e) {
    const Formula& game = view(e.game);
    auto pol = surface_polarity(game, e.path);
    if (!pol)
      throw ScriptError("link endpoint " + to_string(e) +
                        " does not address a surface occurrence");
    bool negative = *pol == Polarity::Negative;
    // Orientation relative to the engine, which is the environment in slots.
    bool engine_negative = negative != (e.game != "main");
    return std::make_pair(subformula_at(game, e.path), engine_negative);
  };
  auto [fa, oa] = side(a);
  auto [fb, ob] = side(b);
  if (oa == ob)
    throw ScriptError("link " + to_string(a) + " " + to_string(b) +
                      " joins two copies played on the same side");
  if (!alpha_equal(fa, fb))
    throw ScriptError("link " + to_string(a) + " " + to_string(b) +
                      " joins different games: " + to_string(fa) + " and " +
                      to_string(fb));
  for (const auto& l : links_)
    for (const Endpoint* e : {&l.a, &l.b})
      for (const Endpoint* n : {&a, &b})
        if (e->game == n->game &&
            (is_prefix(e->path, n->path) || is_prefix(n->path, e->path)))
          throw ScriptError("link endpoint " + to_string(*n) +
                            " overlaps the existing link at " + to_string(*e));
  if (a.game == b.game && (is_prefix(a.path, b.path) || is_prefix(b.path, a.path)))
    throw ScriptError("link endpoints " + to_string(a) + " and " +
                      to_string(b) + " overlap");
  links_.push_back({a, b});
}

void Network::route(const std::string& game, const Labmove& move) {
  for (const auto& l : links_) {
    for (int side = 0; side < 2; ++side) {
      const Endpoint& from = side == 0 ? l.a : l.b;
      const Endpoint& to = side == 0 ? l.b : l.a;
      if (from.game != game || !is_prefix(from.path, move.path)) continue;
      Path path = to.path;
      path.insert(path.end(), move.path.begin() + from.path.size(),
                  move.path.end());
      if (to.game == "main") {
        main_outbox_.push_back({Player::Machine, std::move(path), move.payload});
      } else {
        Slot& s = slot(to.game);
        Labmove m{Player::Environment, std::move(path), move.payload};
        if (auto bad = check_move(s.current, m))
          throw Error("copy of " + to_string(move) + " into slot '" + s.name +
                      "' is illegal: " + bad->message);
        s.current = apply_move(s.current, m);
        s.inbox.push_back(std::move(m));
      }
      return;
    }
  }
  if (game == "main") main_inbox_.push_back(move);
  else slot(game).outbox.push_back(move);
}

Natural Network::value(const Term& t, std::size_t line) const {
  Term closed = t;
  for (const auto& name : free_vars(t)) {
    auto it = vars_.find(name);
    if (it == vars_.end())
      throw ScriptError("script line " + std::to_string(line) +
                        ": unbound variable '" + name + "'");
    closed = substitute(closed, name, Term::numeral(it->second));
  }
  auto v = term_value(closed);
  if (!v)
    throw ScriptError("script line " + std::to_string(line) +
                      ": arithmetic overflow");
  return *v;
}

Payload Network::payload_of(const ScriptInstr& ins) const {
  switch (ins.kind) {
    case Payload::Kind::Left: return Payload::left();
    case Payload::Kind::Right: return Payload::right();
    default: return Payload::constant_of(value(*ins.term, ins.line));
  }
}

bool Network::script_blocked() const {
  if (!script_ || script_stalled_ || pc_ >= script_->code().size()) return true;
  const ScriptInstr& ins = script_->code()[pc_];
  switch (ins.op) {
    case ScriptInstr::Op::Wait:
      return std::none_of(main_inbox_.begin(), main_inbox_.end(),
                          [&](const Labmove& m) {
                            return m.path == ins.path &&
                                   payload_matches(ins.kind, m.payload);
                          });
    case ScriptInstr::Op::Await:
      for (const auto& s : slots_)
        if (s.name == ins.slot)
          return std::none_of(s.outbox.begin(), s.outbox.end(),
                              [&](const Labmove& m) { return m.path == ins.path; });
      return true;
    case ScriptInstr::Op::Move:
    case ScriptInstr::Op::Link:
      return !main_outbox_.empty();
    default:
      return false;
  }
}

bool Network::run_script_instruction() {
  const ScriptInstr& ins = script_->code()[pc_];
  const std::string where = "script line " + std::to_string(ins.line) + ": ";
  using Op = ScriptInstr::Op;
  try {
    switch (ins.op) {
      case Op::Wait: {
        auto it = std::find_if(main_inbox_.begin(), main_inbox_.end(),
                               [&](const Labmove& m) {
                                 return m.path == ins.path &&
                                        payload_matches(ins.kind, m.payload);
                               });
        vars_[ins.name] = bound_value(it->payload);
        main_inbox_.erase(it);
        break;
      }
      case Op::Await: {
        Slot& s = slot(ins.slot);
        auto it = std::find_if(s.outbox.begin(), s.outbox.end(),
                               [&](const Labmove& m) { return m.path == ins.path; });
        vars_[ins.name] = bound_value(it->payload);
        s.outbox.erase(it);
        break;
      }
      case Op::Move: {
        check_unlinked("main", ins.path);
        Labmove m{Player::Machine, ins.path, payload_of(ins)};
        if (auto bad = check_move(main_, m))
          throw ScriptError("illegal move " + to_string(m) + ": " + bad->message);
        main_outbox_.push_back(std::move(m));
        break;
      }
      case Op::Start:
        start_slot(ins.slot);
        break;
      case Op::Feed:
        feed(ins.slot, ins.path, payload_of(ins));
        break;
      case Op::Link:
        link(ins.a, ins.b);
        break;
      case Op::Branch: {
        Formula cond = *ins.cond;
        for (const auto& name : free_vars(cond)) {
          auto it = vars_.find(name);
          if (it == vars_.end())
            throw ScriptError("unbound variable '" + name + "'");
          cond = substitute(cond, name, Term::numeral(it->second));
        }
        Truth3 t = eval_elementary(cond, ctx_.bound);
        if (t.is_unknown()) {
          script_stalled_ = true;
          return false;
        }
        pc_ = t.is_true() ? pc_ + 1 : ins.target;
        return true;
      }
      case Op::Jump:
        pc_ = ins.target;
        return true;
      case Op::LoopInit:
        vars_[ins.name] = value(*ins.term, ins.line);
        break;
      case Op::LoopTest:
        if (ins.limit && vars_[ins.name] > value(*ins.limit, ins.line)) {
          pc_ = ins.target;
          return true;
        }
        break;
      case Op::LoopNext: {
        Natural& v = vars_[ins.name];
        if (v == static_cast<Natural>(-1)) throw ScriptError("loop counter overflow");
        ++v;
        pc_ = ins.target;
        return true;
      }
      case Op::Retire:
        pc_ = script_->code().size();
        return true;
    }
  } catch (const ScriptError& e) {
    std::string msg = e.what();
    if (msg.rfind("script line", 0) == 0) throw;
    throw ScriptError(where + msg);
  } catch (const LegalityError& e) {
    throw ScriptError(where + e.what());
  }
  ++pc_;
  return true;
}

void Network::step_slot(Slot& s) {
  std::vector<Labmove> inbox;
  inbox.swap(s.inbox);
  Step st = s.machine->step(inbox);
  s.activity = st.activity;
  if (!st.move) return;
  if (auto bad = check_move(s.current, *st.move))
    throw Error("slot '" + s.name + "' made an illegal move " +
                to_string(*st.move) + ": " + bad->message);
  s.current = apply_move(s.current, *st.move);
  ++s.moves;
  route(s.name, *st.move);
}

Step Network::step(std::span<const Labmove> incoming) {
  for (const auto& m : incoming) {
    if (auto bad = check_move(main_, m))
      throw Error("incoming move " + to_string(m) + " is illegal: " + bad->message);
    main_ = apply_move(main_, m);
    ++main_moves_;
    route("main", m);
  }
  auto emit = [&]() -> std::optional<Labmove> {
    if (main_outbox_.empty()) return std::nullopt;
    Labmove m = std::move(main_outbox_.front());
    main_outbox_.pop_front();
    if (auto bad = check_move(main_, m))
      throw Error("network move " + to_string(m) + " is illegal: " + bad->message);
    main_ = apply_move(main_, m);
    ++main_moves_;
    return m;
  };
  Step out;
  out.move = emit();
  if (!script_blocked()) run_script_instruction();
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    Slot& s = slots_[i];
    if (s.activity == Activity::Busy || !s.inbox.empty()) step_slot(s);
  }
  if (!out.move) out.move = emit();

  bool busy = !main_outbox_.empty() || !script_blocked();
  bool stalled = script_stalled_;
  for (const auto& s : slots_) {
    busy = busy || s.activity == Activity::Busy || !s.inbox.empty();
    stalled = stalled || s.activity == Activity::OracleStall;
  }
  out.activity = busy      ? Activity::Busy
                 : stalled ? Activity::OracleStall
                           : Activity::Quiescent;
  return out;
}

std::uint64_t Network::digest() const {
  Fnv h;
  h.add(pc_).add(main_moves_).add(main_outbox_.size()).add(main_inbox_.size());
  h.add(links_.size()).add(script_stalled_ ? 1 : 0);
  for (const auto& [name, v] : vars_) h.add(name).add(v);
  for (const auto& s : slots_)
    h.add(s.name).add(s.moves).add(s.outbox.size()).add(s.machine->digest());
  return h.value();
}

}  // namespace clarith::detail
