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

#include "clarith/simulate.hpp"

#include <algorithm>

#include "clarith/error.hpp"
#include "clarith/text.hpp"

namespace clarith {

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Won: return "won";
    case VerdictKind::Lost: return "lost";
    case VerdictKind::Unknown: return "unknown";
    default: return "stalled";
  }
}

Json to_json(const History& h) {
  Json out = Json::array();
  for (const auto& e : h)
    out.push_back({{"step", e.step}, {"run", to_json(e.run)}, {"digest", e.digest}});
  return out;
}

History history_from_json(const Json& j) {
  History h;
  try {
    for (const auto& e : j)
      h.push_back({e.at("step").get<std::uint64_t>(), run_from_json(e.at("run")),
                   e.at("digest").get<std::uint64_t>()});
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed history: ") + e.what());
  }
  return h;
}

std::vector<Labmove> environment_options(const GameSession& s, Natural range) {
  std::vector<Labmove> out;
  for (const auto& t : s.legal_moves(Player::Environment)) {
    switch (t.kind) {
      case Payload::Kind::Left:
        out.push_back({t.player, t.path, Payload::left()});
        break;
      case Payload::Kind::Right:
        out.push_back({t.player, t.path, Payload::right()});
        break;
      case Payload::Kind::Const:
        for (Natural c = 0; c <= range; ++c)
          out.push_back({t.player, t.path, Payload::constant_of(c)});
        break;
    }
  }
  return out;
}

ScriptedDriver::ScriptedDriver(const Run& moves) {
  for (const auto& m : moves) moves_.push_back({m, std::nullopt});
}

EnvAction ScriptedDriver::next(const GameSession&, std::uint64_t tick, bool busy) {
  if (next_ >= moves_.size()) return EnvAction::done();
  const Timed& t = moves_[next_];
  if (t.at ? tick < *t.at : busy) return EnvAction::wait();
  ++next_;
  return EnvAction::play(t.move);
}

EnvAction ExhaustiveDriver::next(const GameSession& s, std::uint64_t, bool busy) {
  if (busy) return EnvAction::wait();
  if (moves_ >= depth_) return EnvAction::done();
  auto options = environment_options(s, range_);
  if (options.empty()) return EnvAction::done();
  std::size_t k = decisions_.size();
  std::size_t choice = k < prefix_.size() ? prefix_[k] : 0;
  if (choice > options.size())
    throw Error("exhaustive branch prefix does not fit the play");
  decisions_.push_back({choice, options.size() + 1});
  if (choice == 0) return EnvAction::done();
  ++moves_;
  return EnvAction::play(options[choice - 1]);
}

std::optional<std::vector<std::size_t>> ExhaustiveDriver::successor(
    const std::vector<Decision>& decisions) {
  for (std::size_t j = decisions.size(); j-- > 0;) {
    if (decisions[j].chosen + 1 < decisions[j].options) {
      std::vector<std::size_t> prefix;
      for (std::size_t i = 0; i < j; ++i) prefix.push_back(decisions[i].chosen);
      prefix.push_back(decisions[j].chosen + 1);
      return prefix;
    }
  }
  return std::nullopt;
}

EnvAction RandomDriver::next(const GameSession& s, std::uint64_t, bool busy) {
  if (busy) return EnvAction::wait();
  if (moves_ >= depth_) return EnvAction::done();
  auto options = environment_options(s, range_);
  if (options.empty()) return EnvAction::done();
  std::uniform_int_distribution<std::size_t> pick(0, options.size());
  std::size_t choice = pick(rng_);
  if (choice == 0) return EnvAction::done();
  ++moves_;
  return EnvAction::play(options[choice - 1]);
}

LivePlay::LivePlay(StrategyPtr strategy, Formula game, Natural bound,
                   Limits limits)
    : strategy_(std::move(strategy)),
      session_(std::move(game), bound),
      limits_(limits) {
  if (!alpha_equal(session_.root(), strategy_->sentence()))
    throw Error("strategy plays " + to_string(strategy_->sentence()) +
                ", not " + to_string(session_.root()));
  machine_ = strategy_->start(StrategyContext{bound});
  record();
}

void LivePlay::record() {
  history_.push_back({steps_, session_.run(), machine_->digest()});
}

void LivePlay::env_move(const Labmove& m) {
  if (verdict_) throw LegalityError("finished", "the play is over");
  if (m.player != Player::Environment)
    throw LegalityError("wrong-player", "the environment cannot move as the machine");
  session_.apply(m);
  pending_.push_back(m);
  // A quiescent machine wakes on a new observation.
  activity_ = Activity::Busy;
  record();
}

void LivePlay::env_offended(const std::string& reason) {
  if (verdict_) return;
  verdict_ = Verdict{VerdictKind::Won,
                     "environment made an illegal move: " + reason, {}};
}

void LivePlay::end_by_limit(const std::string& what) {
  const Adjudication& a = session_.adjudicate();
  if (a.winner == Player::Machine)
    verdict_ = Verdict{VerdictKind::Won, what + "; " + a.reason, {}};
  else
    verdict_ = Verdict{VerdictKind::Stalled, what + "; " + a.reason, {}};
}

std::optional<Labmove> LivePlay::step_machine() {
  if (verdict_) return std::nullopt;
  if (steps_ >= limits_.max_steps) {
    end_by_limit("step limit " + std::to_string(limits_.max_steps) + " reached");
    return std::nullopt;
  }
  Step st;
  try {
    st = machine_->step(pending_);
  } catch (const std::exception& e) {
    verdict_ = Verdict{VerdictKind::Lost, std::string("machine fault: ") + e.what(),
                       session_.run()};
    return std::nullopt;
  }
  pending_.clear();
  ++steps_;
  activity_ = st.activity;
  if (!st.move) return std::nullopt;
  const Labmove& m = *st.move;
  std::optional<Illegality> bad;
  if (m.player != Player::Machine)
    bad = Illegality{"wrong-player", "the machine cannot move as the environment"};
  else
    bad = check_move(session_.current(), m);
  if (bad) {
    Run trace = session_.run();
    trace.push_back(m);
    verdict_ = Verdict{VerdictKind::Lost,
                       "machine made an illegal move " + to_string(m) + ": " +
                           bad->message,
                       std::move(trace)};
    return std::nullopt;
  }
  session_.apply(m);
  move_steps_.push_back(steps_);
  record();
  if (move_steps_.size() > limits_.max_moves)
    end_by_limit("move limit " + std::to_string(limits_.max_moves) + " reached");
  return m;
}

std::vector<Labmove> LivePlay::settle() {
  std::vector<Labmove> out;
  while (!verdict_ && activity_ == Activity::Busy)
    if (auto m = step_machine()) out.push_back(*m);
  return out;
}

const Verdict& LivePlay::finish() {
  if (verdict_) return *verdict_;
  const Adjudication& a = session_.adjudicate();
  if (a.winner == Player::Machine) {
    verdict_ = Verdict{VerdictKind::Won, a.reason, {}};
  } else if (a.winner == Player::Environment) {
    if (activity_ == Activity::OracleStall)
      verdict_ = Verdict{VerdictKind::Unknown,
                         "machine stalled on the truth oracle; " + a.reason, {}};
    else
      verdict_ = Verdict{VerdictKind::Lost, a.reason, session_.run()};
  } else {
    verdict_ = Verdict{VerdictKind::Unknown, a.reason, {}};
  }
  return *verdict_;
}

PlayResult simulate(const StrategyPtr& s, const Formula& game,
                    EnvironmentDriver& env, Natural bound, const Limits& limits) {
  LivePlay play(s, game, bound, limits);
  bool env_done = false;
  for (std::uint64_t tick = 0; !play.verdict(); ++tick) {
    if (!env_done) {
      EnvAction a = env.next(play.session(), tick, tick > 0 && play.machine_busy());
      if (a.kind == EnvAction::Kind::Move) {
        try {
          play.env_move(a.move);
        } catch (const LegalityError& e) {
          play.env_offended(e.what());
          break;
        }
      } else if (a.kind == EnvAction::Kind::Done) {
        env_done = true;
      }
    }
    if (env_done && play.steps() > 0 && !play.machine_busy()) {
      play.finish();
      break;
    }
    play.step_machine();
  }
  PlayResult r;
  r.run = play.session().run();
  r.history = play.history();
  r.verdict = *play.verdict();
  r.steps = play.steps();
  r.move_steps = play.move_steps();
  r.adjudication = play.session().adjudication();
  return r;
}

bool history_predicate(const History& a, const Formula& x, const Formula& e,
                       const std::vector<Natural>& c) {
  for (std::size_t i = 1; i < a.size(); ++i) {
    const Run& prev = a[i - 1].run;
    const Run& cur = a[i].run;
    if (a[i].step < a[i - 1].step || prev.size() > cur.size() ||
        !std::equal(prev.begin(), prev.end(), cur.begin()))
      return false;
  }
  Formula reached = x;
  try {
    if (!a.empty()) reached = yield(x, a.back().run);
  } catch (const Error&) {
    return false;
  }
  auto vars = free_vars_ordered(e);
  if (vars.size() != c.size()) return false;
  Formula target = e;
  for (std::size_t i = 0; i < vars.size(); ++i)
    target = substitute(target, vars[i], Term::numeral(c[i]));
  return alpha_equal(reached, target);
}

}  // namespace clarith
