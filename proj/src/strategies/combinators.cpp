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

#include <map>

#include "clarith/error.hpp"
#include "clarith/strategy.hpp"
#include "clarith/text.hpp"
#include "clarith/truth.hpp"
#include "digest.hpp"
#include "network.hpp"

namespace clarith {

using detail::Fnv;
using detail::Network;
using detail::SlotSpec;

const char* to_string(Activity a) {
  switch (a) {
    case Activity::Busy: return "busy";
    case Activity::Quiescent: return "quiescent";
    default: return "oracle-stall";
  }
}

Json Strategy::fields() const { return Json::object(); }

namespace {

constexpr const char* kAxiomNames[] = {"PA1", "PA2", "PA3", "PA4",
                                       "PA5", "PA6", "PA7", "AX8"};

// Environment constants at the root, consumed until `count` are bound.
class ClosureWatcher {
 public:
  ClosureWatcher(Formula game, std::vector<std::string> vars)
      : current_(std::move(game)), vars_(std::move(vars)) {}

  void absorb(std::span<const Labmove> incoming) {
    for (const auto& m : incoming) {
      if (auto bad = check_move(current_, m))
        throw Error("incoming move " + to_string(m) + " is illegal: " + bad->message);
      if (values_.size() < vars_.size() && m.path.empty() &&
          m.payload.kind == Payload::Kind::Const)
        values_[vars_[values_.size()]] = m.payload.constant;
      current_ = apply_move(current_, m);
      ++moves_;
    }
  }
  void own(const Labmove& m) {
    current_ = apply_move(current_, m);
    ++moves_;
  }
  bool complete() const { return values_.size() == vars_.size(); }
  const std::map<std::string, Natural>& values() const { return values_; }
  const Formula& current() const { return current_; }
  std::uint64_t moves() const { return moves_; }

 private:
  Formula current_;
  std::vector<std::string> vars_;
  std::map<std::string, Natural> values_;
  std::uint64_t moves_ = 0;
};

// ---------------------------------------------------------------- silent

class SilentMachine final : public Machine {
 public:
  Step step(std::span<const Labmove>) override { return {}; }
  std::uint64_t digest() const override { return 0; }
};

class SilentStrategy final : public Strategy {
 public:
  explicit SilentStrategy(Formula s) : sentence_(std::move(s)) {}
  const char* combinator() const override { return "silent"; }
  const Formula& sentence() const override { return sentence_; }
  std::unique_ptr<Machine> start(const StrategyContext&) const override {
    return std::make_unique<SilentMachine>();
  }
  Json fields() const override { return {{"sentence", to_string(sentence_)}}; }

 private:
  Formula sentence_;
};

// ---------------------------------------------------------------- axioms

class SuccessorMachine final : public Machine {
 public:
  Step step(std::span<const Labmove> incoming) override {
    Step out;
    for (const auto& m : incoming) {
      if (!answered_ && !c_ && m.path.empty() &&
          m.payload.kind == Payload::Kind::Const)
        c_ = m.payload.constant;
    }
    if (c_ && !answered_) {
      if (*c_ == static_cast<Natural>(-1)) throw Error("successor overflows");
      out.move = Labmove{Player::Machine, {}, Payload::constant_of(*c_ + 1)};
      answered_ = true;
    }
    return out;
  }
  std::uint64_t digest() const override {
    return Fnv().add(c_ ? *c_ + 1 : 0).add(answered_ ? 1 : 0).value();
  }

 private:
  std::optional<Natural> c_;
  bool answered_ = false;
};

class AxiomStrategy final : public Strategy {
 public:
  AxiomStrategy(AxiomTag tag, Formula s) : tag_(tag), sentence_(std::move(s)) {}
  const char* combinator() const override { return "axiom"; }
  const Formula& sentence() const override { return sentence_; }
  std::unique_ptr<Machine> start(const StrategyContext&) const override {
    if (tag_ == AxiomTag::AX8) return std::make_unique<SuccessorMachine>();
    return std::make_unique<SilentMachine>();
  }
  Json fields() const override {
    return {{"axiom", to_string(tag_)}, {"sentence", to_string(sentence_)}};
  }

 private:
  AxiomTag tag_;
  Formula sentence_;
};

// ---------------------------------------------------------------- copycat

class CopycatStrategy final : public Strategy {
 public:
  explicit CopycatStrategy(Formula game)
      : game_(std::move(game)), sentence_(Formula::implies(game_, game_)) {}
  const char* combinator() const override { return "copycat"; }
  const Formula& sentence() const override { return sentence_; }
  std::unique_ptr<Machine> start(const StrategyContext& ctx) const override {
    auto net = std::make_unique<Network>(sentence_, std::vector<SlotSpec>{}, ctx,
                                         nullptr);
    net->link({"main", {0}}, {"main", {1}});
    return net;
  }
  Json fields() const override { return {{"game", to_string(game_)}}; }

 private:
  Formula game_;
  Formula sentence_;
};

// ---------------------------------------------------------------- FS / IS

class ScanMachine final : public Machine {
 public:
  ScanMachine(Formula game, std::vector<std::string> closure, StrategyPtr decider,
              std::vector<std::string> decider_vars, std::string x, Path target,
              StrategyContext ctx)
      : watch_(std::move(game), std::move(closure)),
        decider_(std::move(decider)),
        decider_vars_(std::move(decider_vars)),
        x_(std::move(x)),
        target_(std::move(target)),
        ctx_(ctx) {}

  Step step(std::span<const Labmove> incoming) override {
    watch_.absorb(incoming);
    Step out;
    if (done_ || !watch_.complete()) return out;
    std::vector<Labmove> feed;
    if (!probe_) {
      probe_ = decider_->start(ctx_);
      probe_game_ = decider_->sentence();
      for (const auto& v : decider_vars_) {
        Natural c = v == x_ ? i_ : watch_.values().at(v);
        Labmove m{Player::Environment, {}, Payload::constant_of(c)};
        if (auto bad = check_move(*probe_game_, m))
          throw Error("decider does not accept " + to_string(m) + ": " +
                      bad->message);
        probe_game_ = apply_move(*probe_game_, m);
        feed.push_back(std::move(m));
      }
    }
    Step st = probe_->step(feed);
    ++probe_steps_;
    if (st.move) {
      const Labmove& m = *st.move;
      if (auto bad = check_move(*probe_game_, m))
        throw Error("decider made an illegal move " + to_string(m) + ": " +
                    bad->message);
      if (!m.path.empty() || m.payload.kind == Payload::Kind::Const)
        throw Error("decider moved " + to_string(m) + " instead of choosing");
      probe_.reset();
      if (m.payload.kind == Payload::Kind::Left) {
        out.move = Labmove{Player::Machine, target_, Payload::constant_of(i_)};
        watch_.own(*out.move);
        done_ = true;
        return out;
      }
      if (i_ == static_cast<Natural>(-1)) throw Error("search counter overflows");
      ++i_;
      out.activity = Activity::Busy;
      return out;
    }
    out.activity = st.activity;
    return out;
  }

  std::uint64_t digest() const override {
    return Fnv()
        .add(watch_.moves())
        .add(i_)
        .add(probe_steps_)
        .add(done_ ? 1 : 0)
        .add(probe_ ? probe_->digest() : 0)
        .value();
  }

 private:
  ClosureWatcher watch_;
  StrategyPtr decider_;
  std::vector<std::string> decider_vars_;
  std::string x_;
  Path target_;
  StrategyContext ctx_;
  Natural i_ = 0;
  std::uint64_t probe_steps_ = 0;
  bool done_ = false;
  std::unique_ptr<Machine> probe_;
  std::optional<Formula> probe_game_;
};

class ScanStrategy final : public Strategy {
 public:
  ScanStrategy(bool infinite, StrategyPtr decider, Formula f, std::string x,
               StrategyPtr support)
      : infinite_(infinite),
        decider_(std::move(decider)),
        support_(std::move(support)),
        f_(std::move(f)),
        x_(std::move(x)),
        sentence_(choice_closure(
            infinite_ ? Formula::implies(Formula::exists(x_, f_),
                                         Formula::ch_ex(x_, f_))
                      : Formula::ch_ex(x_, f_))) {
    if (!is_elementary(f_))
      throw Error(std::string(combinator()) + " needs an elementary formula, got " +
                  to_string(f_));
    Formula dec = Formula::ch_or(f_, Formula::negation(f_));
    if (!alpha_equal(choice_closure(dec), decider_->sentence()))
      throw Error("decider plays " + to_string(decider_->sentence()) +
                  ", expected " + to_string(choice_closure(dec)));
    decider_vars_ = free_vars_ordered(dec);
  }
  const char* combinator() const override { return infinite_ ? "is" : "fs"; }
  const Formula& sentence() const override { return sentence_; }
  std::vector<StrategyPtr> children() const override {
    if (support_) return {decider_, support_};
    return {decider_};
  }
  std::unique_ptr<Machine> start(const StrategyContext& ctx) const override {
    Formula body = sentence_;
    std::vector<std::string> closure;
    while (body.kind() == Formula::Kind::ChAll &&
           closure.size() < closure_size()) {
      closure.push_back(body.var());
      body = body.body();
    }
    // Closure binders keep the names of the free variables they bind.
    return std::make_unique<ScanMachine>(
        sentence_, std::move(closure), decider_, decider_vars_, x_,
        infinite_ ? Path{1} : Path{}, ctx);
  }
  Json fields() const override {
    return {{"formula", to_string(f_)}, {"var", x_}};
  }

 private:
  std::size_t closure_size() const {
    Formula open = infinite_ ? Formula::implies(Formula::exists(x_, f_),
                                                Formula::ch_ex(x_, f_))
                             : Formula::ch_ex(x_, f_);
    return free_vars(open).size();
  }

  bool infinite_;
  StrategyPtr decider_;
  StrategyPtr support_;
  Formula f_;
  std::string x_;
  Formula sentence_;
  std::vector<std::string> decider_vars_;
};

// ------------------------------------------------------ constructivization

class SearchMachine final : public Machine {
 public:
  SearchMachine(Formula f, std::string x, Natural bound)
      : f_(std::move(f)), x_(std::move(x)), bound_(bound) {}

  Step step(std::span<const Labmove>) override {
    Step out;
    if (done_ || stalled_) {
      out.activity = stalled_ ? Activity::OracleStall : Activity::Quiescent;
      return out;
    }
    Truth3 t = eval_elementary(substitute(f_, x_, Term::numeral(n_)), bound_);
    if (t.is_true()) {
      out.move = Labmove{Player::Machine, {}, Payload::constant_of(n_)};
      done_ = true;
    } else if (t.is_unknown()) {
      stalled_ = true;
      out.activity = Activity::OracleStall;
    } else {
      if (n_ == static_cast<Natural>(-1)) throw Error("search counter overflows");
      ++n_;
      out.activity = Activity::Busy;
    }
    return out;
  }
  std::uint64_t digest() const override {
    return Fnv().add(n_).add(done_ ? 1 : 0).add(stalled_ ? 1 : 0).value();
  }

 private:
  Formula f_;
  std::string x_;
  Natural bound_;
  Natural n_ = 0;
  bool done_ = false;
  bool stalled_ = false;
};

class ConstructivizationStrategy final : public Strategy {
 public:
  ConstructivizationStrategy(Formula f, std::string x,
                             std::optional<Natural> bound, StrategyPtr support)
      : f_(std::move(f)),
        x_(std::move(x)),
        bound_(bound),
        support_(std::move(support)),
        sentence_(Formula::ch_ex(x_, f_)) {
    if (!is_elementary(f_))
      throw Error("constructivization needs an elementary formula, got " +
                  to_string(f_));
    for (const auto& v : free_vars(f_))
      if (v != x_)
        throw Error("constructivization formula has free variable '" + v +
                    "' besides '" + x_ + "'");
  }
  const char* combinator() const override { return "constructivization"; }
  const Formula& sentence() const override { return sentence_; }
  std::vector<StrategyPtr> children() const override {
    if (support_) return {support_};
    return {};
  }
  std::unique_ptr<Machine> start(const StrategyContext& ctx) const override {
    return std::make_unique<SearchMachine>(f_, x_, bound_.value_or(ctx.bound));
  }
  Json fields() const override {
    Json j = {{"formula", to_string(f_)}, {"var", x_}};
    if (bound_) j["bound"] = *bound_;
    return j;
  }

 private:
  Formula f_;
  std::string x_;
  std::optional<Natural> bound_;
  StrategyPtr support_;
  Formula sentence_;
};

// ---------------------------------------------------------------- compose

class ComposeStrategy final : public Strategy {
 public:
  ComposeStrategy(StrategyPtr provider, StrategyPtr consumer)
      : provider_(std::move(provider)), consumer_(std::move(consumer)) {
    const Formula& c = consumer_->sentence();
    if (c.kind() != Formula::Kind::Implies)
      throw Error("compose: consumer plays " + to_string(c) +
                  ", which is not an implication");
    if (!alpha_equal(c.child(0), provider_->sentence()))
      throw Error("compose: provider plays " + to_string(provider_->sentence()) +
                  " but the consumer expects " + to_string(c.child(0)));
    sentence_ = c.child(1);
  }
  const char* combinator() const override { return "compose"; }
  const Formula& sentence() const override { return *sentence_; }
  std::vector<StrategyPtr> children() const override {
    return {provider_, consumer_};
  }
  std::unique_ptr<Machine> start(const StrategyContext& ctx) const override {
    // The consumer is stepped before the provider.
    auto net = std::make_unique<Network>(
        *sentence_,
        std::vector<SlotSpec>{{"consumer", consumer_}, {"provider", provider_}},
        ctx, nullptr);
    net->link({"provider", {}}, {"consumer", {0}});
    net->link({"consumer", {1}}, {"main", {}});
    return net;
  }

 private:
  StrategyPtr provider_;
  StrategyPtr consumer_;
  std::optional<Formula> sentence_;
};

// ---------------------------------------------------------------- induction

class InductionMachine final : public Machine {
 public:
  InductionMachine(Formula game, std::vector<std::string> closure,
                   StrategyPtr base, StrategyPtr step, Formula f, std::string x,
                   StrategyContext ctx)
      : watch_(std::move(game), std::move(closure)),
        base_(std::move(base)),
        step_(std::move(step)),
        f_(std::move(f)),
        x_(std::move(x)),
        ctx_(ctx) {}

  Step step(std::span<const Labmove> incoming) override {
    if (net_) return net_->step(incoming);
    watch_.absorb(incoming);
    if (!watch_.complete()) return {};
    build();
    return net_->step({});
  }

  std::uint64_t digest() const override {
    return net_ ? net_->digest() : Fnv().add(watch_.moves()).value();
  }

 private:
  void feed_closure(const std::string& slot, const Formula& open,
                    std::optional<Natural> x_value) {
    for (const auto& v : free_vars_ordered(open)) {
      Natural c = v == x_ ? *x_value : watch_.values().at(v);
      net_->feed(slot, {}, Payload::constant_of(c));
    }
  }

  void build() {
    auto it = watch_.values().find(x_);
    Natural c = it == watch_.values().end() ? 0 : it->second;
    std::vector<SlotSpec> slots{{"base", base_}};
    for (Natural k = 0; k < c; ++k)
      slots.push_back({"step" + std::to_string(k), step_});
    net_ = std::make_unique<Network>(watch_.current(), std::move(slots), ctx_,
                                     nullptr);
    Formula base_open = substitute(f_, x_, Term::zero());
    Formula step_open = Formula::implies(
        f_, substitute(f_, x_, Term::succ(Term::var(x_))));
    feed_closure("base", base_open, std::nullopt);
    for (Natural k = 0; k < c; ++k)
      feed_closure("step" + std::to_string(k), step_open, k);
    Endpoint prev{"base", {}};
    for (Natural k = 0; k < c; ++k) {
      std::string name = "step" + std::to_string(k);
      net_->link(prev, {name, {0}});
      prev = {name, {1}};
    }
    net_->link(prev, {"main", {}});
  }

  ClosureWatcher watch_;
  StrategyPtr base_;
  StrategyPtr step_;
  Formula f_;
  std::string x_;
  StrategyContext ctx_;
  std::unique_ptr<Network> net_;
};

class InductionStrategy final : public Strategy {
 public:
  InductionStrategy(StrategyPtr base, StrategyPtr step, Formula f, std::string x)
      : base_(std::move(base)),
        step_(std::move(step)),
        f_(std::move(f)),
        x_(std::move(x)),
        sentence_(choice_closure(f_)) {
    Formula base_game = choice_closure(substitute(f_, x_, Term::zero()));
    Formula step_game = choice_closure(Formula::implies(
        f_, substitute(f_, x_, Term::succ(Term::var(x_)))));
    if (!alpha_equal(base_->sentence(), base_game))
      throw Error("induction base plays " + to_string(base_->sentence()) +
                  ", expected " + to_string(base_game));
    if (!alpha_equal(step_->sentence(), step_game))
      throw Error("induction step plays " + to_string(step_->sentence()) +
                  ", expected " + to_string(step_game));
  }
  const char* combinator() const override { return "induction"; }
  const Formula& sentence() const override { return sentence_; }
  std::vector<StrategyPtr> children() const override { return {base_, step_}; }
  std::unique_ptr<Machine> start(const StrategyContext& ctx) const override {
    return std::make_unique<InductionMachine>(sentence_, free_vars_ordered(f_),
                                              base_, step_, f_, x_, ctx);
  }
  Json fields() const override {
    return {{"formula", to_string(f_)}, {"var", x_}};
  }

 private:
  StrategyPtr base_;
  StrategyPtr step_;
  Formula f_;
  std::string x_;
  Formula sentence_;
};

// ---------------------------------------------------------------- scripts

class ScriptStrategy final : public Strategy {
 public:
  ScriptStrategy(WitnessScript script,
                 std::vector<std::pair<std::string, StrategyPtr>> slots,
                 Formula sentence)
      : script_(std::make_shared<const WitnessScript>(std::move(script))),
        slots_(std::move(slots)),
        sentence_(std::move(sentence)) {
    for (const auto& name : script_->referenced_slots()) {
      if (name == "main") continue;
      bool found = false;
      for (const auto& [n, s] : slots_) found = found || n == name;
      if (!found) throw ScriptError("undefined slot '" + name + "'");
    }
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      if (slots_[i].first == "main") throw ScriptError("'main' cannot name a slot");
      if (!slots_[i].second)
        throw ScriptError("slot '" + slots_[i].first + "' has no strategy");
      for (std::size_t j = 0; j < i; ++j)
        if (slots_[i].first == slots_[j].first)
          throw ScriptError("slot '" + slots_[i].first + "' declared twice");
    }
  }
  const char* combinator() const override { return "script"; }
  const Formula& sentence() const override { return sentence_; }
  std::vector<StrategyPtr> children() const override {
    std::vector<StrategyPtr> out;
    for (const auto& [n, s] : slots_) out.push_back(s);
    return out;
  }
  std::unique_ptr<Machine> start(const StrategyContext& ctx) const override {
    std::vector<SlotSpec> specs;
    for (const auto& [n, s] : slots_) specs.push_back({n, s});
    return std::make_unique<Network>(sentence_, std::move(specs), ctx, script_);
  }
  Json fields() const override {
    Json names = Json::array();
    for (const auto& [n, s] : slots_) names.push_back(n);
    return {{"sentence", to_string(sentence_)},
            {"slots", names},
            {"script", script_->source()}};
  }

 private:
  std::shared_ptr<const WitnessScript> script_;
  std::vector<std::pair<std::string, StrategyPtr>> slots_;
  Formula sentence_;
};

}  // namespace

std::optional<AxiomTag> axiom_tag_from_string(const std::string& s) {
  for (std::size_t i = 0; i < std::size(kAxiomNames); ++i)
    if (s == kAxiomNames[i]) return static_cast<AxiomTag>(i);
  return std::nullopt;
}

const char* to_string(AxiomTag tag) {
  return kAxiomNames[static_cast<std::size_t>(tag)];
}

StrategyPtr silent(Formula sentence) {
  return std::make_shared<SilentStrategy>(std::move(sentence));
}

StrategyPtr axiom_strategy(AxiomTag tag, Formula sentence) {
  return std::make_shared<AxiomStrategy>(tag, std::move(sentence));
}

StrategyPtr copycat(Formula game) {
  return std::make_shared<CopycatStrategy>(std::move(game));
}

StrategyPtr fs_combinator(StrategyPtr decider, Formula f, std::string x,
                          StrategyPtr support) {
  return std::make_shared<ScanStrategy>(false, std::move(decider), std::move(f),
                                        std::move(x), std::move(support));
}

StrategyPtr is_combinator(StrategyPtr decider, Formula f, std::string x) {
  return std::make_shared<ScanStrategy>(true, std::move(decider), std::move(f),
                                        std::move(x), nullptr);
}

StrategyPtr constructivization_strategy(Formula f, std::string x,
                                        std::optional<Natural> bound,
                                        StrategyPtr support) {
  return std::make_shared<ConstructivizationStrategy>(
      std::move(f), std::move(x), bound, std::move(support));
}

StrategyPtr compose(StrategyPtr provider, StrategyPtr consumer) {
  return std::make_shared<ComposeStrategy>(std::move(provider),
                                           std::move(consumer));
}

StrategyPtr induction_combinator(StrategyPtr base, StrategyPtr step, Formula f,
                                 std::string x) {
  return std::make_shared<InductionStrategy>(std::move(base), std::move(step),
                                             std::move(f), std::move(x));
}

StrategyPtr run_script(WitnessScript script,
                       std::vector<std::pair<std::string, StrategyPtr>> slots,
                       Formula sentence) {
  return std::make_shared<ScriptStrategy>(std::move(script), std::move(slots),
                                          std::move(sentence));
}

}  // namespace clarith
