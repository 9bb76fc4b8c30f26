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

// Python bindings. JSON values cross the boundary as Python dicts and lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clarith/error.hpp"
#include "clarith/harness.hpp"
#include "clarith/machine.hpp"
#include "clarith/text.hpp"
#include "clarith/truth.hpp"

namespace py = pybind11;
using namespace clarith;

namespace {

py::object to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Json from_py(const py::object& o) {
  if (py::isinstance<py::str>(o)) return Json(o.cast<std::string>());
  std::string text = py::module_::import("json").attr("dumps")(o).cast<std::string>();
  return Json::parse(text);
}

// A proof given as a dict, or as a path to a proof file.
Proof proof_of(const py::object& o) {
  if (py::isinstance<py::str>(o)) return load_proof_file(o.cast<std::string>());
  return load_proof(from_py(o));
}

SystemId system_of(const std::optional<std::string>& name, const Proof& p) {
  if (name) {
    auto s = system_from_string(*name);
    if (!s) throw FormatError("unknown system '" + *name + "'");
    return *s;
  }
  if (p.system) return *p.system;
  throw FormatError("no system given and the proof names none");
}

// Python handle on an immutable strategy tree.
struct StrategyHandle {
  StrategyPtr ptr;
};

const char* truth_name(const Truth3& t) {
  return t.is_true() ? "true" : t.is_false() ? "false" : "unknown";
}

Player player_of(const std::string& name) {
  if (name == "machine") return Player::Machine;
  if (name == "environment") return Player::Environment;
  throw FormatError("player must be 'machine' or 'environment'");
}

}  // namespace

PYBIND11_MODULE(clarith, m) {
  m.doc() = "Clarithmetic proofs, strategies and plays";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<SyntaxError>(m, "ParseError", base.ptr());
  py::register_exception<LegalityError>(m, "LegalityError", base.ptr());
  py::register_exception<FormatError>(m, "FormatError", base.ptr());
  py::register_exception<ScriptError>(m, "ScriptError", base.ptr());
  py::register_exception<CaptureError>(m, "CaptureError", base.ptr());

  py::class_<Formula>(m, "Formula")
      .def(py::init([](const std::string& text) { return parse_formula(text); }),
           py::arg("text"))
      .def("__str__", [](const Formula& f) { return to_string(f); })
      .def("__repr__", [](const Formula& f) { return "Formula('" + to_string(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__hash__", [](const Formula& f) { return py::hash(py::str(to_string(f))); })
      .def("alpha_equal", [](const Formula& a, const Formula& b) { return alpha_equal(a, b); })
      .def_property_readonly("is_sentence", [](const Formula& f) { return is_sentence(f); })
      .def_property_readonly("is_elementary", [](const Formula& f) { return is_elementary(f); })
      .def_property_readonly("free_vars", [](const Formula& f) { return free_vars_ordered(f); })
      .def("closure", [](const Formula& f) { return choice_closure(f); })
      .def("elementarization", [](const Formula& f) { return elementarization(f); })
      .def("to_json", [](const Formula& f) { return to_py(to_json(f)); })
      .def("legal_moves",
           [](const Formula& f, const std::string& player) {
             py::list out;
             for (const auto& d : developments(f, player_of(player), "w"))
               out.append(to_py(to_json(d.move)));
             return out;
           },
           py::arg("player"));

  m.def("parse", [](const std::string& text) { return parse_formula(text); },
        "Parse a formula", py::arg("text"));
  m.def("eval_elementary",
        [](const std::string& text, Natural bound, bool exact) {
          return truth_name(eval_elementary(parse_formula(text, true), bound, EvalOptions{exact}));
        },
        "Bounded truth of an elementary sentence: 'true', 'false' or 'unknown'",
        py::arg("sentence"), py::arg("bound") = 32, py::arg("exact_shapes") = true);
  m.def("rm_run",
        [](Natural code, Natural input, Natural max_steps) -> std::optional<std::pair<Natural, Natural>> {
          auto h = rm_run(machine_by_code(code), input, max_steps);
          if (!h) return std::nullopt;
          return std::pair{h->step, h->output};
        },
        "Run corpus machine `code`; (step, output) or None", py::arg("code"),
        py::arg("input"), py::arg("max_steps"));

  py::class_<StrategyHandle>(m, "Strategy")
      .def_property_readonly("combinator",
                             [](const StrategyHandle& s) { return s.ptr->combinator(); })
      .def_property_readonly("sentence",
                             [](const StrategyHandle& s) { return s.ptr->sentence(); })
      .def("to_json", [](const StrategyHandle& s) { return to_py(strategy_to_json(s.ptr)); })
      .def_static("from_json",
                  [](const py::object& o) {
                    return StrategyHandle{strategy_from_json(from_py(o))};
                  })
      .def("node_count", [](const StrategyHandle& s) { return strategy_node_count(s.ptr); });

  m.def("builtin", [](const std::string& name) {
          auto b = builtin_strategy(name);
          if (!b) throw FormatError("no builtin strategy '" + name + "'");
          return StrategyHandle{b->first};
        },
        "Builtin strategy: 'ax8' or 'halting'", py::arg("name"));

  m.def("check",
        [](const py::object& proof, std::optional<std::string> system) {
          Proof p = proof_of(proof);
          return to_py(to_json(check_proof(p, system_of(system, p))));
        },
        "Check a proof (dict or file path); returns the report",
        py::arg("proof"), py::arg("system") = py::none());
  m.def("extract",
        [](const py::object& proof, std::optional<std::string> system) {
          Proof p = proof_of(proof);
          return StrategyHandle{extract(p, system_of(system, p))};
        },
        "Extract a strategy from an accepted proof", py::arg("proof"),
        py::arg("system") = py::none());

  m.def("verify",
        [](const StrategyHandle& h, std::size_t depth, Natural range, Natural bound,
           std::uint64_t max_steps) {
          const StrategyPtr& s = h.ptr;
          VerifyOptions opt;
          opt.depth = depth;
          opt.range = range;
          opt.bound = bound;
          opt.limits.max_steps = max_steps;
          VerifySummary v;
          {
            py::gil_scoped_release release;
            v = verify(s, s->sentence(), opt);
          }
          return to_py(to_json(v));
        },
        "Play against every bounded environment", py::arg("strategy"),
        py::arg("depth") = 3, py::arg("range") = 8, py::arg("bound") = 32,
        py::arg("max_steps") = 100000);

  m.def("play",
        [](const StrategyHandle& h, const std::vector<std::string>& moves,
           std::optional<std::uint64_t> seed, Natural bound, std::uint64_t max_steps) {
          const StrategyPtr& s = h.ptr;
          Limits limits;
          limits.max_steps = max_steps;
          std::unique_ptr<EnvironmentDriver> env;
          if (seed) {
            env = std::make_unique<RandomDriver>(*seed, 3, 8);
          } else {
            Run run;
            for (const auto& text : moves) run.push_back(parse_env_move(text));
            env = std::make_unique<ScriptedDriver>(run);
          }
          PlayResult r = simulate(s, s->sentence(), *env, bound, limits);
          py::list out;
          for (const auto& line : transcript(s->sentence(), bound, r)) out.append(to_py(line));
          return out;
        },
        "Play one game; environment moves as '@path left|right|N', or random with seed",
        py::arg("strategy"), py::arg("moves") = std::vector<std::string>{},
        py::arg("seed") = py::none(), py::arg("bound") = 32, py::arg("max_steps") = 100000);

  py::class_<PlayServer>(m, "PlayServer")
      .def(py::init([](std::uint64_t max_steps) {
             Limits l;
             l.max_steps = max_steps;
             return std::make_unique<PlayServer>(l);
           }),
           py::arg("max_steps") = 100000)
      .def("handle",
           [](PlayServer& s, const std::string& method, const std::string& path,
              const py::object& body) {
             std::string text = body.is_none() ? "" : from_py(body).dump();
             if (py::isinstance<py::str>(body)) text = body.cast<std::string>();
             auto r = s.handle(method, path, text);
             return py::make_tuple(r.status, to_py(r.body));
           },
           "Route one protocol request; returns (status, body)", py::arg("method"),
           py::arg("path"), py::arg("body") = py::none());
}
