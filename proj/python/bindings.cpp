/*
   Copyright 2026 The liouville authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Python bindings. Results cross the boundary as JSON text; the package
// __init__ turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liouville/answer_io.hpp"
#include "liouville/structure.hpp"

namespace py = pybind11;
using namespace liouville;
using nlohmann::json;

namespace {

LowerOptions options(const std::string& var, const std::vector<std::string>& constants,
                     const std::vector<std::string>& tower) {
  LowerOptions lo;
  lo.var = var;
  lo.constants = constants;
  for (const auto& t : tower) lo.tower.push_back(parse(t, ParseOptions{var, constants}));
  return lo;
}

std::vector<std::string> tower_names(const Tower& t) {
  std::vector<std::string> out;
  if (!t.top()) return out;
  for (const auto& g : t.generators()) out.push_back(g->name);
  return out;
}

std::string integrate_json(const std::string& text, const std::string& var, const std::vector<std::string>& constants,
                           const std::vector<std::string>& tower, bool check, std::uint64_t seed) {
  const LowerOptions lo = options(var, constants, tower);
  const Integration r = integrate_expression(parse(text, ParseOptions{var, constants}), lo);
  json j = to_json(r.answer);
  j["integrand"] = r.tower.top() ? to_text(r.integrand) : text;
  j["tower"] = tower_names(r.tower);
  j["text"] = r.answer.status == Status::Unsupported ? "" : print_answer(r.answer, var);
  if (check && r.tower.top() && r.answer.status != Status::Unsupported) {
    j["diagnostics"].push_back({{"report", to_json(verify(r.integrand, r.answer, r.tower, seed))}});
  }
  return j.dump();
}

std::string verify_json(const std::string& text, const std::string& var, const std::vector<std::string>& constants,
                        std::uint64_t seed) {
  const LowerOptions lo = options(var, constants, {});
  const Integration r = integrate_expression(parse(text, ParseOptions{var, constants}), lo);
  if (r.answer.status == Status::Unsupported) throw Unsupported(r.answer.reason, "integrand is not supported");
  return to_json(verify(r.integrand, r.answer, r.tower, seed)).dump();
}

std::string structure_json(const std::string& text, const std::string& var, const std::vector<std::string>& constants,
                           const std::vector<std::string>& tower) {
  const LowerOptions lo = options(var, constants, tower);
  const ExprPtr e = parse(text, ParseOptions{var, constants});
  if (e->kind != Expr::Kind::Exp && e->kind != Expr::Kind::Log) {
    throw py::value_error("expected exp(...) or log(...)");
  }
  return with_restarts(lo, [&](Lowering& lw) {
    const Elem arg = lw.lower(e->args.front());
    const Tower& t = lw.tower();
    json j{{"expression", text}, {"tower", tower_names(t)}};
    std::optional<Witness> w;
    if (e->kind == Expr::Kind::Exp) {
      w = exp_dependence(arg, t);
    } else {
      if (arg.is_zero()) throw Unsupported("log_of_zero", "log(0)");
      w = log_dependence(arg, t);
    }
    j["status"] = w ? "dependent" : "transcendental";
    if (w) {
      j["value"] = to_text(e->kind == Expr::Kind::Exp ? lw.exp_of(arg) : lw.log_of(arg));
      j["witness"] = json::array();
      for (std::size_t i = 0; i < w->r.size(); ++i) {
        if (!w->r[i].is_zero()) j["witness"].push_back({{"item", w->basis.items[i].label}, {"r", w->r[i].str()}});
      }
    }
    return j.dump();
  });
}

std::string lower_json(const std::string& text, const std::string& var, const std::vector<std::string>& constants) {
  const Lowered l = lower(parse(text, ParseOptions{var, constants}), options(var, constants, {}));
  return json{{"value", to_text(l.value)}, {"tower", tower_names(l.tower)}}.dump();
}

}  // namespace

PYBIND11_MODULE(_liouville, m) {
  m.doc() = "Symbolic integration with Ei and incomplete gamma terms";
  static py::exception<Unsupported> unsupported(m, "UnsupportedError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Unsupported& e) {
      unsupported((e.reason() + ": " + e.what()).c_str());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });
  const auto var = py::arg("var") = "x";
  const auto constants = py::arg("constants") = std::vector<std::string>{};
  m.def("parse", [](const std::string& text, const std::string& v, const std::vector<std::string>& c) {
    return to_text(parse(text, ParseOptions{v, c}));
  }, py::arg("text"), var, constants);
  m.def("lower_json", &lower_json, py::arg("text"), var, constants);
  m.def("integrate_json", &integrate_json, py::arg("text"), var, constants,
        py::arg("tower") = std::vector<std::string>{}, py::arg("verify") = false, py::arg("seed") = 1);
  m.def("verify_json", &verify_json, py::arg("text"), var, constants, py::arg("seed") = 1);
  m.def("structure_json", &structure_json, py::arg("text"), var, constants,
        py::arg("tower") = std::vector<std::string>{});
}
