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

#include "liouville/answer_io.hpp"

namespace liouville {

namespace {

ExprPtr scaled(const Elem& c, ExprPtr e) {
  if (c.is_one()) return e;
  if (c == Elem(-1)) return ex::neg(std::move(e));
  if (c.is_rational() && c.rational().sign() < 0) return ex::neg(ex::mul({to_expr(-c), std::move(e)}));
  return ex::mul({to_expr(c), std::move(e)});
}

std::string const_text(const Elem& c) { return to_text(c); }

}  // namespace

ExprPtr answer_expr(const Answer& a) {
  std::vector<ExprPtr> terms;
  if (!a.elementary.is_zero()) terms.push_back(to_expr(a.elementary));
  for (const auto& l : a.logs) terms.push_back(scaled(l.c, ex::log(to_expr(l.arg))));
  for (const auto& s : a.specials) {
    if (s.kind == SpecialKind::Ei) {
      terms.push_back(scaled(s.c, ex::call("Ei", {to_expr(s.arg)})));
    } else {
      terms.push_back(scaled(s.c, ex::call("Gamma", {to_expr(s.alpha), to_expr(s.arg)})));
    }
  }
  if (terms.empty()) return ex::num(BigRat(0));
  if (terms.size() == 1) return terms.front();
  return ex::add(std::move(terms));
}

std::string print_answer(const Answer& a, const std::string& var) {
  std::string out;
  const bool has_part = !a.elementary.is_zero() || !a.logs.empty() || !a.specials.empty();
  if (has_part || a.residual.is_zero()) out = to_text(answer_expr(a));
  if (!a.residual.is_zero()) {
    if (!out.empty()) out += " + ";
    out += "Integral(" + to_text(a.residual) + ", " + var + ")";
  }
  return out;
}

nlohmann::json to_json(const Answer& a) {
  using nlohmann::json;
  json j;
  j["status"] = status_name(a.status);
  j["elementary"] = to_text(a.elementary);
  j["logs"] = json::array();
  j["ei"] = json::array();
  j["gamma_rational"] = json::array();
  j["gamma_irrational"] = json::array();
  for (const auto& l : a.logs) j["logs"].push_back({{"c", const_text(l.c)}, {"arg", to_text(l.arg)}});
  for (const auto& s : a.specials) {
    switch (s.kind) {
      case SpecialKind::Ei:
        j["ei"].push_back({{"c", const_text(s.c)}, {"arg", to_text(s.arg)}});
        break;
      case SpecialKind::GammaRational:
        j["gamma_rational"].push_back({{"c", const_text(s.c)},
                                       {"k", s.k},
                                       {"m", s.m},
                                       {"alpha", const_text(s.alpha)},
                                       {"in_range", s.in_range},
                                       {"arg", to_text(s.arg)}});
        break;
      case SpecialKind::GammaIrrational:
        j["gamma_irrational"].push_back(
            {{"c", const_text(s.c)}, {"alpha", const_text(s.alpha)}, {"arg", to_text(s.arg)}});
        break;
    }
  }
  if (!a.residual.is_zero()) j["residual"] = to_text(a.residual);
  if (!a.reason.empty()) j["reason"] = a.reason;
  j["diagnostics"] = a.diagnostics;
  return j;
}

nlohmann::json to_json(const Report& r) {
  using nlohmann::json;
  json j;
  j["symbolic_ok"] = r.symbolic_ok;
  j["residual"] = to_text(r.residual);
  j["side_conditions"] = r.side_failures;
  j["numeric_samples"] = json::array();
  for (const auto& s : r.numeric_samples) {
    j["numeric_samples"].push_back({{"point", s.point.str()}, {"abs_error", s.abs_error}, {"rel_error", s.rel_error}});
  }
  j["max_abs_error"] = r.max_abs_error;
  j["max_rel_error"] = r.max_rel_error;
  j["numeric_ok"] = r.numeric_ok;
  json syms = json::object();
  for (const auto& [k, v] : r.symbols) syms[k] = static_cast<double>(v);
  j["symbol_values"] = syms;
  j["notes"] = r.notes;
  j["ok"] = r.ok();
  return j;
}

}  // namespace liouville
