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

#include "liouville/structure.hpp"

#include <stdexcept>

#include "liouville/expr.hpp"
#include "liouville/linalg.hpp"
#include "liouville/poly.hpp"

namespace liouville {

WBasis w_basis(const Tower& t, const std::vector<UniPoly>& hint_factors) {
  WBasis b;
  for (const auto& g : t.generators()) {
    WItem it;
    it.gen = g;
    if (g->kind == LevelKind::Exp) {
      it.w = g->arg_rate;
      it.log_elem = g->arg;
      it.exp_elem = Elem::gen(g);
      it.label = g->name;
    } else {
      it.w = g->arg_rate;
      it.log_elem = Elem::gen(g);
      it.exp_elem = g->arg;
      it.label = g->name;
    }
    b.items.push_back(std::move(it));
  }
  const LevelPtr v = t.var_level();
  for (const auto& f : hint_factors) {
    if (f.degree() <= 0) continue;
    const Elem fe = Elem::make(v, poly::monic(f));
    const Elem w = derive(fe) / fe;
    bool seen = false;
    for (const auto& it : b.items) seen = seen || it.w == w;
    if (seen) continue;
    WItem it;
    it.w = w;
    it.exp_elem = fe;
    it.label = to_text(fe);
    b.items.push_back(std::move(it));
  }
  return b;
}

namespace {

std::optional<Witness> membership(const Elem& target, const Tower& t) {
  Witness wit;
  wit.basis = w_basis(t);
  std::vector<Elem> ws;
  for (const auto& it : wit.basis.items) ws.push_back(it.w);
  auto sol = linalg::solve_combination(ws, target, nullptr);
  if (!sol) return std::nullopt;
  for (const auto& c : *sol) wit.r.push_back(c.rational());
  return wit;
}

}  // namespace

std::optional<Witness> exp_dependence(const Elem& g, const Tower& t) { return membership(derive(g), t); }

std::optional<Witness> log_dependence(const Elem& f, const Tower& t) {
  if (f.is_zero()) throw std::domain_error("log_dependence: log of zero");
  return membership(derive(f) / f, t);
}

}  // namespace liouville
