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

#ifndef LIOUVILLE_STRUCTURE_HPP
#define LIOUVILLE_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "liouville/tower.hpp"

namespace liouville {

// One derivative of a logarithmic element: w = l' where l is logarithmic
// and u = exp(l) is the matching exponential element (u'/u = w).
struct WItem {
  Elem w;
  Elem log_elem;  // eta for an Exp generator, lambda for a Log generator
  Elem exp_elem;  // theta for an Exp generator, u for a Log generator
  LevelPtr gen;   // null for hint items
  std::string label;
};

struct WBasis {
  std::vector<WItem> items;
};

// Items from the tower's generators followed by f'/f for each hint factor
// (a polynomial at the variable level) not already present.
WBasis w_basis(const Tower& t, const std::vector<UniPoly>& hint_factors = {});

struct Witness {
  std::vector<BigRat> r;  // one coefficient per basis item
  WBasis basis;
};

// g' as a Q-combination of the generator items, or nullopt (transcendental).
std::optional<Witness> exp_dependence(const Elem& g, const Tower& t);
// f'/f as a Q-combination of the generator items, or nullopt.
std::optional<Witness> log_dependence(const Elem& f, const Tower& t);

}  // namespace liouville

#endif  // LIOUVILLE_STRUCTURE_HPP
