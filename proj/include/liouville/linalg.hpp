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

#ifndef LIOUVILLE_LINALG_HPP
#define LIOUVILLE_LINALG_HPP

#include <optional>
#include <vector>

#include "liouville/field.hpp"

namespace liouville::linalg {

using Row = std::vector<Elem>;
using Matrix = std::vector<Row>;

// Linear conditions on unknown constants: for c in the field at or below
// `stop` (null means Q), sum_k c_k * es[k] = 0 iff every returned row
// satisfies row . c = 0. Obtained by clearing denominators level by level
// and comparing coefficients.
Matrix coordinates(const std::vector<Elem>& es, const LevelPtr& stop);

// One solution of A c = b with free unknowns set to zero.
std::optional<std::vector<Elem>> solve(Matrix a, std::vector<Elem> b);

// Constants c with sum_k c_k * basis[k] = target.
std::optional<std::vector<Elem>> solve_combination(const std::vector<Elem>& basis, const Elem& target,
                                                   const LevelPtr& stop);

}  // namespace liouville::linalg

#endif  // LIOUVILLE_LINALG_HPP
