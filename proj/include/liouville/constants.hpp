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

#ifndef LIOUVILLE_CONSTANTS_HPP
#define LIOUVILLE_CONSTANTS_HPP

#include <optional>
#include <vector>

#include "liouville/tower.hpp"

namespace liouville {

// c = s^2 with s in the same field, when such s exists and is found by
// squarefree decomposition of numerator and denominator.
std::optional<Elem> exact_sqrt(const Elem& c);

// Distinct rational roots of a polynomial with rational coefficients.
std::vector<BigRat> rational_roots(const UniPoly& p);

// Distinct roots of p (constant coefficients) in the constant field of `t`,
// extended by at most one square root. Throws NeedConstant when sqrt(r) must
// be added, Unsupported when the roots need more than that.
std::vector<Elem> constant_roots(const UniPoly& p, const Tower& t);

// p with all coefficients rational.
bool has_rational_coeffs(const UniPoly& p);

// Splits a polynomial with rational coefficients into its rational linear
// factors and the remaining cofactor (all monic).
std::vector<UniPoly> split_rational_linear(const UniPoly& p);

}  // namespace liouville

#endif  // LIOUVILLE_CONSTANTS_HPP
