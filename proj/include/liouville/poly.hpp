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

#ifndef LIOUVILLE_POLY_HPP
#define LIOUVILLE_POLY_HPP

// Classical univariate algorithms over the coefficient field of a level.
// Nothing here knows which generator the polynomials are in.

#include <utility>
#include <vector>

#include "liouville/field.hpp"

namespace liouville::poly {

struct DivMod {
  UniPoly quot;
  UniPoly rem;
};

DivMod divmod(const UniPoly& a, const UniPoly& b);
UniPoly rem(const UniPoly& a, const UniPoly& b);
UniPoly quo(const UniPoly& a, const UniPoly& b);
// Throws std::logic_error when b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& b, const UniPoly& a);

UniPoly monic(const UniPoly& p);
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly lcm(const UniPoly& a, const UniPoly& b);

struct ExtGcd {
  UniPoly s;
  UniPoly t;
  UniPoly g;  // monic, s*a + t*b = g
};
ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b);

// For coprime a, b: (s, t) with s*a + t*b = c and deg s < deg b.
std::pair<UniPoly, UniPoly> diophantine(const UniPoly& a, const UniPoly& b, const UniPoly& c);
// Inverse of a modulo m (a, m coprime).
UniPoly inverse_mod(const UniPoly& a, const UniPoly& m);

UniPoly diff(const UniPoly& p);
UniPoly pow(const UniPoly& p, int e);
Elem eval(const UniPoly& p, const Elem& at);
// p(q(t)) for polynomial q.
UniPoly compose(const UniPoly& p, const UniPoly& q);

// Multiplicity of `factor` (non-constant) in p.
int order(UniPoly p, const UniPoly& factor);

// Yun's algorithm. Returns (monic factor, multiplicity) pairs with
// lc(p) * prod f_i^m_i == p, factors squarefree and pairwise coprime.
// Throws std::invalid_argument on the zero polynomial.
std::vector<std::pair<UniPoly, int>> squarefree(const UniPoly& p);
UniPoly squarefree_part(const UniPoly& p);

// Standard resultant res(a, b) = lc(a)^deg(b) * prod b(roots of a).
Elem resultant(const UniPoly& a, const UniPoly& b);

struct PartialFraction {
  UniPoly numerator;
  UniPoly factor;
  int power = 1;
};
// num/den proper with den = unit * prod factor^mult over the given coprime
// factors. Throws std::invalid_argument for improper input or a mismatched
// factorization.
std::vector<PartialFraction> partial_fractions(const UniPoly& num, const UniPoly& den,
                                               const std::vector<std::pair<UniPoly, int>>& factors);

// Squarefree, pairwise coprime monic polynomials such that every input is a
// unit times a product of their powers. Constants are ignored.
std::vector<UniPoly> coprime_base(const std::vector<UniPoly>& polys);

// Newton interpolation: the unique polynomial of degree < n through the points.
UniPoly interpolate(const std::vector<Elem>& xs, const std::vector<Elem>& ys);

}  // namespace liouville::poly

#endif  // LIOUVILLE_POLY_HPP
