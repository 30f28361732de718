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

#ifndef LIOUVILLE_DECOMPOSE_HPP
#define LIOUVILLE_DECOMPOSE_HPP

#include <map>
#include <vector>

#include "liouville/field.hpp"

namespace liouville {

// f = sum_j laurent[j] * t^j + proper, with proper = A/D, deg A < deg D and
// gcd(D, t) = 1. Coefficients lie strictly below `level`.
struct LaurentSplit {
  std::map<int, Elem> laurent;
  Elem proper;
};

LaurentSplit decomp_laurent(const Elem& f, const LevelPtr& level);

struct LogDerivTerm {
  Elem c;  // constant
  Elem v;  // nonzero
};

// sum c_i v_i'/v_i = a * eta' + sum c_j vbar_j'/vbar_j + proper, where the
// vbar_j lie below the top generator.
struct LogDerivReduction {
  Elem a;
  std::vector<LogDerivTerm> terms;
  Elem proper;
};

// `level` must be an Exp generator.
LogDerivReduction logderiv_reduce_exp(const std::vector<LogDerivTerm>& terms, const LevelPtr& level);
// `level` must be a Log generator; the result has a = 0.
LogDerivReduction logderiv_reduce_prim(const std::vector<LogDerivTerm>& terms, const LevelPtr& level);

}  // namespace liouville

#endif  // LIOUVILLE_DECOMPOSE_HPP
