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

#ifndef LIOUVILLE_NUMERIC_HPP
#define LIOUVILLE_NUMERIC_HPP

#include <complex>
#include <functional>
#include <map>
#include <string>

#include "liouville/field.hpp"

namespace liouville::numeric {

using cplx = std::complex<long double>;

// Values for declared constant symbols.
using SymbolValues = std::map<std::string, long double>;

// Evaluates tower elements at a point, principal branches throughout.
// Throws std::domain_error at poles.
class Evaluator {
 public:
  Evaluator(cplx x, SymbolValues symbols) : x_(x), symbols_(std::move(symbols)) {}
  cplx operator()(const Elem& e);

 private:
  cplx gen_value(const LevelPtr& l);
  cplx poly_value(const UniPoly& p, cplx t);

  cplx x_;
  SymbolValues symbols_;
  std::map<const Level*, cplx> cache_;
};

// Exponential integral, with log|z| on the real axis.
cplx ei(cplx z);
// Upper incomplete gamma for real a.
cplx upper_gamma(long double a, cplx z);

// Ridders' extrapolated central difference of a real-variable function.
cplx derivative(const std::function<cplx(long double)>& f, long double x, long double h = 0.1L,
                long double* err = nullptr);

}  // namespace liouville::numeric

#endif  // LIOUVILLE_NUMERIC_HPP
