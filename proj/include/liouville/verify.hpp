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

#ifndef LIOUVILLE_VERIFY_HPP
#define LIOUVILLE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "liouville/gamma.hpp"
#include "liouville/numeric.hpp"

namespace liouville {

// Exact derivative of the antiderivative described by `a` (its residual is
// not included). Throws std::invalid_argument for malformed special terms.
Elem differentiate_answer(const Answer& a);

// Side conditions of the special terms; one message per violation.
std::vector<std::string> check_specials(const Answer& a);

struct Sample {
  BigRat point;
  double abs_error = 0;
  double rel_error = 0;  // |f - A'| / max(1, |f|)
};

struct Report {
  bool symbolic_ok = false;
  Elem residual;  // d(answer) + unintegrated part - f
  std::vector<std::string> side_failures;
  std::vector<Sample> numeric_samples;
  double max_abs_error = 0;
  double max_rel_error = 0;
  bool numeric_ok = false;
  std::vector<std::string> notes;
  numeric::SymbolValues symbols;

  bool ok() const { return symbolic_ok && side_failures.empty() && numeric_ok; }
};

// Value of the antiderivative at a real point.
numeric::cplx eval_answer(const Answer& a, long double x, const numeric::SymbolValues& symbols);

// Rational points in [3/10, 5/2] and symbol values in (0,1) minus {1/2}.
std::vector<BigRat> probe_points(std::uint64_t seed, int n);
numeric::SymbolValues probe_symbols(const Tower& t, std::uint64_t seed);

// Compares f - residual with the numeric derivative of the answer.
// Points too close to a singularity are skipped with a note.
Report numeric_probe(const Elem& f, const Answer& a, const std::vector<BigRat>& points,
                     const numeric::SymbolValues& symbols, int wanted = 5);

// Exact check, side conditions and a numeric probe at >= 5 points.
Report verify(const Elem& f, const Answer& a, const Tower& t, std::uint64_t seed = 1);

constexpr double kProbeTolerance = 1e-9;

}  // namespace liouville

#endif  // LIOUVILLE_VERIFY_HPP
