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

#ifndef LIOUVILLE_ELEMENTARY_HPP
#define LIOUVILLE_ELEMENTARY_HPP

#include <optional>
#include <string>
#include <vector>

#include "liouville/tower.hpp"

namespace liouville {

// p = integrated' + remainder, remainder with squarefree denominator.
struct HermiteResult {
  Elem integrated;
  Elem remainder;
};

// p proper in the generator of `level`, denominator normal (for an
// exponential level: coprime to the generator).
HermiteResult hermite_reduce(const Elem& p, const LevelPtr& level);

struct LogTerm {
  Elem c;
  Elem arg;
};

struct LogPart {
  std::vector<LogTerm> terms;
};

// Rothstein-Trager. h proper in the generator of `level` with squarefree
// denominator. Throws Unsupported when the residues are not constants of
// the supported forms, NeedConstant when a square root must be adjoined.
LogPart residue_logpart(const Elem& h, const LevelPtr& level, const Tower& t);

struct RdeOutcome {
  std::optional<Elem> y;
  std::string diagnostic;  // why no solution exists, when y is empty
};

// y' + b*y = a with y in K = C(x) or C(x)(log u).
RdeOutcome rde_solve(const Elem& b, const Elem& a, const Tower& t);

struct ParamSolution {
  Elem y;
  std::vector<Elem> c;
};

// y' + b*y + sum c_k*hs[k] = a with y in K and constants c_k. The h_k must
// lie in C(x).
std::optional<ParamSolution> param_rde(const Elem& b, const Elem& a, const std::vector<Elem>& hs, const Tower& t,
                                       std::string* why = nullptr);

// An antiderivative inside K: elementary + sum c*log(arg). `residual` is the
// part of the integrand that could not be handled (zero when complete).
struct BaseIntegral {
  Elem elementary;
  std::vector<LogTerm> logs;
  Elem residual;
  std::string note;
};

BaseIntegral integrate_rational(const Elem& f, const Tower& t);
// f in C(x) or C(x)(lambda) for a Log generator lambda directly above x.
BaseIntegral integrate_base(const Elem& f, const Tower& t);

}  // namespace liouville

#endif  // LIOUVILLE_ELEMENTARY_HPP
