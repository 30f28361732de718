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

#ifndef LIOUVILLE_ANSWER_IO_HPP
#define LIOUVILLE_ANSWER_IO_HPP

#include <string>

#include "json.hpp"
#include "liouville/gamma.hpp"
#include "liouville/verify.hpp"

namespace liouville {

// Canonical text of the antiderivative, e.g. "(x-1)*exp(x) + (1/2)*log(x-1)".
// An unintegrated remainder is shown as Integral(r, x).
std::string print_answer(const Answer& a, const std::string& var = "x");
ExprPtr answer_expr(const Answer& a);

nlohmann::json to_json(const Answer& a);
nlohmann::json to_json(const Report& r);

}  // namespace liouville

#endif  // LIOUVILLE_ANSWER_IO_HPP
