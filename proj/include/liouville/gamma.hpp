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

#ifndef LIOUVILLE_GAMMA_HPP
#define LIOUVILLE_GAMMA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liouville/elementary.hpp"
#include "liouville/expr.hpp"
#include "liouville/lower.hpp"

namespace liouville {

enum class SpecialKind { Ei, GammaRational, GammaIrrational };

// c*Ei(arg), or c*Gamma(alpha, arg).
//
// For Ei, exp_part is u with u'/u = arg'. For the gamma kinds exp_part is
// the kernel arg^(alpha-1)*exp(-arg) written in the tower, so that the
// derivative is -c*arg'*exp_part without leaving the field.
struct SpecialTerm {
  SpecialKind kind = SpecialKind::Ei;
  Elem c;
  Elem arg;
  Elem exp_part;
  Elem alpha;             // gamma kinds
  long k = 1;             // GammaRational: alpha - 1 = m/k
  long m = 0;
  bool in_range = false;  // GammaRational with -k < m < 0
  // GammaRational from a rational argument: w with w^k = arg^m, the
  // principal branch at positive x. exp_part = w*exp(-arg).
  std::optional<Elem> radical;
  // Logarithmic form: lambda with lambda' = arg'/arg.
  std::optional<Elem> log_arg;
};

enum class Status { Integrated, NoGammaFormFound, Unsupported };
const char* status_name(Status s);  // "integrated", "no_gamma_form_found", "unsupported"

struct Answer {
  Status status = Status::Integrated;
  Elem elementary;
  std::vector<LogTerm> logs;
  std::vector<SpecialTerm> specials;
  Elem residual;       // the part of the integrand left unintegrated
  std::string reason;  // machine-readable, set with Unsupported
  std::vector<std::string> diagnostics;

  static Answer unsupported(const std::string& reason, const std::string& detail, const Elem& residual = Elem(0));
  // Sum of two partial answers; the worse status wins.
  void add(const Answer& other);
};

// f = f1 + sum f2[j]*theta^j, f1 proper with denominator coprime to theta.
// Without an exponential theta the split is taken in x: f1 is the proper
// part and f2[0] the polynomial part.
struct F1F2 {
  Elem f1;
  std::map<int, Elem> f2;
};
F1F2 split_f1_f2(const Elem& f, const LevelPtr& theta);

// Nonzero coefficients a_j of sum a_j*theta^j, highest power first.
std::vector<std::pair<int, Elem>> split_powers(const std::map<int, Elem>& f2);
std::vector<std::pair<int, Elem>> split_powers(const Elem& f2, const LevelPtr& theta);

// Integral of a*theta^j (j != 0) for an exponential generator theta.
Answer integrate_exp_term(const Elem& a, int j, const LevelPtr& theta, const Tower& t);

struct Match {
  std::optional<SpecialTerm> term;
  std::string failure;  // "no_match" or "constant_extraction"
  std::string detail;
};

// r*e^g as an Ei term; expg is e^g as a tower element.
Match match_ei(const Elem& r, const Elem& g, const Elem& expg, const Tower& t);
// r*e^g as an incomplete gamma term.
Match match_gamma(const Elem& r, const Elem& g, const Elem& expg, const Tower& t);

// Never throws for integrands of the tower; constants missing from the
// tower are reported as Unsupported.
Answer integrate(const Elem& f, const Tower& t);
// Like integrate, but lets NeedConstant escape so that a restart driver
// can extend the constant field.
Answer integrate_strict(const Elem& f, const Tower& t);

struct Integration {
  Tower tower;
  Elem integrand;
  Answer answer;
};

// Parses nothing; lowers e (restarting as needed) and integrates. Errors
// from lowering are turned into an Unsupported answer.
Integration integrate_expression(const ExprPtr& e, const LowerOptions& opts = {});

// Derivative of a single special term.
Elem special_derivative(const SpecialTerm& s);

}  // namespace liouville

#endif  // LIOUVILLE_GAMMA_HPP
