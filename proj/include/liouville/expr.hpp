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

#ifndef LIOUVILLE_EXPR_HPP
#define LIOUVILLE_EXPR_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "liouville/bigrat.hpp"
#include "liouville/field.hpp"

namespace liouville {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Surface syntax tree. Atom and Call only come out of the printer side:
// Atom is a preformatted generator name, Call is Ei/Gamma/sqrt.
struct Expr {
  enum class Kind { Num, Var, Sym, Add, Neg, Mul, Div, Pow, Exp, Log, Sqrt, Atom, Call };
  Kind kind = Kind::Num;
  BigRat value;
  std::string name;
  long exponent = 0;
  std::vector<ExprPtr> args;
  std::size_t pos = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t pos() const { return pos_; }

 private:
  std::size_t pos_;
};

struct ParseOptions {
  std::string var = "x";
  std::vector<std::string> constants;  // names declared as irrational constants
};

ExprPtr parse(const std::string& text, const ParseOptions& opts = {});

// Constructors used by the printer and tests.
namespace ex {
ExprPtr num(const BigRat& q);
ExprPtr var(const std::string& name);
ExprPtr sym(const std::string& name);
ExprPtr atom(const std::string& text);
ExprPtr add(std::vector<ExprPtr> terms);
ExprPtr neg(ExprPtr a);
ExprPtr mul(std::vector<ExprPtr> factors);
ExprPtr div(ExprPtr a, ExprPtr b);
ExprPtr pow(ExprPtr a, long n);
ExprPtr exp(ExprPtr a);
ExprPtr log(ExprPtr a);
ExprPtr call(const std::string& name, std::vector<ExprPtr> args);
}  // namespace ex

// Canonical text. Top-level sums are spaced ("a + b"), nested ones are not.
std::string to_text(const ExprPtr& e);
// Structural form such as Div(Exp(Var x), Var x), used by tests.
std::string debug_string(const ExprPtr& e);
// Printed form of a tower element.
ExprPtr to_expr(const Elem& e);
std::string to_text(const Elem& e);

}  // namespace liouville

#endif  // LIOUVILLE_EXPR_HPP
