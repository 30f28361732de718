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

#include "liouville/expr.hpp"

#include <algorithm>
#include <cctype>

namespace liouville {

namespace ex {

namespace {
ExprPtr node(Expr::Kind k, std::vector<ExprPtr> args = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->args = std::move(args);
  return e;
}
}  // namespace

ExprPtr num(const BigRat& q) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Num;
  e->value = q;
  return e;
}

ExprPtr var(const std::string& name) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Var;
  e->name = name;
  return e;
}

ExprPtr sym(const std::string& name) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Sym;
  e->name = name;
  return e;
}

ExprPtr atom(const std::string& text) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Atom;
  e->name = text;
  return e;
}

ExprPtr add(std::vector<ExprPtr> terms) {
  std::vector<ExprPtr> flat;
  for (auto& t : terms) {
    if (t->kind == Expr::Kind::Add) {
      flat.insert(flat.end(), t->args.begin(), t->args.end());
    } else {
      flat.push_back(std::move(t));
    }
  }
  if (flat.empty()) return num(0);
  if (flat.size() == 1) return flat.front();
  return node(Expr::Kind::Add, std::move(flat));
}

ExprPtr neg(ExprPtr a) { return node(Expr::Kind::Neg, {std::move(a)}); }

ExprPtr mul(std::vector<ExprPtr> factors) {
  std::vector<ExprPtr> flat;
  for (auto& f : factors) {
    if (f->kind == Expr::Kind::Mul) {
      flat.insert(flat.end(), f->args.begin(), f->args.end());
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) return num(1);
  if (flat.size() == 1) return flat.front();
  return node(Expr::Kind::Mul, std::move(flat));
}

ExprPtr div(ExprPtr a, ExprPtr b) { return node(Expr::Kind::Div, {std::move(a), std::move(b)}); }

ExprPtr pow(ExprPtr a, long n) {
  if (n == 1) return a;
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Pow;
  e->exponent = n;
  e->args = {std::move(a)};
  return e;
}

ExprPtr exp(ExprPtr a) { return node(Expr::Kind::Exp, {std::move(a)}); }
ExprPtr log(ExprPtr a) { return node(Expr::Kind::Log, {std::move(a)}); }

ExprPtr call(const std::string& name, std::vector<ExprPtr> args) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Call;
  e->name = name;
  e->args = std::move(args);
  return e;
}

}  // namespace ex

// ------------------------------------------------------------------ parser

namespace {

class Parser {
 public:
  Parser(const std::string& text, const ParseOptions& opts) : s_(text), opts_(opts) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip();
    if (i_ < s_.size()) fail(std::string("unexpected '") + s_[i_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  ExprPtr expr() {
    std::vector<ExprPtr> terms{term()};
    while (true) {
      if (accept('+')) {
        terms.push_back(term());
      } else if (accept('-')) {
        terms.push_back(ex::neg(term()));
      } else {
        break;
      }
    }
    if (terms.size() == 1) return terms.front();
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Add;
    e->args = std::move(terms);
    return e;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    std::shared_ptr<Expr> chain;  // open Mul being extended
    while (true) {
      if (accept('*')) {
        ExprPtr rhs = unary();
        if (chain) {
          chain->args.push_back(rhs);
        } else {
          chain = std::make_shared<Expr>();
          chain->kind = Expr::Kind::Mul;
          chain->args = {lhs, rhs};
          lhs = chain;
        }
      } else if (accept('/')) {
        lhs = ex::div(lhs, unary());
        chain.reset();
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    if (accept('-')) return ex::neg(unary());
    if (accept('+')) return unary();
    return factor();
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    if (!accept('^')) return base;
    const std::size_t at = i_;
    const bool paren = accept('(');
    bool negative = accept('-');
    if (!negative) accept('+');
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    const std::string digits = s_.substr(start, i_ - start);
    if (digits.empty() || (i_ < s_.size() && s_[i_] == '.') || (paren && !accept(')'))) {
      i_ = at;
      fail("exponents must be integer literals; write u^q as exp(q*log(u))");
    }
    const mpz_class n(digits);
    if (!n.fits_slong_p()) fail("exponent too large");
    return ex::pow(base, negative ? -n.get_si() : n.get_si());
  }

  ExprPtr atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const std::size_t at = i_;
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.')) ++i_;
      try {
        auto e = std::const_pointer_cast<Expr>(ex::num(BigRat::parse(s_.substr(at, i_ - at))));
        e->pos = at;
        return e;
      } catch (const std::exception&) {
        i_ = at;
        fail("malformed number");
      }
    }
    if (accept('(')) {
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      const std::string id = s_.substr(at, i_ - at);
      skip();
      const bool call = i_ < s_.size() && s_[i_] == '(';
      if (call && (id == "exp" || id == "log" || id == "sqrt")) {
        ++i_;
        ExprPtr arg = expr();
        expect(')');
        auto e = std::make_shared<Expr>();
        e->kind = id == "exp" ? Expr::Kind::Exp : (id == "log" ? Expr::Kind::Log : Expr::Kind::Sqrt);
        e->args = {arg};
        e->pos = at;
        return e;
      }
      if (call) {
        i_ = at;
        fail("unknown function '" + id + "'");
      }
      std::shared_ptr<Expr> e;
      if (id == opts_.var) {
        e = std::const_pointer_cast<Expr>(ex::var(id));
      } else if (std::find(opts_.constants.begin(), opts_.constants.end(), id) != opts_.constants.end()) {
        e = std::const_pointer_cast<Expr>(ex::sym(id));
      } else {
        i_ = at;
        fail("undeclared identifier '" + id + "'");
      }
      e->pos = at;
      return e;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  const ParseOptions& opts_;
  std::size_t i_ = 0;
};

}  // namespace

ExprPtr parse(const std::string& text, const ParseOptions& opts) { return Parser(text, opts).run(); }

// ----------------------------------------------------------------- printer

namespace {

using K = Expr::Kind;

bool is_negative(const ExprPtr& e) {
  switch (e->kind) {
    case K::Num: return e->value.sign() < 0;
    case K::Neg: return true;
    case K::Mul: return is_negative(e->args.front());
    case K::Div: return is_negative(e->args.front());
    default: return false;
  }
}

ExprPtr negated(const ExprPtr& e) {
  switch (e->kind) {
    case K::Num: return ex::num(-e->value);
    case K::Neg: return e->args.front();
    case K::Mul: {
      std::vector<ExprPtr> f = e->args;
      f.front() = negated(f.front());
      if (f.front()->kind == K::Num && f.front()->value.is_one()) f.erase(f.begin());
      return ex::mul(std::move(f));
    }
    case K::Div: return ex::div(negated(e->args[0]), e->args[1]);
    default: return ex::neg(e);
  }
}

std::string text(const ExprPtr& e, bool top);

std::string paren(const std::string& s) { return "(" + s + ")"; }

bool is_simple(const ExprPtr& e) {
  switch (e->kind) {
    case K::Var: case K::Sym: case K::Atom: case K::Call: case K::Exp: case K::Log: case K::Sqrt: return true;
    case K::Num: return e->value.is_integer() && e->value.sign() >= 0;
    default: return false;
  }
}

std::string factor_text(const ExprPtr& e) {
  if (e->kind == K::Num) return e->value.is_integer() && e->value.sign() >= 0 ? e->value.str() : paren(e->value.str());
  if (e->kind == K::Add || e->kind == K::Neg || e->kind == K::Div) return paren(text(e, false));
  return text(e, false);
}

std::string text(const ExprPtr& e, bool top) {
  switch (e->kind) {
    case K::Num: return e->value.str();
    case K::Var: case K::Sym: case K::Atom: return e->name;
    case K::Exp: return "exp(" + text(e->args[0], false) + ")";
    case K::Log: return "log(" + text(e->args[0], false) + ")";
    case K::Sqrt: return "sqrt(" + text(e->args[0], false) + ")";
    case K::Call: {
      std::string s = e->name + "(";
      for (std::size_t i = 0; i < e->args.size(); ++i) s += (i ? ", " : "") + text(e->args[i], false);
      return s + ")";
    }
    case K::Add: {
      std::string s = text(e->args[0], false);
      for (std::size_t i = 1; i < e->args.size(); ++i) {
        const ExprPtr& t = e->args[i];
        if (is_negative(t)) {
          s += (top ? " - " : "-") + text(negated(t), false);
        } else {
          s += (top ? " + " : "+") + text(t, false);
        }
      }
      return s;
    }
    case K::Neg: {
      const ExprPtr& a = e->args[0];
      if (a->kind == K::Add || is_negative(a)) return "-" + paren(text(a, false));
      return "-" + text(a, false);
    }
    case K::Mul: {
      std::vector<ExprPtr> f = e->args;
      std::string prefix;
      if (f.front()->kind == K::Num) {
        BigRat c = f.front()->value;
        if (c.sign() < 0) {
          prefix = "-";
          c = -c;
        }
        if (c.is_one()) {
          f.erase(f.begin());
        } else {
          f.front() = ex::num(c);
        }
      }
      std::string s;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += "*";
        const bool last_div = i + 1 == f.size() && i > 0 && f[i]->kind == K::Div;
        s += last_div ? text(f[i], false) : factor_text(f[i]);
      }
      if (f.size() == 1 && prefix.empty()) return text(f.front(), false);
      return prefix + s;
    }
    case K::Div: {
      const ExprPtr& n = e->args[0];
      const ExprPtr& d = e->args[1];
      std::string ns = n->kind == K::Add ? paren(text(n, false)) : text(n, false);
      if (n->kind == K::Num && !n->value.is_integer()) ns = paren(ns);
      const bool bare = d->kind == K::Var || d->kind == K::Sym || d->kind == K::Atom || d->kind == K::Call ||
                        d->kind == K::Exp || d->kind == K::Log || d->kind == K::Sqrt || d->kind == K::Pow ||
                        (d->kind == K::Num && d->value.is_integer() && d->value.sign() > 0);
      return ns + "/" + (bare ? text(d, false) : paren(text(d, false)));
    }
    case K::Pow: {
      const ExprPtr& b = e->args[0];
      const std::string bs = is_simple(b) ? text(b, false) : paren(text(b, false));
      if (e->exponent < 0) return bs + "^(" + std::to_string(e->exponent) + ")";
      return bs + "^" + std::to_string(e->exponent);
    }
  }
  return {};
}

// ---------------------------------------------------------- Elem -> Expr

ExprPtr times(const ExprPtr& c, const ExprPtr& g) {
  if (!g) return c;
  if (c->kind == K::Num && c->value.is_one()) return g;
  if (c->kind == K::Div) return ex::div(times(c->args[0], g), c->args[1]);
  if (c->kind == K::Neg) return ex::neg(times(c->args[0], g));
  if (c->kind == K::Mul && c->args.back()->kind == K::Div) {
    std::vector<ExprPtr> f(c->args.begin(), c->args.end() - 1);
    f.push_back(times(c->args.back(), g));
    return ex::mul(std::move(f));
  }
  return ex::mul({c, g});
}

ExprPtr gen_power(const LevelPtr& l, long i) {
  if (i == 0) return nullptr;
  switch (l->kind) {
    case LevelKind::Var: return ex::pow(ex::var(l->name), i);
    case LevelKind::Symbol: return ex::pow(ex::sym(l->name), i);
    case LevelKind::ExpConst: {
      const BigRat q(mpz_class(i), mpz_class(l->k));
      return ex::atom("exp(" + q.str() + ")");
    }
    default: return ex::pow(ex::atom(l->name), i);
  }
}

ExprPtr poly_expr(const UniPoly& p, const LevelPtr& l, long shift = 0) {
  std::vector<ExprPtr> terms;
  for (int i = p.degree(); i >= 0; --i) {
    const Elem& c = p.coeff(i);
    if (c.is_zero()) continue;
    terms.push_back(times(to_expr(c), gen_power(l, i + shift)));
  }
  return ex::add(std::move(terms));
}

// Rational content of a polynomial whose coefficients are all rational,
// signed like the leading coefficient; 1 otherwise.
BigRat rational_content(const UniPoly& p) {
  mpz_class g = 0, d = 1;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    if (!c.is_rational()) return BigRat(1);
    g = gcd(g, c.rational().num());
    d = lcm(d, c.rational().den());
  }
  if (g == 0) return BigRat(1);
  BigRat r(g, d);
  return p.lead().rational().sign() < 0 ? -r : r;
}

}  // namespace

std::string to_text(const ExprPtr& e) { return text(e, true); }

std::string debug_string(const ExprPtr& e) {
  auto list = [](const std::vector<ExprPtr>& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + debug_string(a[i]);
    return s;
  };
  switch (e->kind) {
    case K::Num: return e->value.str();
    case K::Var: return "Var " + e->name;
    case K::Sym: return "Sym " + e->name;
    case K::Atom: return "Atom " + e->name;
    case K::Add: return "Add(" + list(e->args) + ")";
    case K::Neg: return "Neg(" + list(e->args) + ")";
    case K::Mul: return "Mul(" + list(e->args) + ")";
    case K::Div: return "Div(" + list(e->args) + ")";
    case K::Pow: return "Pow(" + list(e->args) + ", " + std::to_string(e->exponent) + ")";
    case K::Exp: return "Exp(" + list(e->args) + ")";
    case K::Log: return "Log(" + list(e->args) + ")";
    case K::Sqrt: return "Sqrt(" + list(e->args) + ")";
    case K::Call: return e->name + "(" + list(e->args) + ")";
  }
  return {};
}

ExprPtr to_expr(const Elem& e) {
  if (e.is_rational()) return ex::num(e.rational());
  const LevelPtr& l = e.level();
  const UniPoly& den = e.den();
  // e^(n/k) constants print as exp(q), including negative q.
  if (l->kind == LevelKind::ExpConst && den.degree() > 0 && den == UniPoly::monomial(Elem(1), den.degree())) {
    return poly_expr(e.num(), l, -den.degree());
  }
  UniPoly num = e.num();
  const BigRat content = den.degree() > 0 && num.degree() > 0 ? rational_content(num) : BigRat(1);
  if (!content.is_one()) num = num * Elem(content.inverse());
  ExprPtr n = poly_expr(num, l);
  ExprPtr out = den.degree() == 0 ? n : ex::div(n, poly_expr(den, l));
  return content.is_one() ? out : times(ex::num(content), out);
}

std::string to_text(const Elem& e) { return to_text(to_expr(e)); }

}  // namespace liouville
