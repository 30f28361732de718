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

#include "liouville/lower.hpp"

#include <functional>
#include <numeric>

#include "liouville/poly.hpp"
#include "liouville/structure.hpp"

namespace liouville {

namespace {

std::string nested(const Elem& e) {
  // Text without top-level spacing, as it appears inside exp(...)/log(...).
  const std::string s = to_text(ex::exp(to_expr(e)));
  return s.substr(4, s.size() - 5);
}

bool contains_exp(const ExprPtr& e) {
  if (e->kind == Expr::Kind::Exp || e->kind == Expr::Kind::Sqrt) return true;
  for (const auto& a : e->args) {
    if (contains_exp(a)) return true;
  }
  return false;
}

// The constant term of g: coefficient of t^0 in the polynomial part,
// recursively down to the constants.
Elem constant_term(const Elem& g) {
  if (is_constant(g)) return g;
  const UniPoly& n = g.num();
  const UniPoly& d = g.den();
  if (d.degree() == 0) return constant_term(n.coeff(0));
  if (n.degree() < d.degree()) return Elem();
  return constant_term(poly::quo(n, d).coeff(0));
}

// Single nonzero term c*t^a of a polynomial, if it is one.
std::optional<std::pair<int, Elem>> monomial_of(const UniPoly& p) {
  int deg = -1;
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i).is_zero()) continue;
    if (deg >= 0) return std::nullopt;
    deg = i;
  }
  if (deg < 0) return std::nullopt;
  return std::make_pair(deg, p.coeff(deg));
}

}  // namespace

Elem Lowering::lower_top(const ExprPtr& e) {
  std::function<void(const ExprPtr&)> pre = [&](const ExprPtr& n) {
    for (const auto& a : n->args) pre(a);
    if (n->kind == Expr::Kind::Log && !contains_exp(n)) lower(n);
  };
  pre(e);
  return lower(e);
}

Elem Lowering::lower(const ExprPtr& e) {
  using K = Expr::Kind;
  switch (e->kind) {
    case K::Num: return Elem(e->value);
    case K::Var: return tower_.x();
    case K::Sym: return tower_.symbol(e->name);
    case K::Add: {
      Elem s;
      for (const auto& a : e->args) s += lower(a);
      return s;
    }
    case K::Neg: return -lower(e->args[0]);
    case K::Mul: {
      Elem p(1);
      for (const auto& a : e->args) p *= lower(a);
      return p;
    }
    case K::Div: {
      const Elem n = lower(e->args[0]);
      const Elem d = lower(e->args[1]);
      if (d.is_zero()) throw Unsupported("division_by_zero", "expression divides by zero");
      return n / d;
    }
    case K::Pow: {
      const Elem b = lower(e->args[0]);
      if (b.is_zero() && e->exponent < 0) throw Unsupported("division_by_zero", "negative power of zero");
      return b.pow(e->exponent);
    }
    case K::Exp: return exp_of(lower(e->args[0]));
    case K::Log: return log_of(lower(e->args[0]));
    case K::Sqrt: {
      const Elem a = lower(e->args[0]);
      if (a.is_rational()) return tower_.sqrt_rational(a.rational());
      return exp_of(log_of(a) / Elem(2));
    }
    case K::Atom:
    case K::Call: break;
  }
  throw Unsupported("unsupported_syntax", "cannot lower " + debug_string(e));
}

Elem Lowering::exp_of_constant(const Elem& c) {
  BigRat q0;
  std::vector<std::pair<BigRat, BigRat>> logs;  // (prime, coefficient)
  std::function<void(const Elem&)> split = [&](const Elem& e) {
    if (e.is_rational()) {
      q0 += e.rational();
      return;
    }
    const LevelPtr& l = e.level();
    if (l->kind == LevelKind::LogPrime && e.den().degree() == 0 && e.num().degree() <= 1 &&
        e.num().coeff(1).is_rational()) {
      logs.emplace_back(l->q, e.num().coeff(1).rational());
      split(e.num().coeff(0));
      return;
    }
    throw Unsupported("exp_of_constant", "exp(" + nested(c) + ") is not a supported constant");
  };
  split(c);
  Elem out = tower_.exp_rational(q0);
  BigRat radicand(1);
  for (const auto& [p, a] : logs) {
    const mpz_class n = a.floor();
    const BigRat frac = a - BigRat(n);
    if (!n.fits_slong_p()) throw Unsupported("constant_overflow", "power too large");
    out *= Elem(p.pow(n.get_si()));
    if (frac == BigRat(1, 2)) {
      radicand *= p;
    } else if (!frac.is_zero()) {
      throw Unsupported("root_constant", p.str() + "^(" + frac.str() + ") needs a root other than a square root");
    }
  }
  if (!radicand.is_one()) out *= tower_.sqrt_rational(radicand);
  return out;
}

Elem Lowering::log_of_constant(const Elem& c) {
  if (c.is_rational()) {
    const BigRat& q = c.rational();
    if (q.sign() <= 0) throw Unsupported("log_of_nonpositive_constant", "log(" + q.str() + ") is not real");
    Elem out;
    for (const auto& [p, e] : factor_integer(q.num())) out += Elem(e) * tower_.log_prime(BigRat(p));
    for (const auto& [p, e] : factor_integer(q.den())) out -= Elem(e) * tower_.log_prime(BigRat(p));
    return out;
  }
  const LevelPtr& l = c.level();
  if (l->kind == LevelKind::ExpConst) {
    const auto m = monomial_of(c.num());
    const auto d = monomial_of(c.den());
    if (m && d && d->second.is_one()) {
      return Elem(BigRat(mpz_class(m->first - d->first), mpz_class(l->k))) + log_of_constant(m->second);
    }
  }
  if (l->kind == LevelKind::Root && l->q.sign() > 0 && c.num().coeff(0).is_zero()) {
    return log_of_constant(c.num().coeff(1)) + Elem(BigRat(1, 2)) * log_of_constant(Elem(l->q));
  }
  throw Unsupported("log_of_constant", "log(" + nested(c) + ") is not a supported constant");
}

Elem Lowering::exp_of(const Elem& g) {
  if (is_constant(g)) return exp_of_constant(g);
  if (auto wit = exp_dependence(g, tower_)) {
    Elem rest = g;
    Elem val(1);
    for (std::size_t i = 0; i < wit->r.size(); ++i) {
      const BigRat& r = wit->r[i];
      if (r.is_zero()) continue;
      const WItem& it = wit->basis.items[i];
      if (!r.is_integer()) {
        if (it.gen->kind == LevelKind::Exp) {
          const auto& [key, n] = exp_keys_.at(it.gen.get());
          throw NeedRefinement(key, n * r.den().get_si());
        }
        throw Unsupported("algebraic_extension", "exp(" + nested(g) + ") needs (" + nested(it.exp_elem) + ")^(" +
                                                     r.str() + "), an algebraic function outside the tower");
      }
      rest -= Elem(r) * it.log_elem;
      val *= it.exp_elem.pow(r.num().get_si());
    }
    return exp_of_constant(rest) * val;
  }
  const Elem c0 = constant_term(g);
  Elem g1 = g - c0;
  Elem val = exp_of_constant(c0);
  const LevelPtr l = g1.level();
  if (l->kind == LevelKind::Log && g1.den().degree() == 0 && g1.num().degree() == 1 && g1.num().coeff(1).is_rational()) {
    const mpz_class n = g1.num().coeff(1).rational().ceil();
    if (n != 0) {
      g1 -= Elem(BigRat(n)) * Elem::gen(l);
      val *= l->arg.pow(n.get_si());
    }
  }
  const std::string key = to_text(g1);
  const auto it = refine_.find(key);
  const long n = it == refine_.end() ? 1 : it->second;
  const Elem eta = g1 / Elem(n);
  tower_ = tower_.with_exp(eta, "exp(" + nested(eta) + ")");
  exp_keys_[tower_.top().get()] = {key, n};
  return val * Elem::gen(tower_.top()).pow(n);
}

Elem Lowering::log_of(const Elem& v) {
  if (v.is_zero()) throw Unsupported("log_of_zero", "log(0) is undefined");
  if (is_constant(v)) return log_of_constant(v);
  const LevelPtr& l = v.level();
  if (l->kind == LevelKind::Exp) {
    const auto m = monomial_of(v.num());
    const auto d = monomial_of(v.den());
    if (m && d && d->second.is_one()) return Elem(m->first - d->first) * l->arg + log_of(m->second);
  }
  Elem c = v;
  while (!c.is_rational()) c = c.num().lead();
  BigRat q = c.rational().abs();
  if (q.is_one()) return log_nonconstant(v);
  return log_of_constant(Elem(q)) + log_nonconstant(v / Elem(q));
}

Elem Lowering::log_nonconstant(const Elem& v) {
  if (auto wit = log_dependence(v, tower_)) {
    mpz_class big_l = 1;
    for (const auto& r : wit->r) big_l = lcm(big_l, r.den());
    const long lcd = big_l.get_si();
    Elem q = v.pow(lcd);
    Elem sum;
    for (std::size_t i = 0; i < wit->r.size(); ++i) {
      const BigRat& r = wit->r[i];
      if (r.is_zero()) continue;
      const WItem& it = wit->basis.items[i];
      q /= it.exp_elem.pow((r * BigRat(lcd)).num().get_si());
      sum += Elem(r) * it.log_elem;
    }
    if (!is_constant(q)) throw std::logic_error("log witness left a non-constant quotient");
    return sum + log_of_constant(q) / Elem(lcd);
  }
  // Normalize the argument of a new generator: log(1/w) = -log(w) and
  // log(w^k) = k*log(w).
  if (v.num().degree() == 0) return -log_of(v.inverse());
  if (v.den().degree() == 0 && v.num().is_monic()) {
    const auto sq = poly::squarefree(v.num());
    long g = 0;
    for (const auto& [f, m] : sq) g = std::gcd(g, static_cast<long>(m));
    if (g > 1) {
      UniPoly w{Elem(1)};
      for (const auto& [f, m] : sq) w = w * poly::pow(f, m / static_cast<int>(g));
      return Elem(g) * log_of(Elem::make(v.level(), w));
    }
  }
  if (v.depth() < tower_.top()->depth) {
    bool exp_above = false;
    for (LevelPtr l = tower_.top(); l && l->depth > v.depth(); l = l->below) {
      exp_above = exp_above || l->kind == LevelKind::Exp;
    }
    if (exp_above) throw NeedLogBelow("log(" + nested(v) + ")");
  }
  tower_ = tower_.with_log(v, "log(" + nested(v) + ")");
  return Elem::gen(tower_.top());
}

Lowered lower(const ExprPtr& e, const LowerOptions& opts) {
  return with_restarts(opts, [&](Lowering& lw) {
    Elem v = lw.lower_top(e);
    return Lowered{lw.tower(), v};
  });
}

}  // namespace liouville
