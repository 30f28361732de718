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

#include "liouville/tower.hpp"

#include <algorithm>
#include <numeric>

#include "liouville/poly.hpp"

namespace liouville {

void ConstSpec::merge(const ConstSpec& other) {
  for (const auto& s : other.symbols) {
    if (std::find(symbols.begin(), symbols.end(), s) == symbols.end()) symbols.push_back(s);
  }
  for (const auto& p : other.log_primes) {
    if (std::find(log_primes.begin(), log_primes.end(), p) == log_primes.end()) log_primes.push_back(p);
  }
  std::sort(log_primes.begin(), log_primes.end());
  if (other.exp_k != 0) exp_k = exp_k == 0 ? other.exp_k : std::lcm(exp_k, other.exp_k);
  if (other.root) {
    if (root && *root != *other.root) {
      throw Unsupported("second_quadratic_extension",
                        "constants would need both sqrt(" + root->str() + ") and sqrt(" + other.root->str() + ")");
    }
    root = other.root;
  }
}

bool ConstSpec::covers(const ConstSpec& other) const {
  for (const auto& s : other.symbols) {
    if (std::find(symbols.begin(), symbols.end(), s) == symbols.end()) return false;
  }
  for (const auto& p : other.log_primes) {
    if (std::find(log_primes.begin(), log_primes.end(), p) == log_primes.end()) return false;
  }
  if (other.exp_k != 0 && (exp_k == 0 || exp_k % other.exp_k != 0)) return false;
  if (other.root && root != other.root) return false;
  return true;
}

NeedConstant::NeedConstant(ConstSpec need)
    : std::runtime_error("constant required outside the current tower"), need_(std::move(need)) {}

Tower Tower::build(const ConstSpec& constants, const std::string& var) {
  Tower t;
  t.spec_ = constants;
  for (const auto& s : constants.symbols) {
    Level l;
    l.kind = LevelKind::Symbol;
    l.name = s;
    t = t.with_level(std::move(l));
  }
  for (const auto& p : constants.log_primes) {
    Level l;
    l.kind = LevelKind::LogPrime;
    l.q = p;
    l.name = "log(" + p.str() + ")";
    t = t.with_level(std::move(l));
  }
  if (constants.exp_k != 0) {
    Level l;
    l.kind = LevelKind::ExpConst;
    l.k = constants.exp_k;
    l.name = constants.exp_k == 1 ? "exp(1)" : "exp(1/" + std::to_string(constants.exp_k) + ")";
    t = t.with_level(std::move(l));
  }
  if (constants.root) {
    Level l;
    l.kind = LevelKind::Root;
    l.q = *constants.root;
    l.k = 2;
    l.name = "sqrt(" + constants.root->str() + ")";
    l.minpoly = UniPoly{Elem(-*constants.root), Elem(0), Elem(1)};
    t = t.with_level(std::move(l));
  }
  Level v;
  v.kind = LevelKind::Var;
  v.name = var;
  v.gen_deriv = UniPoly{Elem(1)};
  t = t.with_level(std::move(v));
  t.var_ = t.top_;
  t.spec_ = constants;
  return t;
}

Tower Tower::with_level(Level level) const {
  Tower t = *this;
  level.below = top_;
  level.depth = top_ ? top_->depth + 1 : 1;
  t.top_ = std::make_shared<const Level>(std::move(level));
  return t;
}

const std::string& Tower::var_name() const { return var_->name; }

std::vector<LevelPtr> Tower::chain() const {
  std::vector<LevelPtr> out;
  for (LevelPtr l = top_; l; l = l->below) out.push_back(l);
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<LevelPtr> Tower::generators() const {
  std::vector<LevelPtr> out;
  for (const auto& l : chain()) {
    if (l->is_generator()) out.push_back(l);
  }
  return out;
}

LevelPtr Tower::constant_top() const { return var_ ? var_->below : top_; }

Elem Tower::symbol(const std::string& name) const {
  for (LevelPtr l = constant_top(); l; l = l->below) {
    if (l->kind == LevelKind::Symbol && l->name == name) return Elem::gen(l);
  }
  ConstSpec need;
  need.symbols.push_back(name);
  throw NeedConstant(need);
}

Elem Tower::log_prime(const BigRat& p) const {
  for (LevelPtr l = constant_top(); l; l = l->below) {
    if (l->kind == LevelKind::LogPrime && l->q == p) return Elem::gen(l);
  }
  ConstSpec need;
  need.log_primes.push_back(p);
  throw NeedConstant(need);
}

Elem Tower::exp_rational(const BigRat& q) const {
  if (q.is_zero()) return Elem(1);
  const mpz_class d = q.den();
  for (LevelPtr l = constant_top(); l; l = l->below) {
    if (l->kind != LevelKind::ExpConst) continue;
    if (!d.fits_slong_p() || l->k % d.get_si() != 0) break;
    const mpz_class n = q.num() * (l->k / d.get_si());
    if (!n.fits_slong_p()) throw Unsupported("constant_overflow", "exponent of e too large");
    return Elem::gen(l).pow(n.get_si());
  }
  if (!d.fits_slong_p()) throw Unsupported("constant_overflow", "denominator of exponent too large");
  ConstSpec need;
  need.exp_k = d.get_si();
  throw NeedConstant(need);
}

Elem Tower::sqrt_rational(const BigRat& q) const {
  if (q.is_zero()) return Elem(0);
  const mpz_class b = q.den();
  auto [s, r] = split_square(q.num() * b);
  if (q.sign() < 0) r = -r;
  const BigRat scale(s, b);
  if (r == 1) return Elem(scale);
  const BigRat radicand(r);
  for (LevelPtr l = constant_top(); l; l = l->below) {
    if (l->kind != LevelKind::Root) continue;
    if (l->q != radicand) {
      throw Unsupported("second_quadratic_extension",
                        "constants would need both " + l->name + " and sqrt(" + radicand.str() + ")");
    }
    return Elem(scale) * Elem::gen(l);
  }
  ConstSpec need;
  need.root = radicand;
  throw NeedConstant(need);
}

std::optional<Elem> Tower::imaginary_unit() const {
  for (LevelPtr l = constant_top(); l; l = l->below) {
    if (l->kind == LevelKind::Root && l->q == BigRat(-1)) return Elem::gen(l);
  }
  return std::nullopt;
}

Tower Tower::with_log(const Elem& u, const std::string& name) const {
  Level l;
  l.kind = LevelKind::Log;
  l.name = name;
  l.arg = u;
  l.arg_rate = derive(u) / u;
  l.gen_deriv = UniPoly{l.arg_rate};
  return with_level(std::move(l));
}

Tower Tower::with_exp(const Elem& eta, const std::string& name) const {
  Level l;
  l.kind = LevelKind::Exp;
  l.name = name;
  l.arg = eta;
  l.arg_rate = derive(eta);
  l.gen_deriv = UniPoly{Elem(0), l.arg_rate};
  return with_level(std::move(l));
}

UniPoly derive_poly(const UniPoly& p, const LevelPtr& level) {
  std::vector<Elem> c(p.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = derive(p.coeffs()[i]);
  UniPoly r(std::move(c));
  if (!level->is_constant() && p.degree() > 0) r += poly::diff(p) * level->gen_deriv;
  return r;
}

Elem derive(const Elem& e) {
  if (e.is_rational()) return Elem();
  const LevelPtr& l = e.level();
  if (l->is_constant()) return Elem();
  const UniPoly dn = derive_poly(e.num(), l);
  if (e.den().degree() == 0) return Elem::make(l, dn);
  const UniPoly dd = derive_poly(e.den(), l);
  // Only factors of gcd(D, D') can survive in the denominator twice.
  const UniPoly g = poly::gcd(e.den(), dd);
  if (g.degree() <= 0) {
    UniPoly num = dn * e.den() - e.num() * dd;
    if (l->kind == LevelKind::Exp) return Elem::make(l, std::move(num), e.den() * e.den());
    return Elem::make_reduced(l, std::move(num), e.den() * e.den());
  }
  const UniPoly dg = poly::exact_div(e.den(), g);
  UniPoly num = dn * dg - e.num() * poly::exact_div(dd, g);
  // For a normal factor p of multiplicity k, D'/g is a unit mod p, so only
  // the exponential generator itself can still cancel.
  if (l->kind == LevelKind::Exp) return Elem::make(l, std::move(num), e.den() * dg);
  return Elem::make_reduced(l, std::move(num), e.den() * dg);
}

bool is_constant(const Elem& e) { return e.is_rational() || e.level()->is_constant(); }

std::vector<std::pair<mpz_class, long>> factor_integer(mpz_class n) {
  std::vector<std::pair<mpz_class, long>> out;
  if (n < 0) n = -n;
  if (n <= 1) return out;
  auto take = [&](const mpz_class& p) {
    long e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  take(2);
  for (mpz_class p = 3; p * p <= n; p += 2) {
    take(p);
    if (p > 2000000) break;
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) {
      throw Unsupported("integer_factorization", "cannot factor " + n.get_str() + " by trial division");
    }
    out.emplace_back(n, 1);
  }
  return out;
}

std::pair<mpz_class, mpz_class> split_square(const mpz_class& n) {
  mpz_class s = 1, r = 1;
  for (const auto& [p, e] : factor_integer(n)) {
    for (long i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) r *= p;
  }
  return {s, r};
}

}  // namespace liouville
