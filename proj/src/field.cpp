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

#include "liouville/field.hpp"

#include <stdexcept>

#include "liouville/poly.hpp"

namespace liouville {

const Elem& zero_elem() {
  static const Elem zero;
  return zero;
}

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Elem> coeffs) : c_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Elem& c) { return UniPoly(std::vector<Elem>{c}); }

UniPoly UniPoly::monomial(const Elem& c, int degree) {
  if (c.is_zero()) return {};
  std::vector<Elem> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Elem& UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero_elem();
  return c_[static_cast<std::size_t>(i)];
}

const Elem& UniPoly::lead() const { return c_.empty() ? zero_elem() : c_.back(); }

bool UniPoly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Elem> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return UniPoly(std::move(r));
}

UniPoly operator*(const UniPoly& a, const Elem& c) {
  if (c.is_zero()) return {};
  if (c.is_one()) return a;
  UniPoly r = a;
  for (auto& x : r.c_) x *= c;
  r.trim();
  return r;
}

UniPoly operator*(const Elem& c, const UniPoly& a) { return a * c; }

bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

UniPoly UniPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Elem> v(static_cast<std::size_t>(k));
  v.insert(v.end(), c_.begin(), c_.end());
  return UniPoly(std::move(v));
}

// ------------------------------------------------------------------- Elem

int Elem::depth() const { return level_ ? level_->depth : 0; }

const BigRat& Elem::rational() const {
  if (level_) throw std::logic_error("Elem::rational on a non-rational element");
  return q_;
}

const UniPoly& Elem::num() const {
  if (!level_) throw std::logic_error("Elem::num on a rational element");
  return frac_->num;
}

const UniPoly& Elem::den() const {
  if (!level_) throw std::logic_error("Elem::den on a rational element");
  return frac_->den;
}

bool Elem::is_polynomial() const { return !level_ || frac_->den.degree() == 0; }

Elem Elem::raw(const LevelPtr& level, UniPoly num, UniPoly den) {
  Elem e;
  e.level_ = level;
  e.frac_ = std::make_shared<const Frac>(Frac{std::move(num), std::move(den)});
  return e;
}

Elem Elem::finish(const LevelPtr& level, UniPoly num, UniPoly den) {
  if (num.is_zero()) return Elem();
  if (den.degree() == 0 && num.degree() == 0) return num.lead() / den.lead();
  return raw(level, std::move(num), std::move(den));
}

Elem Elem::make(const LevelPtr& level, UniPoly num, UniPoly den) {
  if (!level) throw std::logic_error("Elem::make without a level");
  if (den.is_zero()) throw std::domain_error("division by zero");
  if (num.is_zero()) return Elem();
  if (level->is_algebraic()) {
    UniPoly r = num;
    if (den.degree() > 0) {
      r = r * poly::inverse_mod(den, level->minpoly);
    } else if (!den.lead().is_one()) {
      r = r * den.lead().inverse();
    }
    r = poly::rem(r, level->minpoly);
    return finish(level, std::move(r), UniPoly{Elem(1)});
  }
  if (den.degree() > 0 && num.degree() >= 0) {
    UniPoly g = poly::gcd(num, den);
    if (g.degree() > 0) {
      num = poly::exact_div(num, g);
      den = poly::exact_div(den, g);
    }
  }
  if (!den.lead().is_one()) {
    const Elem inv = den.lead().inverse();
    num = num * inv;
    den = den * inv;
  }
  return finish(level, std::move(num), std::move(den));
}

Elem Elem::make_reduced(const LevelPtr& level, UniPoly num, UniPoly den) {
  if (level->is_algebraic()) return make(level, std::move(num), std::move(den));
  if (den.is_zero()) throw std::domain_error("division by zero");
  if (num.is_zero()) return Elem();
  if (!den.lead().is_one()) {
    const Elem inv = den.lead().inverse();
    num = num * inv;
    den = den * inv;
  }
  return finish(level, std::move(num), std::move(den));
}

Elem Elem::gen(const LevelPtr& level) {
  return raw(level, UniPoly{Elem(0), Elem(1)}, UniPoly{Elem(1)});
}

Elem Elem::operator-() const {
  if (!level_) return Elem(-q_);
  return raw(level_, -frac_->num, frac_->den);
}

namespace {

void check_same_level(const Elem& a, const Elem& b) {
  if (a.level() != b.level()) throw std::logic_error("arithmetic between elements of different towers");
}

}  // namespace

Elem operator+(const Elem& a0, const Elem& b0) {
  if (a0.is_rational() && b0.is_rational()) return Elem(a0.q_ + b0.q_);
  const bool swap = a0.depth() < b0.depth();
  const Elem& a = swap ? b0 : a0;
  const Elem& b = swap ? a0 : b0;
  const LevelPtr& lvl = a.level_;
  if (b.depth() < a.depth()) {
    if (b.is_zero()) return a;
    UniPoly n = a.frac_->num + a.frac_->den * b;
    return Elem::finish(lvl, std::move(n), a.frac_->den);
  }
  check_same_level(a, b);
  if (lvl->is_algebraic()) return Elem::finish(lvl, a.frac_->num + b.frac_->num, UniPoly{Elem(1)});
  if (a.frac_->den == b.frac_->den) return Elem::make(lvl, a.frac_->num + b.frac_->num, a.frac_->den);
  const UniPoly g = poly::gcd(a.frac_->den, b.frac_->den);
  if (g.degree() <= 0) {
    // Coprime reduced denominators: the sum is already reduced.
    return Elem::make_reduced(lvl, a.frac_->num * b.frac_->den + b.frac_->num * a.frac_->den,
                              a.frac_->den * b.frac_->den);
  }
  const UniPoly ad = poly::exact_div(a.frac_->den, g);
  const UniPoly bd = poly::exact_div(b.frac_->den, g);
  UniPoly num = a.frac_->num * bd + b.frac_->num * ad;
  UniPoly den = a.frac_->den * bd;
  // Anything that cancels now divides g.
  for (UniPoly h = num.is_zero() ? UniPoly{Elem(1)} : poly::gcd(num, g); h.degree() > 0;
       h = poly::gcd(poly::gcd(num, h), den)) {
    num = poly::exact_div(num, h);
    den = poly::exact_div(den, h);
  }
  return Elem::make_reduced(lvl, std::move(num), std::move(den));
}

Elem operator-(const Elem& a, const Elem& b) {
  if (a.is_rational() && b.is_rational()) return Elem(a.q_ - b.q_);
  return a + (-b);
}

Elem operator*(const Elem& a0, const Elem& b0) {
  if (a0.is_rational() && b0.is_rational()) return Elem(a0.q_ * b0.q_);
  const bool swap = a0.depth() < b0.depth();
  const Elem& a = swap ? b0 : a0;
  const Elem& b = swap ? a0 : b0;
  const LevelPtr& lvl = a.level_;
  if (b.depth() < a.depth()) {
    if (b.is_zero()) return Elem();
    if (b.is_one()) return a;
    return Elem::raw(lvl, a.frac_->num * b, a.frac_->den);
  }
  check_same_level(a, b);
  if (lvl->is_algebraic()) {
    return Elem::finish(lvl, poly::rem(a.frac_->num * b.frac_->num, lvl->minpoly), UniPoly{Elem(1)});
  }
  UniPoly an = a.frac_->num, ad = a.frac_->den, bn = b.frac_->num, bd = b.frac_->den;
  if (bd.degree() > 0) {
    const UniPoly g1 = poly::gcd(an, bd);
    if (g1.degree() > 0) {
      an = poly::exact_div(an, g1);
      bd = poly::exact_div(bd, g1);
    }
  }
  if (ad.degree() > 0) {
    const UniPoly g2 = poly::gcd(bn, ad);
    if (g2.degree() > 0) {
      bn = poly::exact_div(bn, g2);
      ad = poly::exact_div(ad, g2);
    }
  }
  return Elem::finish(lvl, an * bn, ad * bd);
}

Elem Elem::inverse() const {
  if (!level_) return Elem(q_.inverse());
  if (level_->is_algebraic()) {
    return finish(level_, poly::inverse_mod(frac_->num, level_->minpoly), UniPoly{Elem(1)});
  }
  const Elem inv = frac_->num.lead().inverse();
  return finish(level_, frac_->den * inv, frac_->num * inv);
}

Elem operator/(const Elem& a, const Elem& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_rational() && b.is_rational()) return Elem(a.q_ / b.q_);
  return a * b.inverse();
}

Elem Elem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Elem result(1);
  Elem base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const Elem& a, const Elem& b) {
  if (a.is_rational() || b.is_rational()) return a.is_rational() && b.is_rational() && a.q_ == b.q_;
  if (a.level_ != b.level_) return false;
  return a.frac_ == b.frac_ || (a.frac_->num == b.frac_->num && a.frac_->den == b.frac_->den);
}

std::pair<UniPoly, UniPoly> as_fraction(const Elem& e, const LevelPtr& level) {
  if (e.depth() == level->depth) {
    if (e.level() != level) throw std::logic_error("as_fraction: element from a different tower");
    return {e.num(), e.den()};
  }
  if (e.depth() > level->depth) throw std::logic_error("as_fraction: element above the requested level");
  return {UniPoly::constant(e), UniPoly{Elem(1)}};
}

bool level_at_or_below(const Level* lower, const Level* upper) {
  if (!lower) return true;
  for (const Level* l = upper; l; l = l->below.get()) {
    if (l == lower) return true;
  }
  return false;
}

}  // namespace liouville
