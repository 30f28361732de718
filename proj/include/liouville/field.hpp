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

#ifndef LIOUVILLE_FIELD_HPP
#define LIOUVILLE_FIELD_HPP

// Recursive dense representation of elements of a differential tower
//   Q(c_1)...(c_r)(x)(t_1)...(t_n).
// An element living at level L is a reduced ratio num/den of polynomials in
// the generator of L whose coefficients live strictly below L. Elements are
// always stored at the lowest level that can hold them, so structural
// equality coincides with field equality.

#include <initializer_list>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "liouville/bigrat.hpp"

namespace liouville {

class Elem;
struct Level;
using LevelPtr = std::shared_ptr<const Level>;

/// Dense univariate polynomial over the field of elements below some level.
/// Coefficient index is the degree; the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Elem> coeffs);
  UniPoly(std::initializer_list<Elem> coeffs);
  static UniPoly constant(const Elem& c);
  static UniPoly monomial(const Elem& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Elem& coeff(int i) const;
  const Elem& lead() const;
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_monic() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const Elem& c);
  friend UniPoly operator*(const Elem& c, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b);

  // Multiplication by t^k.
  UniPoly shifted(int k) const;

 private:
  void trim();
  std::vector<Elem> c_;
};

struct Frac;

/// Element of a tower field. Cheap to copy; immutable.
class Elem {
 public:
  Elem() = default;
  Elem(long n) : q_(n) {}                     // NOLINT(google-explicit-constructor)
  Elem(int n) : q_(static_cast<long>(n)) {}   // NOLINT(google-explicit-constructor)
  Elem(BigRat q) : q_(std::move(q)) {}        // NOLINT(google-explicit-constructor)

  // Builds num/den at `level` and brings it to canonical form.
  static Elem make(const LevelPtr& level, UniPoly num, UniPoly den);
  static Elem make(const LevelPtr& level, UniPoly num) { return make(level, std::move(num), UniPoly{Elem(1)}); }
  // Same, for callers that already know gcd(num, den) = 1.
  static Elem make_reduced(const LevelPtr& level, UniPoly num, UniPoly den);
  // The generator of `level` itself.
  static Elem gen(const LevelPtr& level);

  int depth() const;
  const LevelPtr& level() const { return level_; }
  bool is_rational() const { return !level_; }
  bool is_zero() const { return !level_ && q_.is_zero(); }
  bool is_one() const { return !level_ && q_.is_one(); }
  const BigRat& rational() const;
  // Numerator and denominator polynomials; only valid when !is_rational().
  const UniPoly& num() const;
  const UniPoly& den() const;
  bool is_polynomial() const;  // den == 1 at its own level

  Elem inverse() const;
  Elem pow(long e) const;

  Elem operator-() const;
  Elem& operator+=(const Elem& o) { return *this = *this + o; }
  Elem& operator-=(const Elem& o) { return *this = *this - o; }
  Elem& operator*=(const Elem& o) { return *this = *this * o; }
  Elem& operator/=(const Elem& o) { return *this = *this / o; }
  friend Elem operator+(const Elem& a, const Elem& b);
  friend Elem operator-(const Elem& a, const Elem& b);
  friend Elem operator*(const Elem& a, const Elem& b);
  friend Elem operator/(const Elem& a, const Elem& b);
  friend bool operator==(const Elem& a, const Elem& b);

 private:
  static Elem raw(const LevelPtr& level, UniPoly num, UniPoly den);
  static Elem finish(const LevelPtr& level, UniPoly num, UniPoly den);

  LevelPtr level_;
  BigRat q_;
  std::shared_ptr<const Frac> frac_;
};

struct Frac {
  UniPoly num;
  UniPoly den;
};

enum class LevelKind {
  Symbol,    // declared constant, assumed transcendental
  LogPrime,  // log(p) for a prime p
  ExpConst,  // e^(1/k)
  Root,      // q^(1/k), algebraic of degree k
  Var,       // the integration variable, derivative 1
  Log,       // t' = u'/u
  Exp,       // t' = eta' t
};

/// One storey of a tower. Levels form a chain through `below`.
struct Level {
  LevelKind kind = LevelKind::Var;
  int depth = 1;
  LevelPtr below;
  std::string name;  // printed form of the generator

  BigRat q;       // LogPrime: the prime; Root: the radicand
  long k = 1;     // ExpConst: e^(1/k); Root: index
  Elem arg;       // Log: u; Exp: eta
  Elem arg_rate;  // Log: u'/u; Exp: eta'
  UniPoly gen_deriv;  // derivative of the generator as a polynomial in it
  UniPoly minpoly;    // Root only

  bool is_constant() const {
    return kind == LevelKind::Symbol || kind == LevelKind::LogPrime || kind == LevelKind::ExpConst ||
           kind == LevelKind::Root;
  }
  bool is_algebraic() const { return kind == LevelKind::Root; }
  bool is_generator() const { return kind == LevelKind::Log || kind == LevelKind::Exp; }
};

/// Zero element, handy for references.
const Elem& zero_elem();

/// Coefficient form of `e` at `level`: (num, den) with den monic.
/// Elements below `level` come back as constant polynomials.
std::pair<UniPoly, UniPoly> as_fraction(const Elem& e, const LevelPtr& level);

/// True when `lower` sits at or below `upper` in the same chain.
bool level_at_or_below(const Level* lower, const Level* upper);

}  // namespace liouville

#endif  // LIOUVILLE_FIELD_HPP
