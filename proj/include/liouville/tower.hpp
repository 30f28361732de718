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

#ifndef LIOUVILLE_TOWER_HPP
#define LIOUVILLE_TOWER_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liouville/bigrat.hpp"
#include "liouville/field.hpp"

namespace liouville {

// The constants a tower is built over. Levels are laid out as: symbols,
// log(p) atoms (ascending p), e^(1/k), sqrt(r), then the variable.
struct ConstSpec {
  std::vector<std::string> symbols;
  std::vector<BigRat> log_primes;
  long exp_k = 0;               // 0 when e is absent
  std::optional<BigRat> root;   // squarefree integer radicand

  // Union of requirements. Throws Unsupported when two different square
  // roots would be needed.
  void merge(const ConstSpec& other);
  bool covers(const ConstSpec& other) const;
  bool empty() const { return symbols.empty() && log_primes.empty() && exp_k == 0 && !root; }
};

// Raised when a computation needs a constant atom the tower lacks. Callers
// rebuild the tower with `need` merged in and start over.
class NeedConstant : public std::runtime_error {
 public:
  explicit NeedConstant(ConstSpec need);
  const ConstSpec& need() const { return need_; }

 private:
  ConstSpec need_;
};

// A construction outside the supported fragment (algebraic extensions,
// logs of negative constants, unsupported tower shapes, ...).
class Unsupported : public std::runtime_error {
 public:
  Unsupported(std::string reason, const std::string& detail)
      : std::runtime_error(detail), reason_(std::move(reason)) {}
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
};

class Tower {
 public:
  Tower() = default;
  static Tower build(const ConstSpec& constants, const std::string& var = "x");

  const LevelPtr& top() const { return top_; }
  const ConstSpec& constants() const { return spec_; }
  const std::string& var_name() const;

  // Bottom-up list of all levels.
  std::vector<LevelPtr> chain() const;
  std::vector<LevelPtr> generators() const;
  LevelPtr var_level() const { return var_; }
  // Highest constant level, null when C = Q.
  LevelPtr constant_top() const;

  Elem x() const { return Elem::gen(var_); }
  Elem symbol(const std::string& name) const;
  Elem log_prime(const BigRat& p) const;
  // Exact e^q; throws NeedConstant when e^(1/den q) is not available.
  Elem exp_rational(const BigRat& q) const;
  // Exact sqrt(q); rational when q is a square, otherwise needs sqrt(r).
  Elem sqrt_rational(const BigRat& q) const;
  // sqrt(-1) if the tower has it.
  std::optional<Elem> imaginary_unit() const;

  Tower with_log(const Elem& u, const std::string& name) const;
  Tower with_exp(const Elem& eta, const std::string& name) const;

 private:
  Tower with_level(Level level) const;

  LevelPtr top_;
  LevelPtr var_;
  ConstSpec spec_;
};

// The derivation d/dx on any tower element.
Elem derive(const Elem& e);
// d/dt on the numerator/denominator of a level, i.e. the derivation applied
// to a polynomial in the level's generator.
UniPoly derive_poly(const UniPoly& p, const LevelPtr& level);
bool is_constant(const Elem& e);

// Squarefree part of |n| and the square cofactor: n = s^2 * r.
std::pair<mpz_class, mpz_class> split_square(const mpz_class& n);
// Prime factorization of a positive integer by trial division.
std::vector<std::pair<mpz_class, long>> factor_integer(mpz_class n);

}  // namespace liouville

#endif  // LIOUVILLE_TOWER_HPP
