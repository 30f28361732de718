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

#ifndef LIOUVILLE_BIGRAT_HPP
#define LIOUVILLE_BIGRAT_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace liouville {

// Exact rational number. Always canonical: gcd(|num|, den) = 1, den > 0.
class BigRat {
 public:
  BigRat() = default;
  BigRat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  BigRat(const mpz_class& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  BigRat(const mpz_class& n, const mpz_class& d);
  explicit BigRat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "12", "-3/4" and decimal literals such as "0.25".
  static BigRat parse(std::string_view text);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  double to_double() const { return v_.get_d(); }
  std::optional<long> to_long() const;

  BigRat abs() const { return BigRat(::abs(v_)); }
  BigRat inverse() const;
  BigRat pow(long e) const;
  // Integer part rounded toward -infinity / +infinity.
  mpz_class floor() const;
  mpz_class ceil() const;

  std::string str() const { return v_.get_str(); }

  BigRat operator-() const { return BigRat(-v_); }
  BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
  BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
  BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
  BigRat& operator/=(const BigRat& o);

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }
  friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const BigRat& q) { return os << q.str(); }

 private:
  mpq_class v_;
};

// Integer helpers used by root extraction and rational-root search.
mpz_class gcd(const mpz_class& a, const mpz_class& b);
mpz_class lcm(const mpz_class& a, const mpz_class& b);

// Exact k-th root when q is a perfect k-th power (sign handled for odd k).
std::optional<BigRat> exact_root(const BigRat& q, unsigned k);

}  // namespace liouville

#endif  // LIOUVILLE_BIGRAT_HPP
