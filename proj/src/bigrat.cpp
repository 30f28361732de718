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

#include "liouville/bigrat.hpp"

#include <stdexcept>

namespace liouville {

BigRat::BigRat(const mpz_class& n, const mpz_class& d) : v_(n, d) {
  if (d == 0) throw std::domain_error("BigRat: zero denominator");
  v_.canonicalize();
}

BigRat BigRat::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("BigRat::parse: empty literal");
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t frac = s.size() - dot - 1;
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac; ++i) den *= 10;
    if (digits.empty() || digits == "-") throw std::invalid_argument("BigRat::parse: bad literal " + s);
    return BigRat(mpz_class(digits), den);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("BigRat::parse: bad literal " + s);
  return BigRat(q);
}

std::optional<long> BigRat::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p()) return std::nullopt;
  return v_.get_num().get_si();
}

BigRat BigRat::inverse() const {
  if (is_zero()) throw std::domain_error("BigRat: division by zero");
  return BigRat(1 / v_);
}

BigRat& BigRat::operator/=(const BigRat& o) {
  if (o.is_zero()) throw std::domain_error("BigRat: division by zero");
  v_ /= o.v_;
  return *this;
}

BigRat BigRat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return BigRat(n, d);
}

mpz_class BigRat::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

mpz_class BigRat::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return r;
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

namespace {

std::optional<mpz_class> exact_int_root(const mpz_class& n, unsigned k) {
  if (n < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = exact_int_root(-n, k);
    if (!r) return std::nullopt;
    return mpz_class(-*r);
  }
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

}  // namespace

std::optional<BigRat> exact_root(const BigRat& q, unsigned k) {
  if (k == 0) throw std::domain_error("exact_root: k = 0");
  auto n = exact_int_root(q.num(), k);
  auto d = exact_int_root(q.den(), k);
  if (!n || !d) return std::nullopt;
  return BigRat(*n, *d);
}

}  // namespace liouville
