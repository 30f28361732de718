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

#include "liouville/numeric.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace liouville::numeric {

namespace {

constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;
constexpr long double kPi = 3.141592653589793238462643383279502884L;

cplx rat(const BigRat& q) { return cplx(static_cast<long double>(q.to_double()), 0) ; }

cplx rational_value(const BigRat& q) {
  // Go through long double division so values like 1/3 keep extended precision.
  const long double n = static_cast<long double>(q.num().get_d());
  const long double d = static_cast<long double>(q.den().get_d());
  if (std::isfinite(n) && std::isfinite(d) && std::fabs(n) < 9e15L && d < 9e15L) return cplx(n / d, 0);
  return rat(q);
}

bool is_real(cplx z) { return z.imag() == 0; }

}  // namespace

cplx Evaluator::poly_value(const UniPoly& p, cplx t) {
  cplx r = 0;
  for (int i = p.degree(); i >= 0; --i) r = r * t + (*this)(p.coeff(i));
  return r;
}

cplx Evaluator::gen_value(const LevelPtr& l) {
  auto it = cache_.find(l.get());
  if (it != cache_.end()) return it->second;
  cplx v;
  switch (l->kind) {
    case LevelKind::Symbol: {
      auto s = symbols_.find(l->name);
      if (s == symbols_.end()) throw std::invalid_argument("no numeric value for constant " + l->name);
      v = s->second;
      break;
    }
    case LevelKind::LogPrime: v = std::log(rational_value(l->q)); break;
    case LevelKind::ExpConst: v = std::exp(cplx(1.0L / static_cast<long double>(l->k), 0)); break;
    case LevelKind::Root: v = std::sqrt(rational_value(l->q)); break;
    case LevelKind::Var: v = x_; break;
    case LevelKind::Log: {
      const cplx u = (*this)(l->arg);
      if (u == cplx(0)) throw std::domain_error("log of zero");
      v = is_real(u) && u.real() > 0 ? cplx(std::log(u.real()), 0) : std::log(u);
      break;
    }
    case LevelKind::Exp: v = std::exp((*this)(l->arg)); break;
  }
  cache_[l.get()] = v;
  return v;
}

cplx Evaluator::operator()(const Elem& e) {
  if (e.is_rational()) return rational_value(e.rational());
  const cplx t = gen_value(e.level());
  const cplx n = poly_value(e.num(), t);
  if (e.den().degree() == 0) return n;
  const cplx d = poly_value(e.den(), t);
  if (std::abs(d) < 1e-300L) throw std::domain_error("pole");
  return n / d;
}

cplx ei(cplx z) {
  if (z == cplx(0)) throw std::domain_error("Ei(0)");
  const long double r = std::abs(z);
  const bool real = is_real(z);
  if (r <= 4 || (real && z.real() > 0 && r < 60)) {
    cplx sum = 0, term = 1;
    for (int n = 1; n < 500; ++n) {
      term *= z / static_cast<long double>(n);
      const cplx add = term / static_cast<long double>(n);
      sum += add;
      if (std::abs(add) < 1e-21L * std::abs(sum)) break;
    }
    const cplx lg = real ? cplx(std::log(std::fabs(z.real())), 0) : std::log(z);
    return kEulerGamma + lg + sum;
  }
  if (real && z.real() > 0) {
    // Asymptotic series, truncated at the smallest term.
    cplx sum = 1, term = 1;
    for (int n = 1; n < 100; ++n) {
      const cplx next = term * static_cast<long double>(n) / z;
      if (std::abs(next) > std::abs(term)) break;
      term = next;
      sum += term;
    }
    return std::exp(z) / z * sum;
  }
  // E1(w) by continued fraction (modified Lentz), w = -z, then Ei(z) = -E1(-z).
  const cplx w = -z;
  const long double tiny = 1e-300L;
  cplx b = w + 1.0L, c = 1.0L / tiny, d = 1.0L / b, h = d;
  for (int i = 1; i < 10000; ++i) {
    const long double an = -static_cast<long double>(i) * i;
    b += 2.0L;
    d = 1.0L / (an * d + b);
    c = b + an / c;
    const cplx del = c * d;
    h *= del;
    if (std::abs(del - 1.0L) < 1e-20L) break;
  }
  const cplx e1 = h * std::exp(-w);
  cplx out = -e1;
  if (!real) out += cplx(0, z.imag() > 0 ? kPi : -kPi);
  return out;
}

cplx upper_gamma(long double a, cplx z) {
  const long double r = std::abs(z);
  if (r > 4 && z.real() > 0) {
    // Legendre continued fraction.
    const long double tiny = 1e-300L;
    cplx b = z + 1.0L - a, c = 1.0L / tiny, d = 1.0L / b, h = d;
    for (int i = 1; i < 10000; ++i) {
      const long double an = -static_cast<long double>(i) * (static_cast<long double>(i) - a);
      b += 2.0L;
      d = 1.0L / (an * d + b);
      c = b + an / c;
      const cplx del = c * d;
      h *= del;
      if (std::abs(del - 1.0L) < 1e-20L) break;
    }
    return std::exp(-z + a * std::log(z)) * h;
  }
  // gamma(a, z) = z^a sum (-z)^n / (n! (a + n))
  cplx sum = 0, term = 1;
  for (int n = 0; n < 1000; ++n) {
    if (n > 0) term *= -z / static_cast<long double>(n);
    const cplx add = term / (a + static_cast<long double>(n));
    sum += add;
    if (n > 2 && std::abs(add) < 1e-22L * std::abs(sum)) break;
  }
  const cplx za = std::exp(a * std::log(z));
  return std::tgamma(a) - za * sum;
}

cplx derivative(const std::function<cplx(long double)>& f, long double x, long double h, long double* err) {
  constexpr int kN = 12;
  constexpr long double kCon = 1.4L, kCon2 = kCon * kCon, kSafe = 2.0L;
  cplx a[kN][kN];
  long double best = std::numeric_limits<long double>::max();
  cplx ans = 0;
  long double hh = h;
  a[0][0] = (f(x + hh) - f(x - hh)) / (2.0L * hh);
  for (int i = 1; i < kN; ++i) {
    hh /= kCon;
    a[0][i] = (f(x + hh) - f(x - hh)) / (2.0L * hh);
    long double fac = kCon2;
    for (int j = 1; j <= i; ++j) {
      a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0L);
      fac *= kCon2;
      const long double e = std::max(std::abs(a[j][i] - a[j - 1][i]), std::abs(a[j][i] - a[j - 1][i - 1]));
      if (e <= best) {
        best = e;
        ans = a[j][i];
      }
    }
    if (std::abs(a[i][i] - a[i - 1][i - 1]) >= kSafe * best) break;
  }
  if (err) *err = best;
  return ans;
}

}  // namespace liouville::numeric
