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

#include "liouville/constants.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

#include "liouville/expr.hpp"
#include "liouville/poly.hpp"

namespace liouville {

namespace {

std::optional<UniPoly> sqrt_monic(const UniPoly& p) {
  UniPoly r{Elem(1)};
  for (const auto& [f, m] : poly::squarefree(p)) {
    if (m % 2) return std::nullopt;
    r = r * poly::pow(f, m / 2);
  }
  return r;
}

// Integer coefficients with the same roots.
std::vector<mpz_class> integer_coeffs(const UniPoly& p) {
  mpz_class d = 1;
  for (const auto& c : p.coeffs()) d = lcm(d, c.rational().den());
  std::vector<mpz_class> out;
  for (const auto& c : p.coeffs()) out.push_back((c.rational() * BigRat(d)).num());
  return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> ds{1};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t base = ds.size();
    mpz_class pk = 1;
    for (long i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
    }
  }
  return ds;
}

using cld = std::complex<long double>;

std::vector<cld> numeric_roots(const UniPoly& monic_p) {
  const int n = monic_p.degree();
  std::vector<cld> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = static_cast<long double>(monic_p.coeff(i).rational().to_double());
  std::vector<cld> z(static_cast<std::size_t>(n));
  const cld seed(0.4L, 0.9L);
  for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = std::pow(seed, i);
  auto eval = [&](cld x) {
    cld r = 0;
    for (int i = n; i >= 0; --i) r = r * x + c[static_cast<std::size_t>(i)];
    return r;
  };
  for (int it = 0; it < 2000; ++it) {
    long double delta = 0;
    for (int i = 0; i < n; ++i) {
      cld den = 1;
      for (int j = 0; j < n; ++j) {
        if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      }
      const cld step = eval(z[static_cast<std::size_t>(i)]) / den;
      z[static_cast<std::size_t>(i)] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-17L) break;
  }
  return z;
}

// Best rational approximation with bounded denominator.
std::optional<BigRat> rationalize(long double v) {
  const long double tol = 1e-11L * std::max(1.0L, std::fabs(v));
  long double x = v;
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int i = 0; i < 40; ++i) {
    const long double a = std::floor(x);
    const mpz_class ai(static_cast<double>(a));
    const mpz_class h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (std::fabs(static_cast<long double>(h1.get_d()) / static_cast<long double>(k1.get_d()) - v) < tol) {
      return BigRat(h1, k1);
    }
    if (k1 > 1000000) break;
    const long double frac = x - a;
    if (frac < 1e-18L) break;
    x = 1 / frac;
  }
  return std::nullopt;
}

Elem quadratic_root(const Elem& b, const Elem& s, int sign) { return (-b + Elem(sign) * s) / Elem(2); }

}  // namespace

bool has_rational_coeffs(const UniPoly& p) {
  for (const auto& c : p.coeffs()) {
    if (!c.is_rational()) return false;
  }
  return true;
}

std::optional<Elem> exact_sqrt(const Elem& c) {
  if (c.is_rational()) {
    if (c.rational().sign() < 0) return std::nullopt;
    auto r = exact_root(c.rational(), 2);
    if (!r) return std::nullopt;
    return Elem(*r);
  }
  const LevelPtr& l = c.level();
  if (l->is_algebraic()) return std::nullopt;
  const Elem lc = c.num().lead();
  auto slc = exact_sqrt(lc);
  if (!slc) return std::nullopt;
  auto n = sqrt_monic(c.num() * lc.inverse());
  auto d = sqrt_monic(c.den());
  if (!n || !d) return std::nullopt;
  return *slc * Elem::make(l, *n, *d);
}

std::vector<BigRat> rational_roots(const UniPoly& p) {
  std::vector<BigRat> out;
  if (p.degree() <= 0) return out;
  UniPoly q = poly::squarefree_part(p);
  if (q.coeff(0).is_zero()) {
    out.emplace_back(0);
    q = poly::exact_div(q, UniPoly{Elem(0), Elem(1)});
  }
  if (q.degree() <= 0) return out;
  const std::vector<mpz_class> z = integer_coeffs(q);
  const mpz_class a0 = abs(z.front()), an = abs(z.back());
  for (const auto& num : divisors(a0)) {
    for (const auto& den : divisors(an)) {
      for (int sg : {1, -1}) {
        const BigRat cand(sg * num, den);
        if (!cand.is_zero() && cand.den() == den && poly::eval(q, Elem(cand)).is_zero()) {
          if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
        }
      }
    }
  }
  return out;
}

std::vector<UniPoly> split_rational_linear(const UniPoly& p) {
  std::vector<UniPoly> out;
  if (p.degree() <= 0) return out;
  if (!has_rational_coeffs(p)) return {poly::monic(p)};
  UniPoly rest = poly::monic(p);
  for (const auto& r : rational_roots(p)) {
    UniPoly lin{Elem(-r), Elem(1)};
    out.push_back(lin);
    while (poly::divides(lin, rest)) rest = poly::exact_div(rest, lin);
  }
  if (rest.degree() > 0) out.push_back(rest);
  return out;
}

std::vector<Elem> constant_roots(const UniPoly& p0, const Tower& t) {
  std::vector<Elem> roots;
  if (p0.degree() <= 0) return roots;
  UniPoly p = poly::squarefree_part(p0);
  auto fail = [&]() {
    return Unsupported("residues_outside_constants",
                       "roots of " + to_text(Elem::make(t.var_level(), p)) + " (in x) need constants outside the supported forms");
  };
  auto quadratic = [&](const UniPoly& q) {
    const Elem b = q.coeff(1), c = q.coeff(0);
    const Elem disc = b * b - Elem(4) * c;
    Elem s;
    if (auto e = exact_sqrt(disc)) {
      s = *e;
    } else if (disc.is_rational()) {
      s = t.sqrt_rational(disc.rational());
    } else {
      throw fail();
    }
    roots.push_back(quadratic_root(b, s, 1));
    roots.push_back(quadratic_root(b, s, -1));
  };
  if (!has_rational_coeffs(p)) {
    if (p.degree() == 1) return {-p.coeff(0)};
    if (p.degree() == 2) {
      quadratic(p);
      return roots;
    }
    throw fail();
  }
  UniPoly rest = p;
  for (const auto& r : rational_roots(p)) {
    roots.emplace_back(r);
    rest = poly::exact_div(rest, UniPoly{Elem(-r), Elem(1)});
  }
  if (rest.degree() <= 0) return roots;
  if (rest.degree() == 1) {
    roots.push_back(-rest.coeff(0));
    return roots;
  }
  if (rest.degree() == 2) {
    quadratic(rest);
    return roots;
  }
  // Pair numeric roots into rational quadratic factors.
  std::vector<cld> z = numeric_roots(rest);
  std::vector<bool> used(z.size(), false);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (used[i]) continue;
    bool paired = false;
    for (std::size_t j = i + 1; j < z.size() && !paired; ++j) {
      if (used[j]) continue;
      const cld s = z[i] + z[j], pr = z[i] * z[j];
      if (std::fabs(s.imag()) > 1e-9L || std::fabs(pr.imag()) > 1e-9L) continue;
      auto qs = rationalize(s.real());
      auto qp = rationalize(pr.real());
      if (!qs || !qp) continue;
      const UniPoly quad{Elem(*qp), Elem(-*qs), Elem(1)};
      if (!poly::divides(quad, rest)) continue;
      quadratic(quad);
      used[i] = used[j] = true;
      paired = true;
    }
    if (!paired) throw fail();
  }
  return roots;
}

}  // namespace liouville
