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

// Random generators and independent oracles shared by the test suites.
// The oracles deliberately avoid liouville::poly and liouville::linalg so
// that they can check those modules.

#ifndef LIOUVILLE_TESTS_SUPPORT_HPP
#define LIOUVILLE_TESTS_SUPPORT_HPP

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "liouville/expr.hpp"
#include "liouville/field.hpp"
#include "liouville/lower.hpp"
#include "liouville/tower.hpp"

namespace support {

using liouville::BigRat;
using liouville::Elem;
using liouville::LevelKind;
using liouville::LevelPtr;
using liouville::Tower;
using liouville::UniPoly;

struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }
  BigRat rat(long n = 5, long d = 3) { return BigRat(range(-n, n), range(1, d)); }
  BigRat nonzero_rat(long n = 5, long d = 3) {
    for (;;) {
      BigRat q = rat(n, d);
      if (!q.is_zero()) return q;
    }
  }
};

// x-level polynomial from integer coefficients, lowest degree first.
inline UniPoly zp(std::initializer_list<long> c) {
  std::vector<Elem> v;
  for (long a : c) v.emplace_back(a);
  return UniPoly(v);
}

inline Elem xpoly(const Tower& t, std::initializer_list<long> c) { return Elem::make(t.var_level(), zp(c)); }

inline UniPoly random_poly(Rng& r, int deg, const std::function<Elem()>& coeff) {
  std::vector<Elem> c;
  for (int i = 0; i <= deg; ++i) c.push_back(coeff());
  return UniPoly(c);
}

// Random element at `level` (or below). Degrees shrink on the way down so
// nested towers stay small.
// With flat = true only the top level and x carry denominators.
inline Elem random_elem(Rng& r, const LevelPtr& level, int deg = 2, bool allow_den = true, bool flat = false) {
  if (!level || level->is_constant()) return Elem(r.rat(4, 3));
  const int d = std::max(0, deg);
  const auto below = [&] {
    const LevelPtr& b = level->below;
    const bool den = allow_den && level->kind != LevelKind::Var && (!flat || (b && b->kind == LevelKind::Var));
    return random_elem(r, b, deg - 1, den, flat);
  };
  UniPoly num = random_poly(r, static_cast<int>(r.range(0, d)), below);
  UniPoly den = UniPoly{Elem(1)};
  if (allow_den && r.range(0, 2) > 0) {
    const int dd = static_cast<int>(r.range(1, std::max(1, d)));
    den = random_poly(r, dd, below);
    if (den.is_zero()) den = UniPoly{Elem(1)};
  }
  return Elem::make(level, num, den);
}

// ---------------------------------------------------------------------------
// Dense polynomials over Q, lowest degree first.

using QPoly = std::vector<BigRat>;

inline QPoly q_trim(QPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

inline QPoly to_q(const UniPoly& p) {
  QPoly out;
  for (const Elem& c : p.coeffs()) out.push_back(c.rational());
  return out;
}

inline std::pair<QPoly, QPoly> q_divmod(QPoly a, const QPoly& b) {
  a = q_trim(a);
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigRat(0));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t s = a.size() - b.size();
    const BigRat f = a.back() / b.back();
    q[s] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= f * b[i];
    a = q_trim(a);
  }
  return {q_trim(q), a};
}

inline QPoly q_monic(QPoly p) {
  p = q_trim(p);
  if (p.empty()) return p;
  const BigRat l = p.back();
  for (auto& c : p) c /= l;
  return p;
}

inline QPoly q_gcd(QPoly a, QPoly b) {
  a = q_trim(a);
  b = q_trim(b);
  while (!b.empty()) {
    QPoly r = q_divmod(a, b).second;
    a = b;
    b = r;
  }
  return q_monic(a);
}

inline QPoly q_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, BigRat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return q_trim(out);
}

inline QPoly q_diff(const QPoly& p) {
  QPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * BigRat(static_cast<long>(i)));
  return q_trim(out);
}

inline BigRat q_eval(const QPoly& p, const BigRat& x) {
  BigRat v(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

// ---------------------------------------------------------------------------
// Linear algebra oracles.

// Determinant over the field of Elem by Gaussian elimination.
inline Elem det(std::vector<std::vector<Elem>> m) {
  const std::size_t n = m.size();
  Elem d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Elem(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      const Elem f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

inline Elem sylvester_resultant(const UniPoly& a, const UniPoly& b) {
  const int m = a.degree(), n = b.degree();
  const int size = m + n;
  if (size == 0) return Elem(1);
  std::vector<std::vector<Elem>> s(size, std::vector<Elem>(size, Elem(0)));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) s[r][r + i] = a.coeff(m - i);
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = b.coeff(n - i);
  }
  return det(s);
}

// A c = b over Q; one solution or nullopt when inconsistent.
inline std::optional<std::vector<BigRat>> q_solve(std::vector<std::vector<BigRat>> a, std::vector<BigRat> b) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const BigRat inv = a[r][c].inverse();
    for (auto& v : a[r]) v *= inv;
    b[r] *= inv;
    for (std::size_t o = 0; o < rows; ++o) {
      if (o == r || a[o][c].is_zero()) continue;
      const BigRat f = a[o][c];
      for (std::size_t k = 0; k < cols; ++k) a[o][k] -= f * a[r][k];
      b[o] -= f * b[r];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t o = r; o < rows; ++o) {
    if (!b[o].is_zero()) return std::nullopt;
  }
  std::vector<BigRat> x(cols, BigRat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return x;
}

// ---------------------------------------------------------------------------
// Evaluation of elements of Q(x) at rational points (nullopt at a pole).

inline std::optional<BigRat> at(const Elem& e, const BigRat& x) {
  if (e.is_rational()) return e.rational();
  if (e.level()->kind != LevelKind::Var) return std::nullopt;
  const BigRat d = q_eval(to_q(e.den()), x);
  if (d.is_zero()) return std::nullopt;
  return q_eval(to_q(e.num()), x) / d;
}

// Does y' + b*y = a have a solution y = N/den with deg N <= max_deg? b and a
// in Q(x). Decided by sampling the linear identity at many rational points.
inline bool rde_ansatz_solvable(const Elem& b, const Elem& a, const Tower& t, const UniPoly& den, int max_deg) {
  const int k = max_deg + 1;
  std::vector<Elem> images;
  for (int i = 0; i < k; ++i) {
    const Elem yi = Elem::make(t.var_level(), UniPoly::monomial(Elem(1), i), den);
    images.push_back(liouville::derive(yi) + b * yi);
  }
  std::vector<std::vector<BigRat>> rows;
  std::vector<BigRat> rhs;
  for (long s = 1; static_cast<int>(rows.size()) < 4 * k + 40; ++s) {
    const BigRat p = BigRat(s, 7) + BigRat(1, 3);
    auto av = at(a, p);
    if (!av) continue;
    std::vector<BigRat> row;
    bool pole = false;
    for (const Elem& im : images) {
      auto v = at(im, p);
      if (!v) {
        pole = true;
        break;
      }
      row.push_back(*v);
    }
    if (pole) continue;
    rows.push_back(row);
    rhs.push_back(*av);
  }
  return q_solve(rows, rhs).has_value();
}

// ---------------------------------------------------------------------------
// Numeric evaluation in double precision, written independently of
// liouville::numeric.

inline double value(const Elem& e, double x, const std::map<std::string, double>& syms = {}) {
  if (e.is_rational()) return e.rational().to_double();
  const LevelPtr& l = e.level();
  double g = 0;
  switch (l->kind) {
    case LevelKind::Symbol: g = syms.at(l->name); break;
    case LevelKind::LogPrime: g = std::log(l->q.to_double()); break;
    case LevelKind::ExpConst: g = std::exp(1.0 / static_cast<double>(l->k)); break;
    case LevelKind::Root: g = std::sqrt(l->q.to_double()); break;
    case LevelKind::Var: g = x; break;
    case LevelKind::Log: g = std::log(std::fabs(value(l->arg, x, syms))); break;
    case LevelKind::Exp: g = std::exp(value(l->arg, x, syms)); break;
  }
  const auto horner = [&](const UniPoly& p) {
    double v = 0;
    for (int i = p.degree(); i >= 0; --i) v = v * g + value(p.coeff(i), x, syms);
    return v;
  };
  return horner(e.num()) / horner(e.den());
}

// Richardson-extrapolated central difference.
inline double fd_derivative(const std::function<double(double)>& f, double x, double h = 1e-2) {
  const auto d = [&](double s) { return (f(x + s) - f(x - s)) / (2 * s); };
  const double d1 = d(h), d2 = d(h / 2), d3 = d(h / 4);
  const double r1 = (4 * d2 - d1) / 3, r2 = (4 * d3 - d2) / 3;
  return (16 * r2 - r1) / 15;
}

// ---------------------------------------------------------------------------
// Bounded witness search: is target = sum r_i*items[i] for r_i = p/q with
// |p|, q <= bound? Candidates are filtered numerically, then checked
// exactly.
inline bool witness_search(const std::vector<Elem>& items, const Elem& target, int bound) {
  std::vector<BigRat> values;
  for (long q = 1; q <= bound; ++q) {
    for (long p = -bound; p <= bound; ++p) {
      BigRat v(p, q);
      if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
    }
  }
  const std::vector<double> pts{0.37, 0.81, 1.29};
  std::vector<std::vector<double>> iv;
  std::vector<double> tv;
  for (double p : pts) {
    std::vector<double> row;
    for (const Elem& it : items) row.push_back(value(it, p));
    iv.push_back(row);
    tv.push_back(value(target, p));
  }
  std::vector<std::size_t> idx(items.size(), 0);
  for (;;) {
    bool close = true;
    for (std::size_t k = 0; k < pts.size() && close; ++k) {
      double s = 0;
      for (std::size_t i = 0; i < items.size(); ++i) s += values[idx[i]].to_double() * iv[k][i];
      close = std::fabs(s - tv[k]) < 1e-9 * (1 + std::fabs(tv[k]));
    }
    if (close) {
      Elem s(0);
      for (std::size_t i = 0; i < items.size(); ++i) s += Elem(values[idx[i]]) * items[i];
      if (s == target) return true;
    }
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == values.size()) idx[i++] = 0;
    if (i == idx.size()) return false;
  }
}

// Lowers text with the given tower expressions placed first.
inline liouville::Lowered lower_text(const std::string& text, const std::vector<std::string>& tower = {},
                                     const std::vector<std::string>& consts = {}) {
  liouville::LowerOptions lo;
  lo.constants = consts;
  const liouville::ParseOptions po{"x", consts};
  for (const auto& t : tower) lo.tower.push_back(liouville::parse(t, po));
  return liouville::lower(liouville::parse(text, po), lo);
}

}  // namespace support

#endif  // LIOUVILLE_TESTS_SUPPORT_HPP
