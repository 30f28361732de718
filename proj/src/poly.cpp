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

#include "liouville/poly.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace liouville::poly {

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  const int db = b.degree();
  const Elem inv = b.lead().inverse();
  std::vector<Elem> r = a.coeffs();
  std::vector<Elem> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    const Elem& top = r[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    const Elem c = top * inv;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      if (b.coeff(j).is_zero()) continue;
      r[static_cast<std::size_t>(i - db + j)] -= c * b.coeff(j);
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly rem(const UniPoly& a, const UniPoly& b) { return divmod(a, b).rem; }
UniPoly quo(const UniPoly& a, const UniPoly& b) { return divmod(a, b).quot; }

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  DivMod d = divmod(a, b);
  if (!d.rem.is_zero()) throw std::logic_error("exact_div: inexact polynomial division");
  return d.quot;
}

bool divides(const UniPoly& b, const UniPoly& a) { return rem(a, b).is_zero(); }

UniPoly monic(const UniPoly& p) {
  if (p.is_zero() || p.is_monic()) return p;
  return p * p.lead().inverse();
}

namespace {

// Coprimality screen. Every transcendental generator (and x) is sent to a fixed
// residue mod a 61-bit prime; that is a ring map wherever the denominators
// survive. If the images keep their degrees and have a nonzero resultant, the
// resultant upstairs is nonzero too, so the gcd is 1.
using u64 = std::uint64_t;
using u128 = unsigned __int128;
constexpr u64 kP = (u64{1} << 61) - 1;

u64 mulp(u64 a, u64 b) { return static_cast<u64>((static_cast<u128>(a) * b) % kP); }
u64 addp(u64 a, u64 b) { return (a + b) % kP; }
u64 subp(u64 a, u64 b) { return (a + kP - b) % kP; }
u64 powp(u64 a, u64 e) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulp(a, a))
    if (e & 1) r = mulp(r, a);
  return r;
}
u64 invp(u64 a) { return powp(a, kP - 2); }

u64 gen_value(int depth) {
  u64 z = 0x9e3779b97f4a7c15ULL * static_cast<u64>(depth + 7);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return (z ^ (z >> 31)) % kP;
}

std::optional<u64> mod_rat(const BigRat& q) {
  const mpz_class m(static_cast<unsigned long>(kP));
  const mpz_class n = q.num() % m;
  const mpz_class d = q.den() % m;
  if (d == 0) return std::nullopt;
  const u64 nn = static_cast<u64>(mpz_class(n < 0 ? n + m : n).get_ui());
  return mulp(nn, invp(static_cast<u64>(d.get_ui())));
}

std::optional<u64> mod_elem(const Elem& e);

std::optional<u64> mod_poly(const UniPoly& p, u64 v) {
  u64 acc = 0;
  for (int i = p.degree(); i >= 0; --i) {
    auto c = mod_elem(p.coeff(i));
    if (!c) return std::nullopt;
    acc = addp(mulp(acc, v), *c);
  }
  return acc;
}

std::optional<u64> mod_elem(const Elem& e) {
  if (e.is_rational()) return mod_rat(e.rational());
  if (e.level()->is_algebraic()) return std::nullopt;
  const u64 v = gen_value(e.level()->depth);
  auto n = mod_poly(e.num(), v);
  auto d = mod_poly(e.den(), v);
  if (!n || !d || *d == 0) return std::nullopt;
  return mulp(*n, invp(*d));
}

std::optional<std::vector<u64>> mod_image(const UniPoly& p) {
  std::vector<u64> out;
  for (const Elem& c : p.coeffs()) {
    auto m = mod_elem(c);
    if (!m) return std::nullopt;
    out.push_back(*m);
  }
  if (out.empty() || out.back() == 0) return std::nullopt;
  return out;
}

bool surely_coprime(const UniPoly& a, const UniPoly& b) {
  auto fa = mod_image(a);
  if (!fa) return false;
  auto fb = mod_image(b);
  if (!fb) return false;
  std::vector<u64> x = std::move(*fa), y = std::move(*fb);
  if (x.size() < y.size()) std::swap(x, y);
  while (y.size() > 1) {
    const u64 inv = invp(y.back());
    while (x.size() >= y.size()) {
      const u64 c = mulp(x.back(), inv);
      const std::size_t off = x.size() - y.size();
      for (std::size_t j = 0; j < y.size(); ++j) x[off + j] = subp(x[off + j], mulp(c, y[j]));
      x.pop_back();
      while (!x.empty() && x.back() == 0) x.pop_back();
    }
    if (x.empty()) return false;
    std::swap(x, y);
  }
  return true;
}


// Deepest level holding a coefficient of a or b; null when all are rational.
LevelPtr coeff_level(const UniPoly& a, const UniPoly& b) {
  LevelPtr out;
  for (const UniPoly* p : {&a, &b})
    for (const Elem& c : p->coeffs())
      if (!c.is_rational() && (!out || c.depth() > out->depth)) out = c.level();
  return out;
}

UniPoly euclid_gcd(UniPoly a, UniPoly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    UniPoly r = monic(rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Scales p by a nonzero element of the coefficient field so that every
// coefficient is a polynomial over `base` (an integer when base is null) and
// the coefficients share no common factor.
UniPoly primitive(const UniPoly& p, const LevelPtr& base) {
  if (p.is_zero()) return p;
  if (!base) {
    mpz_class l = 1, g = 0;
    for (const Elem& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().den().get_mpz_t());
    std::vector<Elem> out;
    for (const Elem& c : p.coeffs()) {
      const mpz_class n = c.rational().num() * (l / c.rational().den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
      out.emplace_back(BigRat(n));
    }
    for (Elem& c : out) c = Elem(BigRat(mpz_class(c.rational().num() / g)));
    return UniPoly(std::move(out));
  }
  // Coefficients are reduced fractions n_i/d_i, so the content is
  // gcd(n_i)/lcm(d_i).
  std::vector<std::pair<UniPoly, UniPoly>> parts;
  UniPoly den{Elem(1)}, g;
  for (const Elem& c : p.coeffs()) {
    parts.push_back(as_fraction(c, base));
    const auto& [n, d] = parts.back();
    if (d.degree() > 0) den = den * exact_div(d, gcd(den, d));
    if (!n.is_zero() && (g.is_zero() || g.degree() > 0)) g = gcd(g, n);
  }
  std::vector<Elem> out;
  for (const auto& [n, d] : parts) {
    if (n.is_zero()) {
      out.emplace_back();
      continue;
    }
    UniPoly m = g.degree() > 0 ? exact_div(n, g) : n;
    m = d.degree() > 0 ? m * exact_div(den, d) : m * (den * d.lead().inverse());
    out.push_back(Elem::make_reduced(base, std::move(m), UniPoly{Elem(1)}));
  }
  return UniPoly(std::move(out));
}

// Exact quotient in the polynomial ring under `base`; q must divide p.
Elem ring_quot(const Elem& p, const Elem& q, const LevelPtr& base) {
  if (q.is_rational() || !base || p.is_zero()) return p / q;
  const auto [pn, pd] = as_fraction(p, base);
  const auto [qn, qd] = as_fraction(q, base);
  if (pd.degree() > 0 || qd.degree() > 0) return p / q;
  return Elem::make_reduced(base, exact_div(pn, qn) * (qd.lead() * pd.lead().inverse()).inverse(), UniPoly{Elem(1)});
}

// lc(b)^(deg a - deg b + 1) * a mod b.
UniPoly pseudo_rem(UniPoly a, const UniPoly& b) {
  const Elem& lc = b.lead();
  int steps = a.degree() - b.degree() + 1;
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const int k = a.degree() - b.degree();
    const Elem top = a.lead();
    a = a * lc - b.shifted(k) * top;
    --steps;
  }
  for (; steps > 0 && !a.is_zero(); --steps) a = a * lc;
  return a;
}

}  // namespace

UniPoly gcd(const UniPoly& a0, const UniPoly& b0) {
  if (a0.is_zero()) return monic(b0);
  if (b0.is_zero()) return monic(a0);
  if (a0.degree() == 0 || b0.degree() == 0) return UniPoly{Elem(1)};
  if (surely_coprime(a0, b0)) return UniPoly{Elem(1)};
  const LevelPtr base = coeff_level(a0, b0);
  if (base && base->is_algebraic()) return euclid_gcd(a0, b0);
  // Subresultant remainder sequence over the polynomial ring under `base`.
  UniPoly a = primitive(a0, base), b = primitive(b0, base);
  if (a.degree() < b.degree()) std::swap(a, b);
  Elem g(1), h(1);
  while (true) {
    const int delta = a.degree() - b.degree();
    UniPoly r = pseudo_rem(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) return UniPoly{Elem(1)};
    const Elem div = g * h.pow(delta);
    std::vector<Elem> c;
    for (const Elem& e : r.coeffs()) c.push_back(e.is_zero() ? e : ring_quot(e, div, base));
    a = std::move(b);
    b = UniPoly(std::move(c));
    g = a.lead();
    h = delta == 0 ? h : ring_quot(g.pow(delta), h.pow(delta - 1), base);
  }
  return monic(primitive(b, base));
}

UniPoly lcm(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return monic(exact_div(a * b, gcd(a, b)));
}

ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0{Elem(1)}, s1;
  UniPoly t0, t1{Elem(1)};
  while (!r1.is_zero()) {
    DivMod d = divmod(r0, r1);
    UniPoly s2 = s0 - d.quot * s1;
    UniPoly t2 = t0 - d.quot * t1;
    r0 = std::move(r1);
    r1 = std::move(d.rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {s0, t0, r0};
  const Elem inv = r0.lead().inverse();
  return {s0 * inv, t0 * inv, r0 * inv};
}

std::pair<UniPoly, UniPoly> diophantine(const UniPoly& a, const UniPoly& b, const UniPoly& c) {
  ExtGcd e = ext_gcd(a, b);
  DivMod cg = divmod(c, e.g);
  if (!cg.rem.is_zero()) throw std::logic_error("diophantine: gcd does not divide the right-hand side");
  UniPoly s = e.s * cg.quot;
  UniPoly t = e.t * cg.quot;
  if (!b.is_zero() && s.degree() >= b.degree()) {
    DivMod d = divmod(s, b);
    s = d.rem;
    t += d.quot * a;
  }
  return {s, t};
}

UniPoly inverse_mod(const UniPoly& a, const UniPoly& m) {
  ExtGcd e = ext_gcd(a, m);
  if (e.g.degree() != 0) throw std::domain_error("inverse_mod: not invertible");
  return rem(e.s, m);
}

UniPoly diff(const UniPoly& p) {
  if (p.degree() <= 0) return {};
  std::vector<Elem> r(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) r[static_cast<std::size_t>(i - 1)] = Elem(i) * p.coeff(i);
  return UniPoly(std::move(r));
}

UniPoly pow(const UniPoly& p, int e) {
  if (e < 0) throw std::domain_error("negative polynomial power");
  UniPoly result{Elem(1)};
  UniPoly base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Elem eval(const UniPoly& p, const Elem& at) {
  Elem r;
  for (int i = p.degree(); i >= 0; --i) r = r * at + p.coeff(i);
  return r;
}

UniPoly compose(const UniPoly& p, const UniPoly& q) {
  UniPoly r;
  for (int i = p.degree(); i >= 0; --i) r = r * q + UniPoly::constant(p.coeff(i));
  return r;
}

int order(UniPoly p, const UniPoly& factor) {
  if (p.is_zero() || factor.degree() <= 0) return 0;
  int n = 0;
  while (true) {
    DivMod d = divmod(p, factor);
    if (!d.rem.is_zero()) return n;
    p = std::move(d.quot);
    ++n;
  }
}

std::vector<std::pair<UniPoly, int>> squarefree(const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  if (p.is_zero()) throw std::invalid_argument("squarefree: zero polynomial");
  if (p.degree() == 0) return out;
  const UniPoly a = monic(p);
  const UniPoly b = diff(a);
  const UniPoly c = gcd(a, b);
  UniPoly w = exact_div(a, c);
  UniPoly y = exact_div(b, c);
  UniPoly z = y - diff(w);
  for (int i = 1; w.degree() > 0; ++i) {
    UniPoly g = gcd(w, z);
    w = exact_div(w, g);
    y = exact_div(z, g);
    z = y - diff(w);
    if (g.degree() > 0) out.emplace_back(std::move(g), i);
  }
  return out;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return UniPoly{Elem(1)};
  return monic(exact_div(p, gcd(p, diff(p))));
}

Elem resultant(const UniPoly& a0, const UniPoly& b0) {
  if (a0.is_zero() || b0.is_zero()) return Elem();
  UniPoly a = a0, b = b0;
  Elem acc(1);
  while (true) {
    const int da = a.degree(), db = b.degree();
    if (db == 0) return acc * b.lead().pow(da);
    if (da == 0) return acc * a.lead().pow(db);
    if (da < db) {
      if ((da * db) % 2 != 0) acc = -acc;
      std::swap(a, b);
      continue;
    }
    UniPoly r = rem(a, b);
    if (r.is_zero()) return Elem();
    // res(a, b) = (-1)^(da db) lc(b)^(da - dr) res(b, r)
    if ((da * db) % 2 != 0) acc = -acc;
    acc *= b.lead().pow(da - r.degree());
    a = std::move(b);
    b = std::move(r);
  }
}

std::vector<PartialFraction> partial_fractions(const UniPoly& num, const UniPoly& den,
                                               const std::vector<std::pair<UniPoly, int>>& factors) {
  std::vector<PartialFraction> out;
  if (den.is_zero() || (!num.is_zero() && num.degree() >= den.degree())) {
    throw std::invalid_argument("partial_fractions: input is not proper");
  }
  UniPoly prod{Elem(1)};
  for (const auto& [f, e] : factors) prod = prod * pow(f, e);
  if (!(monic(prod) == monic(den))) throw std::invalid_argument("partial_fractions: factors do not multiply to den");
  const DivMod nd{UniPoly{}, num};
  if (nd.rem.is_zero()) return out;
  for (const auto& [f, e] : factors) {
    const UniPoly pe = pow(f, e);
    const UniPoly rest = exact_div(den, pe);
    UniPoly a = rem(nd.rem * inverse_mod(rem(rest, pe), pe), pe);
    // Expand a in base f: a = sum d_k f^k, giving d_k / f^(e-k).
    for (int k = 0; k < e && !a.is_zero(); ++k) {
      DivMod q = divmod(a, f);
      if (!q.rem.is_zero()) out.push_back({q.rem, f, e - k});
      a = std::move(q.quot);
    }
  }
  return out;
}

std::vector<UniPoly> coprime_base(const std::vector<UniPoly>& polys) {
  std::vector<UniPoly> s;
  auto add = [&s](const UniPoly& p) {
    if (p.degree() <= 0) return;
    UniPoly m = monic(p);
    for (const auto& q : s) {
      if (q == m) return;
    }
    s.push_back(std::move(m));
  };
  for (const auto& p : polys) {
    if (p.degree() <= 0) continue;
    for (const auto& [f, m] : squarefree(p)) add(f);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < s.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < s.size() && !changed; ++j) {
        UniPoly g = gcd(s[i], s[j]);
        if (g.degree() <= 0) continue;
        UniPoly a = exact_div(s[i], g), b = exact_div(s[j], g);
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(j));
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
        add(g);
        add(a);
        add(b);
        changed = true;
      }
    }
  }
  return s;
}

UniPoly interpolate(const std::vector<Elem>& xs, const std::vector<Elem>& ys) {
  const std::size_t n = xs.size();
  std::vector<Elem> dd = ys;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  }
  UniPoly r;
  for (std::size_t i = n; i-- > 0;) {
    r = r * UniPoly{-xs[i], Elem(1)} + UniPoly::constant(dd[i]);
  }
  return r;
}

}  // namespace liouville::poly
