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

#include "liouville/decompose.hpp"

#include <stdexcept>

#include "liouville/poly.hpp"
#include "liouville/tower.hpp"

namespace liouville {

namespace {

// Number of factors t in p (p != 0).
int t_order(const UniPoly& p) {
  int k = 0;
  while (p.coeff(k).is_zero()) ++k;
  return k;
}

UniPoly drop_low(const UniPoly& p, int k) {
  return UniPoly(std::vector<Elem>(p.coeffs().begin() + k, p.coeffs().end()));
}

}  // namespace

LaurentSplit decomp_laurent(const Elem& f, const LevelPtr& level) {
  LaurentSplit out;
  if (f.is_zero()) return out;
  if (f.depth() < level->depth) {
    out.laurent[0] = f;
    return out;
  }
  auto [num, den] = as_fraction(f, level);
  const int k = t_order(den);
  const UniPoly dt = drop_low(den, k);
  const poly::DivMod qr = poly::divmod(num, den);
  for (int i = 0; i <= qr.quot.degree(); ++i) {
    if (!qr.quot.coeff(i).is_zero()) out.laurent[i] = qr.quot.coeff(i);
  }
  UniPoly c = qr.rem;
  if (k > 0 && !qr.rem.is_zero()) {
    // rem = b * dt + c * t^k with deg b < k
    auto [b, cc] = poly::diophantine(dt, UniPoly::monomial(Elem(1), k), qr.rem);
    for (int i = 0; i <= b.degree(); ++i) {
      if (b.coeff(i).is_zero()) continue;
      Elem& slot = out.laurent[i - k];
      slot += b.coeff(i);
    }
    c = cc;
  }
  out.proper = Elem::make(level, c, dt);
  for (auto it = out.laurent.begin(); it != out.laurent.end();) {
    it = it->second.is_zero() ? out.laurent.erase(it) : std::next(it);
  }
  return out;
}

namespace {

struct Parts {
  Elem lead;      // leading coefficient of the numerator (below the level)
  int shift = 0;  // power of t: order(num) - order(den)
  UniPoly num;    // monic, t does not divide (exp case)
  UniPoly den;
};

Parts split_parts(const Elem& v, const LevelPtr& level, bool strip_t) {
  auto [n, d] = as_fraction(v, level);
  Parts p;
  p.lead = n.lead();
  n = n * p.lead.inverse();
  if (strip_t) {
    const int kn = t_order(n), kd = t_order(d);
    p.shift = kn - kd;
    n = drop_low(n, kn);
    d = drop_low(d, kd);
  }
  p.num = n;
  p.den = d;
  return p;
}

// s'/s - l*eta' for monic s of degree l with s(0) != 0; proper in t.
Elem reduced_logderiv(const UniPoly& s, const LevelPtr& level) {
  if (s.degree() <= 0) return Elem();
  UniPoly top = derive_poly(s, level);
  if (level->kind == LevelKind::Exp) top -= s * (Elem(s.degree()) * level->arg_rate);
  return Elem::make(level, top, s);
}

LogDerivReduction reduce(const std::vector<LogDerivTerm>& terms, const LevelPtr& level, bool exp_case) {
  LogDerivReduction out;
  for (const auto& [c, v] : terms) {
    if (v.is_zero()) throw std::domain_error("logarithmic derivative of zero");
    if (v.depth() < level->depth) {
      if (!is_constant(v)) out.terms.push_back({c, v});
      continue;
    }
    const Parts p = split_parts(v, level, exp_case);
    if (exp_case) out.a += c * Elem(p.shift + p.num.degree() - p.den.degree());
    if (!is_constant(p.lead)) out.terms.push_back({c, p.lead});
    out.proper += c * (reduced_logderiv(p.num, level) - reduced_logderiv(p.den, level));
  }
  return out;
}

}  // namespace

LogDerivReduction logderiv_reduce_exp(const std::vector<LogDerivTerm>& terms, const LevelPtr& level) {
  if (level->kind != LevelKind::Exp) throw std::logic_error("logderiv_reduce_exp needs an exponential level");
  return reduce(terms, level, true);
}

LogDerivReduction logderiv_reduce_prim(const std::vector<LogDerivTerm>& terms, const LevelPtr& level) {
  if (level->kind != LevelKind::Log) throw std::logic_error("logderiv_reduce_prim needs a logarithmic level");
  return reduce(terms, level, false);
}

}  // namespace liouville
