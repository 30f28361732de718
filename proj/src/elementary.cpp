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

#include "liouville/elementary.hpp"

#include <algorithm>

#include "liouville/constants.hpp"
#include "liouville/expr.hpp"
#include "liouville/linalg.hpp"
#include "liouville/poly.hpp"

namespace liouville {

HermiteResult hermite_reduce(const Elem& p, const LevelPtr& level) {
  if (p.depth() < level->depth) return {Elem(), p};
  auto [a, d] = as_fraction(p, level);
  Elem g;
  for (const auto& [v, i] : poly::squarefree(d)) {
    if (i < 2) continue;
    const UniPoly u = poly::exact_div(d, poly::pow(v, i));
    const UniPoly udv = u * derive_poly(v, level);
    for (int j = i - 1; j >= 1; --j) {
      auto [b, c] = poly::diophantine(udv, v, a * Elem(BigRat(-1, j)));
      g += Elem::make(level, b, poly::pow(v, j));
      a = c * Elem(-j) - u * derive_poly(b, level);
    }
    d = u * v;
  }
  return {g, Elem::make(level, a, d)};
}

LogPart residue_logpart(const Elem& h, const LevelPtr& level, const Tower& t) {
  LogPart out;
  if (h.is_zero()) return out;
  auto [a, d] = as_fraction(h, level);
  const UniPoly dd = derive_poly(d, level);
  const int n = d.degree();
  std::vector<Elem> zs, rs;
  for (int i = 0; i <= n; ++i) {
    zs.emplace_back(i);
    rs.push_back(poly::resultant(d, a - dd * Elem(i)));
  }
  UniPoly r = poly::interpolate(zs, rs);
  if (r.is_zero()) throw Unsupported("not_normal", "denominator shares a factor with its derivative");
  r = poly::monic(r);
  for (const auto& c : r.coeffs()) {
    if (!is_constant(c)) {
      throw Unsupported("nonconstant_residues", "Rothstein-Trager resultant has non-constant coefficients for " +
                                                    to_text(h));
    }
  }
  for (const Elem& c : constant_roots(r, t)) {
    const UniPoly v = poly::gcd(d, a - dd * c);
    if (v.degree() > 0) out.terms.push_back({c, Elem::make(level, v)});
  }
  return out;
}

namespace {

int valuation_degree(const Elem& e, const LevelPtr& level) {
  auto [n, d] = as_fraction(e, level);
  return n.degree() - d.degree();
}

UniPoly den_at(const Elem& e, const LevelPtr& level) { return as_fraction(e, level).second; }

// Parametric RDE with y in C(x).
std::optional<ParamSolution> param_rde_x(const Elem& b, const Elem& a, const std::vector<Elem>& hs, const Tower& t,
                                         std::string* why) {
  const LevelPtr x = t.var_level();
  bool rhs_zero = a.is_zero();
  for (const auto& h : hs) rhs_zero = rhs_zero && h.is_zero();
  if (rhs_zero) return ParamSolution{Elem(), std::vector<Elem>(hs.size())};

  std::vector<UniPoly> dens{den_at(a, x), den_at(b, x)};
  for (const auto& h : hs) dens.push_back(den_at(h, x));
  std::vector<UniPoly> factors;
  for (const auto& f : poly::coprime_base(dens)) {
    for (auto& g : split_rational_linear(f)) factors.push_back(std::move(g));
  }
  UniPoly dy{Elem(1)};
  for (const auto& f : factors) {
    int oa = poly::order(den_at(a, x), f);
    for (const auto& h : hs) oa = std::max(oa, poly::order(den_at(h, x), f));
    const int ob = b.is_zero() ? 0 : poly::order(den_at(b, x), f);
    int n = ob >= 2 ? std::max(oa - ob, 0) : std::max(oa - 1, 0);
    if (ob == 1) {
      // Cancellation when the residue of b at the roots of f is a positive integer.
      auto [bn, bd] = as_fraction(b, x);
      const UniPoly rest = poly::exact_div(bd, f);
      const UniPoly rho = poly::rem(bn * poly::inverse_mod(poly::rem(poly::diff(f) * rest, f), f), f);
      if (rho.degree() <= 0 && rho.coeff(0).is_rational()) {
        const BigRat& q = rho.coeff(0).rational();
        if (q.is_integer() && q.sign() > 0 && q < BigRat(64)) n = std::max(n, static_cast<int>(q.num().get_si()));
      }
    }
    if (n > 0) dy = dy * poly::pow(f, n);
  }
  int da = -1000000;
  if (!a.is_zero()) da = valuation_degree(a, x);
  for (const auto& h : hs) {
    if (!h.is_zero()) da = std::max(da, valuation_degree(h, x));
  }
  int d = da + 1;
  if (!b.is_zero()) {
    const int db = valuation_degree(b, x);
    d = std::max(d, da - db);
    if (db == -1) {
      auto [bn, bd] = as_fraction(b, x);
      const Elem lc = bn.lead() / bd.lead();
      if (lc.is_rational() && lc.rational().is_integer() && lc.rational().sign() < 0) {
        d = std::max(d, static_cast<int>((-lc.rational()).num().get_si()));
      }
    }
  }
  const int n = d + dy.degree();
  if (n > 120) {
    if (why) *why = "degree bound too large";
    return std::nullopt;
  }
  std::vector<Elem> basis, ys;
  for (int i = 0; i <= n; ++i) {
    const Elem yi = Elem::make(x, UniPoly::monomial(Elem(1), i), dy);
    ys.push_back(yi);
    basis.push_back(derive(yi) + b * yi);
  }
  for (const auto& h : hs) basis.push_back(h);
  auto sol = linalg::solve_combination(basis, a, t.constant_top());
  if (!sol) {
    if (why) {
      *why = "no solution with denominator " + to_text(Elem::make(x, dy)) +
             " and numerator degree <= " + std::to_string(std::max(n, 0));
    }
    return std::nullopt;
  }
  ParamSolution out;
  for (std::size_t i = 0; i < ys.size(); ++i) out.y += (*sol)[i] * ys[i];
  out.c.assign(sol->begin() + static_cast<std::ptrdiff_t>(ys.size()), sol->end());
  return out;
}

LevelPtr log_level_of(const Elem& e, const Tower& t) {
  if (e.depth() <= t.var_level()->depth) return nullptr;
  return e.level();
}

}  // namespace

std::optional<ParamSolution> param_rde(const Elem& b, const Elem& a, const std::vector<Elem>& hs, const Tower& t,
                                       std::string* why) {
  const LevelPtr lam = log_level_of(a, t);
  if (!lam) {
    if (b.depth() > t.var_level()->depth) {
      if (why) *why = "coefficient outside C(x)";
      return std::nullopt;
    }
    return param_rde_x(b, a, hs, t, why);
  }
  if (lam->kind != LevelKind::Log || b.depth() >= lam->depth) {
    if (why) *why = "unsupported field for the differential equation";
    return std::nullopt;
  }
  auto [num, den] = as_fraction(a, lam);
  if (den.degree() > 0) {
    if (why) *why = "pole in " + lam->name + " cannot be produced by y' + b*y";
    return std::nullopt;
  }
  const int m = num.degree();
  std::vector<Elem> y(static_cast<std::size_t>(m) + 2);
  const Elem& rate = lam->arg_rate;
  for (int i = m; i >= 0; --i) {
    const Elem rhs = num.coeff(i) - Elem(i + 1) * y[static_cast<std::size_t>(i) + 1] * rate;
    if (i > 0) {
      auto s = param_rde_x(b, rhs, {}, t, why);
      if (!s) return std::nullopt;
      y[static_cast<std::size_t>(i)] = s->y;
    } else {
      auto s = param_rde_x(b, rhs, hs, t, why);
      if (!s) return std::nullopt;
      Elem total = s->y;
      const Elem l = Elem::gen(lam);
      for (int k = 1; k <= m; ++k) total += y[static_cast<std::size_t>(k)] * l.pow(k);
      return ParamSolution{total, s->c};
    }
  }
  return std::nullopt;
}

RdeOutcome rde_solve(const Elem& b, const Elem& a, const Tower& t) {
  RdeOutcome out;
  auto s = param_rde(b, a, {}, t, &out.diagnostic);
  if (s) out.y = s->y;
  return out;
}

BaseIntegral integrate_rational(const Elem& f, const Tower& t) {
  BaseIntegral out;
  const LevelPtr x = t.var_level();
  if (f.depth() < x->depth) {
    out.elementary = f * t.x();
    return out;
  }
  auto [n, d] = as_fraction(f, x);
  const poly::DivMod qr = poly::divmod(n, d);
  for (int i = 0; i <= qr.quot.degree(); ++i) {
    out.elementary += qr.quot.coeff(i) * Elem(BigRat(1, i + 1)) * t.x().pow(i + 1);
  }
  if (qr.rem.is_zero()) return out;
  const HermiteResult h = hermite_reduce(Elem::make(x, qr.rem, d), x);
  out.elementary += h.integrated;
  out.logs = residue_logpart(h.remainder, x, t).terms;
  return out;
}

namespace {

// Integral of a polynomial in lambda = log(u) with coefficients in C(x).
BaseIntegral integrate_log_poly(const UniPoly& p, const LevelPtr& lam, const Tower& t) {
  BaseIntegral out;
  const Elem l = Elem::gen(lam);
  const Elem& rate = lam->arg_rate;
  const int m = p.degree();
  Elem prev;  // rational part of the coefficient of lambda^(i+1)
  for (int i = m; i >= 0; --i) {
    BaseIntegral step = integrate_rational(p.coeff(i) - Elem(i + 1) * prev * rate, t);
    if (i == 0) {
      out.elementary += step.elementary;
      out.logs = std::move(step.logs);
      break;
    }
    Elem logsum;
    for (const auto& lt : step.logs) logsum += lt.c * derive(lt.arg) / lt.arg;
    auto coef = linalg::solve_combination({rate}, logsum, t.constant_top());
    if (!coef) {
      BaseIntegral fail;
      fail.residual = Elem::make(lam, p);
      fail.note = "coefficient of " + lam->name + "^" + std::to_string(i) + " has a logarithmic integral other than " +
                  lam->name;
      return fail;
    }
    out.elementary += (*coef)[0] / Elem(i + 1) * l.pow(i + 1) + step.elementary * l.pow(i);
    prev = step.elementary;
  }
  return out;
}

}  // namespace

BaseIntegral integrate_base(const Elem& f, const Tower& t) {
  const LevelPtr lam = log_level_of(f, t);
  if (!lam) return integrate_rational(f, t);
  if (lam->kind != LevelKind::Log || lam->below != t.var_level()) {
    throw Unsupported("tower_shape", "integrand lies above " + lam->name);
  }
  auto [n, d] = as_fraction(f, lam);
  const poly::DivMod qr = poly::divmod(n, d);
  BaseIntegral out = integrate_log_poly(qr.quot, lam, t);
  if (qr.rem.is_zero()) return out;
  const HermiteResult h = hermite_reduce(Elem::make(lam, qr.rem, d), lam);
  out.elementary += h.integrated;
  if (h.remainder.is_zero()) return out;
  try {
    for (auto& lt : residue_logpart(h.remainder, lam, t).terms) out.logs.push_back(std::move(lt));
  } catch (const Unsupported& u) {
    out.residual += h.remainder;
    if (!out.note.empty()) out.note += "; ";
    out.note += u.what();
  }
  return out;
}

}  // namespace liouville
