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

#include "liouville/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "liouville/constants.hpp"
#include "liouville/decompose.hpp"
#include "liouville/linalg.hpp"
#include "liouville/numeric.hpp"
#include "liouville/poly.hpp"

namespace liouville {

const char* status_name(Status s) {
  switch (s) {
    case Status::Integrated: return "integrated";
    case Status::NoGammaFormFound: return "no_gamma_form_found";
    case Status::Unsupported: return "unsupported";
  }
  return "unsupported";
}

Answer Answer::unsupported(const std::string& reason, const std::string& detail, const Elem& residual) {
  Answer a;
  a.status = Status::Unsupported;
  a.reason = reason;
  a.residual = residual;
  a.diagnostics.push_back(reason + ": " + detail);
  return a;
}

void Answer::add(const Answer& other) {
  elementary += other.elementary;
  for (const auto& l : other.logs) {
    bool merged = false;
    for (auto& mine : logs) {
      if (mine.arg == l.arg) {
        mine.c += l.c;
        merged = true;
        break;
      }
    }
    if (!merged) logs.push_back(l);
  }
  std::erase_if(logs, [](const LogTerm& l) { return l.c.is_zero(); });
  specials.insert(specials.end(), other.specials.begin(), other.specials.end());
  residual += other.residual;
  if (static_cast<int>(other.status) > static_cast<int>(status)) status = other.status;
  if (reason.empty()) reason = other.reason;
  diagnostics.insert(diagnostics.end(), other.diagnostics.begin(), other.diagnostics.end());
}

F1F2 split_f1_f2(const Elem& f, const LevelPtr& theta) {
  F1F2 out;
  if (theta && theta->kind == LevelKind::Exp) {
    if (f.is_rational() || f.depth() < theta->depth) {
      if (!f.is_zero()) out.f2[0] = f;
      return out;
    }
    LaurentSplit ls = decomp_laurent(f, theta);
    out.f1 = ls.proper;
    for (auto& [j, a] : ls.laurent) {
      if (!a.is_zero()) out.f2[j] = a;
    }
    return out;
  }
  // No exponential on top: split off the polynomial part in the top level.
  if (f.is_rational()) {
    if (!f.is_zero()) out.f2[0] = f;
    return out;
  }
  const LevelPtr& l = f.level();
  const poly::DivMod qr = poly::divmod(f.num(), f.den());
  out.f1 = Elem::make(l, qr.rem, f.den());
  const Elem p = Elem::make(l, qr.quot);
  if (!p.is_zero()) out.f2[0] = p;
  return out;
}

std::vector<std::pair<int, Elem>> split_powers(const std::map<int, Elem>& f2) {
  std::vector<std::pair<int, Elem>> out;
  for (auto it = f2.rbegin(); it != f2.rend(); ++it) {
    if (!it->second.is_zero()) out.emplace_back(it->first, it->second);
  }
  return out;
}

std::vector<std::pair<int, Elem>> split_powers(const Elem& f2, const LevelPtr& theta) {
  return split_powers(split_f1_f2(f2, theta).f2);
}

namespace {

bool below_or_at(const Elem& e, const LevelPtr& l) { return e.is_rational() || e.depth() <= l->depth; }

Elem exp_rat(const Elem& gamma, const Tower& t) {
  if (gamma.is_zero()) return Elem(1);
  return t.exp_rational(gamma.rational());
}

bool power_available(const Elem& kappa, long k) {
  if (!kappa.is_rational()) return false;
  return exact_root(kappa.rational(), static_cast<unsigned>(k)).has_value() || k == 2;
}

// kappa^(m/k) for rational kappa; k = 2 may adjoin a square root.
Elem constant_power(const Elem& kappa, long m, long k, const Tower& t) {
  if (auto r = exact_root(kappa.rational(), static_cast<unsigned>(k))) return Elem(*r).pow(m);
  return t.sqrt_rational(kappa.rational()).pow(m);
}

numeric::SymbolValues probe_symbols(const Tower& t) {
  numeric::SymbolValues v;
  for (const auto& s : t.constants().symbols) v[s] = 1.0L / 3;
  return v;
}

// w is some branch of arg^(m/k); divides it by the root of unity zeta that
// makes it principal at a reference point and returns zeta.
Elem principal_branch(Elem& w, const Elem& arg, long m, long k, const Tower& t) {
  using numeric::cplx;
  for (long double x0 : {1.37L, 0.71L, 2.03L}) {
    cplx wv, av;
    try {
      numeric::Evaluator ev(x0, probe_symbols(t));
      wv = ev(w);
      av = ev(arg);
    } catch (const std::domain_error&) {
      continue;
    }
    if (av == cplx(0) || wv == cplx(0)) continue;
    const cplx p = std::exp(static_cast<long double>(m) / k * std::log(av));
    const cplx z = wv / p;
    const auto near = [&](cplx target) { return std::abs(z - target) < 1e-8L; };
    if (near(1)) return Elem(1);
    if (near(-1)) {
      w = -w;
      return Elem(-1);
    }
    if (near(cplx(0, 1)) || near(cplx(0, -1))) {
      Elem i = t.sqrt_rational(BigRat(-1));
      Elem zeta = near(cplx(0, 1)) ? i : -i;
      w = w / zeta;
      return zeta;
    }
    throw Unsupported("branch", "radical " + to_text(w) + " is not a principal root up to a fourth root of unity");
  }
  throw Unsupported("branch", "no reference point for the radical " + to_text(w));
}

// c*t'*w*exp(-t) = derivative of -c*Gamma(1 + m/k, t); exp_neg_t is e^(-t).
SpecialTerm gamma_rational_term(const Elem& coef, const Elem& tt, Elem w, long m, long k, const Elem& exp_neg_t,
                                const Tower& t) {
  const Elem zeta = principal_branch(w, tt, m, k, t);
  SpecialTerm st;
  st.kind = SpecialKind::GammaRational;
  st.c = -coef * zeta;
  st.arg = tt;
  st.radical = w;
  st.exp_part = w * exp_neg_t;
  st.alpha = Elem(BigRat(k + m, k));
  st.k = k;
  st.m = m;
  st.in_range = -k < m && m < 0;
  return st;
}

// g = s*lambda + B with lambda = log(w) directly above x and B + w = gamma
// a rational constant, so that e^g = e^gamma * w^s * e^(-w).
struct LogForm {
  Elem s;
  Elem w;
  Elem gamma;
  Elem lambda;
};

std::optional<LogForm> log_form(const Elem& g, const Tower& t) {
  if (g.is_rational()) return std::nullopt;
  const LevelPtr& lam = g.level();
  if (lam->kind != LevelKind::Log || lam->below != t.var_level()) return std::nullopt;
  auto [n, d] = as_fraction(g, lam);
  if (d.degree() != 0 || n.degree() != 1) return std::nullopt;
  LogForm lf;
  lf.s = n.coeff(1);
  if (!is_constant(lf.s)) return std::nullopt;
  lf.w = lam->arg;
  lf.gamma = n.coeff(0) + lf.w;
  if (!lf.gamma.is_rational()) return std::nullopt;
  lf.lambda = Elem::gen(lam);
  return lf;
}

// r = c*w' against e^g in log form.
SpecialTerm log_form_term(const LogForm& lf, const Elem& c, const Elem& expg, const Tower& t) {
  SpecialTerm st;
  st.c = -c * exp_rat(lf.gamma, t);
  st.arg = lf.w;
  st.exp_part = expg * exp_rat(-lf.gamma, t);
  st.alpha = lf.s + Elem(1);
  st.log_arg = lf.lambda;
  if (lf.s.is_rational()) {
    st.kind = SpecialKind::GammaRational;
    st.k = lf.s.rational().den().get_si();
    st.m = lf.s.rational().num().get_si();
    st.in_range = -st.k < st.m && st.m < 0;
  } else {
    st.kind = SpecialKind::GammaIrrational;
  }
  return st;
}

SpecialTerm ei_term(const Elem& c, const Elem& g, const Elem& gamma, const Elem& expg, const Tower& t) {
  SpecialTerm st;
  st.kind = SpecialKind::Ei;
  st.c = c * exp_rat(-gamma, t);
  st.arg = g + gamma;
  st.exp_part = expg * exp_rat(gamma, t);
  return st;
}

// Monic factors of p split as far as rational linear factors go, with
// their multiplicities.
std::vector<std::pair<UniPoly, int>> split_factors(const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  if (p.is_constant()) return out;
  for (auto& [f, e] : poly::squarefree(p)) {
    if (!has_rational_coeffs(f)) {
      out.emplace_back(f, e);
      continue;
    }
    for (auto& piece : split_rational_linear(f)) out.emplace_back(piece, e);
  }
  return out;
}

struct Candidate {
  Elem h;
  std::function<SpecialTerm(const Elem&)> build;
};

// Shifts gamma in Q for which g + gamma vanishes on a pole of a.
// Always includes 0. Coefficients of a in log(w) contribute their poles.
std::vector<Elem> ei_shifts(const Elem& a, const Elem& g, const LevelPtr& x) {
  std::vector<Elem> out{Elem(0)};
  if (g.is_rational()) return out;
  std::vector<UniPoly> dens;
  if (below_or_at(a, x)) {
    if (!a.is_rational()) dens.push_back(as_fraction(a, x).second);
  } else if (a.level()->below == x && a.is_polynomial()) {
    for (const Elem& c : a.num().coeffs()) {
      if (!c.is_rational()) dens.push_back(as_fraction(c, x).second);
    }
  }
  auto [gn, gd] = as_fraction(g, x);
  std::vector<std::pair<UniPoly, int>> factors;
  for (const auto& d : dens) {
    for (auto& fe : split_factors(d)) factors.push_back(std::move(fe));
  }
  for (const auto& [f, e] : factors) {
    if (!poly::gcd(gd, f).is_constant()) continue;
    const UniPoly inv = poly::inverse_mod(poly::rem(gd, f), f);
    const UniPoly rho = poly::rem(-(gn * inv), f);
    if (rho.degree() > 0) continue;
    const Elem gamma = rho.is_zero() ? Elem(0) : rho.coeff(0);
    if (!gamma.is_rational()) continue;
    if (std::find(out.begin(), out.end(), gamma) == out.end()) out.push_back(gamma);
  }
  return out;
}

// Shifts gamma such that gamma - g may be a perfect power: 0 and the
// values of g at its rational critical points.
std::vector<Elem> gamma_shifts(const Elem& g, const LevelPtr& x) {
  std::vector<Elem> out{Elem(0)};
  const Elem dg = derive(g);
  if (dg.is_rational()) return out;
  auto [dn, dd] = as_fraction(dg, x);
  if (!has_rational_coeffs(dn)) return out;
  auto [gn, gd] = as_fraction(g, x);
  for (const BigRat& x0 : rational_roots(dn)) {
    const Elem den = poly::eval(gd, Elem(x0));
    if (den.is_zero()) continue;
    const Elem v = poly::eval(gn, Elem(x0)) / den;
    if (v.is_rational() && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

std::vector<Candidate> candidates(const Elem& a, const Elem& g, const Elem& expg, const Tower& t) {
  std::vector<Candidate> out;
  const LevelPtr x = t.var_level();
  if (!below_or_at(g, x)) {
    if (auto lf = log_form(g, t)) {
      out.push_back({derive(lf->w), [lf, expg, &t](const Elem& c) { return log_form_term(*lf, c, expg, t); }});
    }
    return out;
  }
  if (g.is_rational()) return out;
  for (const Elem& gamma : ei_shifts(a, g, x)) {
    const Elem v = g + gamma;
    if (v.is_zero()) continue;
    out.push_back({derive(v) / v, [g, gamma, expg, &t](const Elem& c) { return ei_term(c, g, gamma, expg, t); }});
  }
  for (const Elem& gamma : gamma_shifts(g, x)) {
    const Elem tt = gamma - g;
    if (is_constant(tt)) continue;
    auto [tn, td] = as_fraction(tt, x);
    const Elem kappa = tn.lead();
    std::vector<std::pair<UniPoly, int>> fs;
    for (auto& [f, e] : poly::squarefree(tn)) {
      if (!f.is_constant()) fs.emplace_back(f, e);
    }
    for (auto& [f, e] : poly::squarefree(td)) {
      if (!f.is_constant()) fs.emplace_back(f, -e);
    }
    long big_e = 0;
    for (const auto& fe : fs) big_e = std::gcd(big_e, static_cast<long>(std::abs(fe.second)));
    const Elem dt = derive(tt);
    const Elem exp_neg_t = expg * exp_rat(-gamma, t);
    for (long k = 2; k <= big_e; ++k) {
      if (big_e % k != 0 || !power_available(kappa, k)) continue;
      for (long m = -k + 1; m < 0; ++m) {
        if (std::gcd(-m, k) != 1) continue;
        Elem p(1);
        for (const auto& [f, e] : fs) p *= Elem::make(x, f).pow(e * m / k);
        out.push_back({dt * p, [=, &t](const Elem& c) {
                         const Elem kp = constant_power(kappa, m, k, t);
                         return gamma_rational_term(c * exp_rat(gamma, t) / kp, tt, kp * p, m, k, exp_neg_t, t);
                       }});
      }
    }
  }
  return out;
}

std::vector<Elem> split_pieces(const Elem& a, const Tower& t) {
  const LevelPtr x = t.var_level();
  if (a.is_rational() || !below_or_at(a, x)) return {a};
  auto [n, d] = as_fraction(a, x);
  const poly::DivMod qr = poly::divmod(n, d);
  std::vector<Elem> out;
  if (!qr.quot.is_zero()) out.push_back(Elem::make(x, qr.quot));
  if (qr.rem.is_zero()) return out;
  for (const auto& pf : poly::partial_fractions(qr.rem, d, split_factors(d))) {
    if (pf.numerator.is_zero()) continue;
    out.push_back(Elem::make(x, pf.numerator, poly::pow(pf.factor, pf.power)));
  }
  return out;
}

Answer from_param(const ParamSolution& ps, const std::vector<Candidate>& cands, const Elem& expg) {
  Answer out;
  out.elementary = ps.y * expg;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (!ps.c[i].is_zero()) out.specials.push_back(cands[i].build(ps.c[i]));
  }
  return out;
}

// The pipeline for one piece r of the coefficient of theta^j.
Answer solve_piece(const Elem& r, const Elem& b, const Elem& g, const Elem& expg, const Tower& t, bool use_param) {
  Answer out;
  RdeOutcome rde = rde_solve(b, r, t);
  if (rde.y) {
    out.elementary = *rde.y * expg;
    return out;
  }
  std::string why = rde.diagnostic;
  if (use_param) {
    auto cands = candidates(r, g, expg, t);
    if (!cands.empty()) {
      std::vector<Elem> hs;
      for (const auto& c : cands) hs.push_back(c.h);
      if (auto ps = param_rde(b, r, hs, t)) return from_param(*ps, cands, expg);
    }
  }
  Match ei = match_ei(r, g, expg, t);
  if (ei.term) {
    out.specials.push_back(*ei.term);
    return out;
  }
  Match gm = match_gamma(r, g, expg, t);
  if (gm.term) {
    out.specials.push_back(*gm.term);
    return out;
  }
  if (gm.failure == "constant_extraction") return Answer::unsupported("constant_extraction", gm.detail, r * expg);
  out.status = Status::NoGammaFormFound;
  out.residual = r * expg;
  out.diagnostics.push_back("no Ei or Gamma form for (" + to_text(r) + ")*" + to_text(expg) + ": " + why);
  return out;
}

}  // namespace

Match match_ei(const Elem& r, const Elem& g, const Elem& expg, const Tower& t) {
  Match out;
  out.failure = "no_match";
  if (r.is_zero() || is_constant(g)) return out;
  const Elem dg = derive(g);
  // r*g + gamma*r - c*g' = 0
  auto sol = linalg::solve_combination({r, -dg}, -(r * g), t.constant_top());
  if (!sol) {
    out.detail = "r*(g + gamma) = c*g' has no constant solution";
    return out;
  }
  const Elem& gamma = (*sol)[0];
  const Elem& c = (*sol)[1];
  if (c.is_zero()) return out;
  if (!gamma.is_rational()) {
    out.detail = "shift " + to_text(gamma) + " is not rational";
    return out;
  }
  out.term = ei_term(c, g, gamma, expg, t);
  out.failure.clear();
  return out;
}

Match match_gamma(const Elem& r, const Elem& g, const Elem& expg, const Tower& t) {
  Match out;
  out.failure = "no_match";
  if (r.is_zero() || is_constant(g)) return out;
  const LevelPtr x = t.var_level();
  if (!below_or_at(g, x)) {
    auto lf = log_form(g, t);
    if (!lf) {
      out.detail = "exponent is not of the form s*log(w) - w + const";
      return out;
    }
    const Elem c = r / derive(lf->w);
    if (!is_constant(c)) {
      out.detail = "coefficient is not a constant multiple of w'";
      return out;
    }
    out.term = log_form_term(*lf, c, expg, t);
    out.failure.clear();
    return out;
  }
  const Elem tt = -g;
  const Elem q = r / derive(tt);
  if (!below_or_at(q, x)) {
    out.detail = "r/t' is not in C(x)";
    return out;
  }
  auto [qn, qd] = as_fraction(q, x);
  auto [tn, td] = as_fraction(tt, x);
  const auto base = poly::coprime_base({qn, qd, tn, td});
  std::vector<std::pair<long, long>> exps;
  std::optional<BigRat> rho;
  for (const auto& f : base) {
    const long eq = poly::order(qn, f) - poly::order(qd, f);
    const long et = poly::order(tn, f) - poly::order(td, f);
    exps.emplace_back(eq, et);
    if (et != 0 && !rho) rho = BigRat(eq) / BigRat(et);
  }
  if (!rho) {
    out.detail = "t has no non-constant factor";
    return out;
  }
  for (const auto& [eq, et] : exps) {
    if (BigRat(eq) != *rho * BigRat(et)) {
      out.detail = "exponents of r/t' and t are not proportional";
      return out;
    }
  }
  if (rho->is_integer()) {
    out.detail = "integer exponent " + rho->str() + " gives an elementary integral";
    return out;
  }
  const long m = rho->num().get_si();
  const long k = rho->den().get_si();
  Elem pq(1);
  Elem pt(1);
  for (std::size_t i = 0; i < base.size(); ++i) {
    pq *= Elem::make(x, base[i]).pow(exps[i].first);
    pt *= Elem::make(x, base[i]).pow(exps[i].second);
  }
  const Elem kq = q / pq;
  const Elem kt = tt / pt;
  if (!power_available(kt, k)) {
    out.failure = "constant_extraction";
    out.detail = "(" + to_text(kt) + ")^(1/" + std::to_string(k) + ") is not a supported constant";
    return out;
  }
  const Elem c = kq / constant_power(kt, m, k, t);
  out.term = gamma_rational_term(c, tt, q / c, m, k, expg, t);
  out.failure.clear();
  return out;
}

Answer integrate_exp_term(const Elem& a, int j, const LevelPtr& theta, const Tower& t) {
  const Elem expg = Elem::gen(theta).pow(j);
  const Elem g = Elem(j) * theta->arg;
  const Elem b = Elem(j) * theta->arg_rate;
  try {
    Answer whole = solve_piece(a, b, g, expg, t, true);
    if (whole.status == Status::Integrated) return whole;
    const auto pieces = split_pieces(a, t);
    if (pieces.size() < 2) return whole;
    Answer parts;
    for (const Elem& p : pieces) parts.add(solve_piece(p, b, g, expg, t, true));
    return parts.residual.is_zero() || !(parts.residual == whole.residual) ? parts : whole;
  } catch (const Unsupported& u) {
    return Answer::unsupported(u.reason(), u.what(), a * expg);
  }
}

namespace {

Answer from_base(const BaseIntegral& bi) {
  Answer out;
  out.elementary = bi.elementary;
  out.logs = bi.logs;
  if (!bi.residual.is_zero()) {
    out.status = Status::NoGammaFormFound;
    out.residual = bi.residual;
    out.diagnostics.push_back("not integrated: " + to_text(bi.residual) + (bi.note.empty() ? "" : " (" + bi.note + ")"));
  }
  return out;
}

// c*w^(n-1)*w'/(lambda - beta) with lambda = log(w), beta rational and
// n != 0 integrates to c*exp(n*beta)*Ei(n*(lambda - beta)). Picks such terms
// out of a proper remainder with squarefree denominator; returns what is
// left.
Elem log_level_ei(const Elem& h, const Tower& t, Answer& out) {
  if (h.is_rational() || h.level()->kind != LevelKind::Log) return h;
  const LevelPtr lam = h.level();
  const UniPoly& d = h.den();
  if (d.degree() < 1 || !has_rational_coeffs(d) || poly::divmod(h.num(), d).quot.degree() >= 0) return h;
  const Elem dw = derive(lam->arg);
  const UniPoly dd = poly::diff(d);
  Elem rest = h;
  for (const BigRat& beta : rational_roots(d)) {
    const Elem res = poly::eval(h.num(), Elem(beta)) / poly::eval(dd, Elem(beta));
    const Elem q = res / dw;
    for (long n = -8; n <= 8; ++n) {
      const Elem c = q / lam->arg.pow(n - 1);
      if (n == 0 || !is_constant(c)) continue;
      const Elem nb(BigRat(n) * beta);
      SpecialTerm st;
      st.kind = SpecialKind::Ei;
      st.c = c * exp_rat(nb, t);
      st.arg = Elem(n) * (Elem::gen(lam) - Elem(beta));
      st.exp_part = lam->arg.pow(n) * exp_rat(-nb, t);
      out.specials.push_back(st);
      rest -= res / (Elem::gen(lam) - Elem(beta));
      break;
    }
  }
  return rest;
}

Answer base_answer(const Elem& f, const Tower& t) {
  try {
    BaseIntegral bi = integrate_base(f, t);
    if (!bi.residual.is_zero()) {
      Answer ei;
      const Elem rest = log_level_ei(bi.residual, t, ei);
      if (!ei.specials.empty()) {
        bi.residual = rest;
        if (rest.is_zero()) bi.note.clear();
        Answer out = from_base(bi);
        out.add(ei);
        return out;
      }
    }
    return from_base(bi);
  } catch (const Unsupported& u) {
    return Answer::unsupported(u.reason(), u.what(), f);
  }
}

Answer integrate_f1(const Elem& f1, const LevelPtr& theta, const Tower& t) {
  Answer out;
  const HermiteResult h = hermite_reduce(f1, theta);
  out.elementary = h.integrated;
  if (h.remainder.is_zero()) return out;
  LogPart lp;
  try {
    lp = residue_logpart(h.remainder, theta, t);
  } catch (const Unsupported& u) {
    // The proper part of f1 is elementary when f has a gamma-extension
    // integral at all, but its logarithmic part is beyond this code.
    Answer a = Answer::unsupported(u.reason() == "nonconstant_residues" ? "f1_not_computed" : u.reason(), u.what(),
                                   h.remainder);
    a.elementary = out.elementary;
    return a;
  }
  std::vector<LogDerivTerm> terms;
  for (const auto& l : lp.terms) terms.push_back({l.c, l.arg});
  const LogDerivReduction red = logderiv_reduce_exp(terms, theta);
  out.logs = lp.terms;
  out.elementary -= red.a * theta->arg;
  for (const auto& tm : red.terms) out.logs.push_back({-tm.c, tm.v});
  return out;
}

}  // namespace

Answer integrate_strict(const Elem& f, const Tower& t) {
  const LevelPtr x = t.var_level();
  if (below_or_at(f, x)) return base_answer(f, t);
  const LevelPtr& top = f.level();
  const auto directly_above_x = [&](const LevelPtr& l) { return l->kind == LevelKind::Log && l->below == x; };
  if (top->kind == LevelKind::Log) {
    if (!directly_above_x(top)) return Answer::unsupported("tower_shape", "logarithm " + top->name + " over another generator", f);
    return base_answer(f, t);
  }
  if (top->kind != LevelKind::Exp || !(top->below == x || directly_above_x(top->below))) {
    return Answer::unsupported("tower_shape", "integrand needs the tower up to " + top->name, f);
  }
  Answer out;
  const F1F2 split = split_f1_f2(f, top);
  if (!split.f1.is_zero()) {
    try {
      out.add(integrate_f1(split.f1, top, t));
    } catch (const Unsupported& u) {
      out.add(Answer::unsupported(u.reason(), u.what(), split.f1));
    }
  }
  for (const auto& [j, a] : split_powers(split.f2)) {
    out.add(j == 0 ? base_answer(a, t) : integrate_exp_term(a, j, top, t));
  }
  return out;
}

Answer integrate(const Elem& f, const Tower& t) {
  try {
    return integrate_strict(f, t);
  } catch (const NeedConstant& n) {
    return Answer::unsupported("constant_outside_field", n.what(), f);
  }
}

Integration integrate_expression(const ExprPtr& e, const LowerOptions& opts) {
  try {
    return with_restarts(opts, [&](Lowering& lw) {
      Elem f = lw.lower_top(e);
      Answer a = integrate_strict(f, lw.tower());
      return Integration{lw.tower(), f, std::move(a)};
    });
  } catch (const Unsupported& u) {
    Integration out;
    out.answer = Answer::unsupported(u.reason(), u.what());
    return out;
  }
}

Elem special_derivative(const SpecialTerm& s) {
  const Elem dv = derive(s.arg);
  if (s.kind == SpecialKind::Ei) return s.c * dv * s.exp_part / s.arg;
  return -s.c * dv * s.exp_part;
}

}  // namespace liouville
