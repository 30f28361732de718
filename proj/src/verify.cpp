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

#include "liouville/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace liouville {

namespace {

void well_formed(const SpecialTerm& s) {
  if (s.arg.is_zero() || is_constant(s.arg)) throw std::invalid_argument("special term with constant argument");
  if (s.exp_part.is_zero()) throw std::invalid_argument("special term with zero exponential part");
  if (!is_constant(s.c)) throw std::invalid_argument("special term with non-constant coefficient");
}

}  // namespace

Elem differentiate_answer(const Answer& a) {
  Elem d = derive(a.elementary);
  for (const auto& l : a.logs) {
    if (l.arg.is_zero()) throw std::invalid_argument("log of zero");
    if (!is_constant(l.c)) throw std::invalid_argument("log term with non-constant coefficient");
    d += l.c * derive(l.arg) / l.arg;
  }
  for (const auto& s : a.specials) {
    well_formed(s);
    d += special_derivative(s);
  }
  return d;
}

std::vector<std::string> check_specials(const Answer& a) {
  std::vector<std::string> out;
  for (const auto& s : a.specials) {
    const std::string who = (s.kind == SpecialKind::Ei ? "Ei(" : "Gamma(") + to_text(s.arg) + ")";
    try {
      well_formed(s);
    } catch (const std::invalid_argument& e) {
      out.push_back(who + ": " + e.what());
      continue;
    }
    const Elem dv = derive(s.arg);
    const Elem rate = derive(s.exp_part) / s.exp_part;
    if (s.kind == SpecialKind::Ei) {
      if (!(rate == dv)) out.push_back(who + ": u'/u != v'");
      continue;
    }
    if (!is_constant(s.alpha)) out.push_back(who + ": alpha is not constant");
    if (!(rate == (s.alpha - Elem(1)) * dv / s.arg - dv)) {
      out.push_back(who + ": kernel is not v^(alpha-1)*exp(-v)");
    }
    if (s.log_arg && !(derive(*s.log_arg) == dv / s.arg)) out.push_back(who + ": lambda' != v'/v");
    if (s.kind == SpecialKind::GammaRational) {
      if (s.k <= 0) out.push_back(who + ": k must be positive");
      if (!(s.alpha == Elem(BigRat(s.k + s.m, s.k)))) out.push_back(who + ": alpha != (k+m)/k");
      if (std::gcd(s.k, std::abs(s.m)) != 1) out.push_back(who + ": gcd(k, |m|) != 1");
      if (s.in_range != (-s.k < s.m && s.m < 0)) out.push_back(who + ": range flag is wrong");
      if (s.radical) {
        if (!(s.radical->pow(s.k) == s.arg.pow(s.m))) out.push_back(who + ": w^k != v^m");
        const Elem e = s.exp_part / *s.radical;
        if (!(derive(e) / e == -dv)) out.push_back(who + ": exp_part/w is not exp(-v)");
      }
    } else if (s.alpha.is_rational()) {
      out.push_back(who + ": irrational kind with rational alpha");
    }
  }
  return out;
}

numeric::cplx eval_answer(const Answer& a, long double x, const numeric::SymbolValues& symbols) {
  numeric::Evaluator ev(x, symbols);
  numeric::cplx v = ev(a.elementary);
  for (const auto& l : a.logs) {
    const numeric::cplx u = ev(l.arg);
    v += ev(l.c) * (u.imag() == 0 && u.real() > 0 ? numeric::cplx(std::log(u.real()), 0) : std::log(u));
  }
  for (const auto& s : a.specials) {
    const numeric::cplx z = ev(s.arg);
    if (s.kind == SpecialKind::Ei) {
      v += ev(s.c) * numeric::ei(z);
    } else {
      v += ev(s.c) * numeric::upper_gamma(ev(s.alpha).real(), z);
    }
  }
  return v;
}

namespace {

// Newton estimate |g/g'| of the distance from x to a zero or pole of g,
// minimised over everything the probe differentiates or divides by.
long double singular_distance(const Answer& a, const Elem& f, long double x, const numeric::SymbolValues& sym) {
  std::vector<const Elem*> gs{&f, &a.elementary};
  for (const auto& s : a.specials) gs.push_back(&s.arg);
  for (const auto& l : a.logs) gs.push_back(&l.arg);
  constexpr long double h = 1e-7L;
  long double best = std::numeric_limits<long double>::max();
  for (const Elem* g : gs) {
    if (g->is_rational()) continue;
    const numeric::cplx v = numeric::Evaluator(x, sym)(*g);
    const numeric::cplx d =
        (numeric::Evaluator(x + h, sym)(*g) - numeric::Evaluator(x - h, sym)(*g)) / (2 * h);
    if (std::abs(d) > 0) best = std::min(best, std::abs(v) / std::abs(d));
  }
  return best;
}

}  // namespace

std::vector<BigRat> probe_points(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(300, 2500);
  std::vector<BigRat> out;
  while (static_cast<int>(out.size()) < n) {
    BigRat p(num(rng), 1000);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

numeric::SymbolValues probe_symbols(const Tower& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<long> num(1, 96);
  numeric::SymbolValues out;
  // n/97 is never 1/2.
  for (const auto& s : t.constants().symbols) out[s] = static_cast<long double>(num(rng)) / 97.0L;
  return out;
}

Report numeric_probe(const Elem& f, const Answer& a, const std::vector<BigRat>& points,
                     const numeric::SymbolValues& symbols, int wanted) {
  Report r;
  r.symbols = symbols;
  const Elem target = f - a.residual;
  for (const BigRat& p : points) {
    if (static_cast<int>(r.numeric_samples.size()) >= wanted) break;
    const long double x = static_cast<long double>(p.num().get_d()) / static_cast<long double>(p.den().get_d());
    try {
      // Stay away from singular arguments of the special functions and logs,
      // and keep the difference stencil clear of nearby poles and zeros.
      numeric::Evaluator ev(x, symbols);
      bool near = false;
      for (const auto& s : a.specials) near = near || std::abs(ev(s.arg)) < 0.05L;
      for (const auto& l : a.logs) near = near || std::abs(ev(l.arg)) < 0.05L;
      const long double dist = singular_distance(a, target, x, symbols);
      if (near || dist < 0.02L) {
        r.notes.push_back("skipped x = " + p.str() + ": near a singular argument");
        continue;
      }
      const numeric::cplx fv = ev(target);
      long double err_est = 0;
      const numeric::cplx dv = numeric::derivative(
          [&](long double y) { return eval_answer(a, y, symbols); }, x, std::min({0.1L, x / 8, dist / 4}), &err_est);
      if (!std::isfinite(std::abs(fv)) || !std::isfinite(std::abs(dv))) {
        r.notes.push_back("skipped x = " + p.str() + ": non-finite value");
        continue;
      }
      Sample s;
      s.point = p;
      s.abs_error = static_cast<double>(std::abs(fv - dv));
      s.rel_error = static_cast<double>(std::abs(fv - dv) / std::max<long double>(1, std::abs(fv)));
      r.max_abs_error = std::max(r.max_abs_error, s.abs_error);
      r.max_rel_error = std::max(r.max_rel_error, s.rel_error);
      r.numeric_samples.push_back(s);
    } catch (const std::domain_error& e) {
      r.notes.push_back("skipped x = " + p.str() + ": " + e.what());
    }
  }
  r.numeric_ok = static_cast<int>(r.numeric_samples.size()) >= wanted && r.max_rel_error < kProbeTolerance;
  if (static_cast<int>(r.numeric_samples.size()) < wanted) r.notes.push_back("too few admissible points");
  return r;
}

Report verify(const Elem& f, const Answer& a, const Tower& t, std::uint64_t seed) {
  const numeric::SymbolValues symbols = probe_symbols(t, seed);
  Report r = numeric_probe(f, a, probe_points(seed, 40), symbols);
  try {
    r.residual = differentiate_answer(a) + a.residual - f;
    r.symbolic_ok = r.residual.is_zero();
  } catch (const std::invalid_argument& e) {
    r.symbolic_ok = false;
    r.notes.push_back(std::string("malformed answer: ") + e.what());
  }
  r.side_failures = check_specials(a);
  return r;
}

}  // namespace liouville
