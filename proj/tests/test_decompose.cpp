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

#include "doctest.h"
#include "liouville/decompose.hpp"
#include "liouville/poly.hpp"
#include "support.hpp"

using namespace liouville;

namespace {

struct ExpTower {
  Tower t;
  LevelPtr th;
  Elem theta, x;
};

ExpTower exp_x() {
  const Tower q = Tower::build({});
  ExpTower e{q.with_exp(q.x(), "exp(x)"), nullptr, {}, {}};
  e.th = e.t.top();
  e.theta = Elem::gen(e.th);
  e.x = e.t.x();
  return e;
}

bool proper_coprime(const Elem& p, const LevelPtr& th) {
  if (p.is_zero()) return true;
  if (p.depth() < th->depth) return false;
  return p.num().degree() < p.den().degree() && p.den().coeff(0) != Elem(0);
}

Elem recombine(const LogDerivReduction& r, const Elem& eta_rate) {
  Elem s = r.a * eta_rate + r.proper;
  for (const auto& t : r.terms) s += t.c * derive(t.v) / t.v;
  return s;
}

Elem input_sum(const std::vector<LogDerivTerm>& ts) {
  Elem s(0);
  for (const auto& t : ts) s += t.c * derive(t.v) / t.v;
  return s;
}

// Random element of K[theta] with a nonzero constant term, monic.
UniPoly random_monic(support::Rng& rng, const LevelPtr& below, int deg) {
  std::vector<Elem> c;
  for (int i = 0; i < deg; ++i) c.push_back(support::random_elem(rng, below, 1));
  if (!c.empty() && c[0].is_zero()) c[0] = Elem(1);
  c.push_back(Elem(1));
  return UniPoly(c);
}

}  // namespace

TEST_CASE("decomp_laurent examples") {
  const auto e = exp_x();
  auto s = decomp_laurent((e.theta * e.theta + Elem(1)) / e.theta, e.th);
  CHECK(s.laurent.size() == 2);
  CHECK(s.laurent[1] == Elem(1));
  CHECK(s.laurent[-1] == Elem(1));
  CHECK(s.proper.is_zero());

  s = decomp_laurent((e.theta + Elem(1)).inverse(), e.th);
  CHECK(s.laurent.empty());
  CHECK(s.proper == (e.theta + Elem(1)).inverse());

  // Residues at theta = 0 and theta = -1.
  const Elem f = (e.theta + e.x) / (e.theta * (e.theta + Elem(1)));
  s = decomp_laurent(f, e.th);
  CHECK(s.laurent.size() == 1);
  CHECK(s.laurent[-1] == e.x);
  CHECK(s.proper == (Elem(1) - e.x) / (e.theta + Elem(1)));
}

TEST_CASE("decomp_laurent is unique on random (w, p)") {
  const auto e = exp_x();
  support::Rng rng(53);
  for (int i = 0; i < 150; ++i) {
    std::map<int, Elem> w;
    Elem wsum(0);
    for (int j = -4; j <= 4; ++j) {
      if (rng.range(0, 2) == 0) continue;
      const Elem c = support::random_elem(rng, e.th->below, 2);
      if (c.is_zero()) continue;
      w[j] = c;
      wsum += c * e.theta.pow(j);
    }
    const UniPoly d = random_monic(rng, e.th->below, static_cast<int>(rng.range(1, 2)));
    const UniPoly n = support::random_poly(rng, d.degree() - 1, [&] { return support::random_elem(rng, e.th->below, 1); });
    const Elem p = Elem::make(e.th, n, d);
    REQUIRE(proper_coprime(p, e.th));
    const auto s = decomp_laurent(wsum + p, e.th);
    CHECK(s.laurent == w);
    CHECK(s.proper == p);
  }
}

TEST_CASE("logderiv_reduce_exp examples") {
  const auto e = exp_x();
  auto r = logderiv_reduce_exp({{Elem(1), e.theta}}, e.th);
  CHECK(r.a == Elem(1));
  CHECK(r.terms.empty());
  CHECK(r.proper.is_zero());

  r = logderiv_reduce_exp({{Elem(1), e.theta + Elem(1)}}, e.th);
  CHECK(r.a == Elem(1));
  CHECK(r.terms.empty());
  CHECK(r.proper == -(e.theta + Elem(1)).inverse());

  r = logderiv_reduce_exp({{Elem(1), e.x * e.theta}}, e.th);
  CHECK(r.a == Elem(1));
  REQUIRE(r.terms.size() == 1);
  CHECK(r.terms[0].c == Elem(1));
  CHECK(r.terms[0].v == e.x);
  CHECK(r.proper.is_zero());

  CHECK_THROWS(logderiv_reduce_exp({{Elem(1), Elem(0)}}, e.th));
}

TEST_CASE("logderiv_reduce_prim examples") {
  const Tower q = Tower::build({});
  const Tower lg = q.with_log(q.x(), "log(x)");
  const Elem th = Elem::gen(lg.top()), x = lg.x();
  auto r = logderiv_reduce_prim({{Elem(2), th}}, lg.top());
  CHECK(r.a.is_zero());
  CHECK(r.terms.empty());
  CHECK(r.proper == Elem(2) / (x * th));

  r = logderiv_reduce_prim({{Elem(1), x}}, lg.top());
  REQUIRE(r.terms.size() == 1);
  CHECK(r.terms[0].v == x);
  CHECK(r.proper.is_zero());

  r = logderiv_reduce_prim({{Elem(1), th * th - x}}, lg.top());
  CHECK(r.terms.empty());
  CHECK(r.proper == (Elem(2) * th / x - Elem(1)) / (th * th - x));
}

TEST_CASE("log-derivative reductions recombine exactly") {
  const auto e = exp_x();
  const Tower q = Tower::build({});
  const Tower lg = q.with_log(q.x(), "log(x)");
  support::Rng rng(59);
  for (int i = 0; i < 120; ++i) {
    std::vector<LogDerivTerm> ts, tp;
    for (int k = 0; k < 3; ++k) {
      const Elem c(rng.nonzero_rat());
      Elem v = Elem::make(e.th, random_monic(rng, e.th->below, static_cast<int>(rng.range(0, 2))));
      v *= e.theta.pow(rng.range(-1, 2)) * support::random_elem(rng, e.th->below, 1, false);
      if (!v.is_zero()) ts.push_back({c, v});
      Elem u = Elem::make(lg.top(), random_monic(rng, lg.top()->below, static_cast<int>(rng.range(0, 2))));
      u *= support::random_elem(rng, lg.top()->below, 1, false);
      if (!u.is_zero()) tp.push_back({c, u});
    }
    const auto re = logderiv_reduce_exp(ts, e.th);
    CHECK(recombine(re, e.th->arg_rate) == input_sum(ts));
    CHECK(proper_coprime(re.proper, e.th));
    for (const auto& t : re.terms) CHECK(t.v.depth() < e.th->depth);

    const auto rp = logderiv_reduce_prim(tp, lg.top());
    CHECK(rp.a.is_zero());
    CHECK(recombine(rp, Elem(0)) == input_sum(tp));
    if (!rp.proper.is_zero() && rp.proper.depth() == lg.top()->depth) {
      CHECK(rp.proper.num().degree() < rp.proper.den().degree());
    }
  }
}

TEST_CASE("s'/s - l*eta' is proper and coprime to theta for monic s") {
  const auto e = exp_x();
  support::Rng rng(61);
  for (int i = 0; i < 200; ++i) {
    const int l = static_cast<int>(rng.range(1, 4));
    const Elem s = Elem::make(e.th, random_monic(rng, e.th->below, l));
    const Elem r = derive(s) / s - Elem(l) * e.th->arg_rate;
    CHECK(proper_coprime(r, e.th));
  }
}
