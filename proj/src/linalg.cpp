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

#include "liouville/linalg.hpp"

#include "liouville/poly.hpp"

namespace liouville::linalg {

namespace {

void collect(const std::vector<Elem>& es, int stop_depth, Matrix& out) {
  LevelPtr top;
  for (const auto& e : es) {
    if (e.depth() > (top ? top->depth : 0)) top = e.level();
  }
  if (!top || top->depth <= stop_depth) {
    bool all_zero = true;
    for (const auto& e : es) all_zero = all_zero && e.is_zero();
    if (!all_zero) out.push_back(es);
    return;
  }
  UniPoly den{Elem(1)};
  for (const auto& e : es) {
    if (e.depth() == top->depth && e.den().degree() > 0) den = poly::lcm(den, e.den());
  }
  std::vector<UniPoly> nums;
  int maxdeg = -1;
  for (const auto& e : es) {
    auto [n, d] = as_fraction(e, top);
    nums.push_back(d.degree() > 0 ? n * poly::exact_div(den, d) : n * den);
    maxdeg = std::max(maxdeg, nums.back().degree());
  }
  for (int i = 0; i <= maxdeg; ++i) {
    std::vector<Elem> col;
    col.reserve(nums.size());
    for (const auto& n : nums) col.push_back(n.coeff(i));
    collect(col, stop_depth, out);
  }
}

}  // namespace

Matrix coordinates(const std::vector<Elem>& es, const LevelPtr& stop) {
  Matrix out;
  collect(es, stop ? stop->depth : 0, out);
  return out;
}

std::optional<std::vector<Elem>> solve(Matrix a, std::vector<Elem> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Elem inv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Elem f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
      }
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!b[i].is_zero()) return std::nullopt;
  }
  std::vector<Elem> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

std::optional<std::vector<Elem>> solve_combination(const std::vector<Elem>& basis, const Elem& target,
                                                   const LevelPtr& stop) {
  std::vector<Elem> es = basis;
  es.push_back(target);
  Matrix m = coordinates(es, stop);
  std::vector<Elem> rhs;
  for (auto& row : m) {
    rhs.push_back(row.back());
    row.pop_back();
  }
  if (basis.empty()) {
    if (m.empty()) return std::vector<Elem>{};
    return std::nullopt;
  }
  return solve(std::move(m), std::move(rhs));
}

}  // namespace liouville::linalg
