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

#ifndef LIOUVILLE_LOWER_HPP
#define LIOUVILLE_LOWER_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liouville/expr.hpp"
#include "liouville/tower.hpp"

namespace liouville {

// Raised when exp(g) turns out to be a fractional power of an existing
// exponential generator: the generator keyed `key` must be rebuilt as
// exp(key / n).
class NeedRefinement : public std::runtime_error {
 public:
  NeedRefinement(std::string key, long n)
      : std::runtime_error("exponential generator needs refinement"), key_(std::move(key)), n_(n) {}
  const std::string& key() const { return key_; }
  long n() const { return n_; }

 private:
  std::string key_;
  long n_;
};

// Raised when a logarithm of an element below an existing generator would
// become a new generator on top; the driver lowers `text` first instead.
class NeedLogBelow : public std::runtime_error {
 public:
  explicit NeedLogBelow(std::string text)
      : std::runtime_error("logarithm must be placed lower in the tower"), text_(std::move(text)) {}
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

// Translates syntax trees into elements of one fixed tower, adding
// generators on top as needed. Missing constants and refinements surface as
// exceptions; see with_restarts.
class Lowering {
 public:
  Lowering(Tower t, std::map<std::string, long> refine) : tower_(std::move(t)), refine_(std::move(refine)) {}

  // Lowers exp-free logarithms first so that they sit below exponentials.
  Elem lower_top(const ExprPtr& e);
  Elem lower(const ExprPtr& e);
  Elem exp_of(const Elem& g);
  Elem log_of(const Elem& v);
  Elem exp_of_constant(const Elem& c);
  Elem log_of_constant(const Elem& c);

  const Tower& tower() const { return tower_; }

 private:
  Elem log_nonconstant(const Elem& v);

  Tower tower_;
  std::map<std::string, long> refine_;
  std::map<const Level*, std::pair<std::string, long>> exp_keys_;
};

struct LowerOptions {
  std::string var = "x";
  std::vector<std::string> constants;
  // Expressions lowered before the main one so that their generators come
  // first (the CLI's --tower).
  std::vector<ExprPtr> tower;
  int max_restarts = 32;
};

struct Lowered {
  Tower tower;
  Elem value;
};

// Runs body(lowering) on freshly built towers until it finishes without
// asking for more constants or refinements.
template <class F>
auto with_restarts(const LowerOptions& opts, F&& body, ConstSpec spec = {}) -> decltype(body(std::declval<Lowering&>())) {
  ConstSpec base;
  base.symbols = opts.constants;
  spec.merge(base);
  std::map<std::string, long> refine;
  std::vector<std::string> early_logs;
  for (int attempt = 0;; ++attempt) {
    if (attempt > opts.max_restarts) throw Unsupported("restart_limit", "tower construction did not settle");
    try {
      Lowering lw(Tower::build(spec, opts.var), refine);
      for (const auto& text : early_logs) lw.lower(parse(text, ParseOptions{opts.var, opts.constants}));
      for (const auto& t : opts.tower) lw.lower_top(t);
      return body(lw);
    } catch (const NeedConstant& need) {
      if (spec.covers(need.need())) throw Unsupported("restart_loop", "constant request already satisfied");
      spec.merge(need.need());
    } catch (const NeedRefinement& r) {
      long& n = refine[r.key()];
      if (n == r.n()) throw Unsupported("restart_loop", "refinement request already satisfied");
      n = r.n();
    } catch (const NeedLogBelow& l) {
      for (const auto& t : early_logs) {
        if (t == l.text()) throw Unsupported("restart_loop", "logarithm placement did not settle");
      }
      early_logs.push_back(l.text());
    }
  }
}

Lowered lower(const ExprPtr& e, const LowerOptions& opts = {});

}  // namespace liouville

#endif  // LIOUVILLE_LOWER_HPP
