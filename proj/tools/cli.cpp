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

#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "liouville/answer_io.hpp"
#include "liouville/structure.hpp"

namespace liouville::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Common {
  std::string var = "x";
  std::vector<std::string> consts;  // NAME=irrational
  std::vector<std::string> tower;
  bool json = false;
  bool verify = false;
  std::uint64_t seed = 1;
};

std::vector<std::string> constant_names(const std::vector<std::string>& decls) {
  std::vector<std::string> out;
  for (const auto& d : decls) {
    const auto eq = d.find('=');
    const std::string name = d.substr(0, eq);
    const std::string kind = eq == std::string::npos ? "irrational" : d.substr(eq + 1);
    if (kind != "irrational") throw CLI::ValidationError("--const", "only NAME=irrational is supported, got " + d);
    if (name.empty()) throw CLI::ValidationError("--const", "missing constant name in " + d);
    out.push_back(name);
  }
  return out;
}

LowerOptions lower_options(const Common& c) {
  LowerOptions lo;
  lo.var = c.var;
  lo.constants = constant_names(c.consts);
  const ParseOptions po{c.var, lo.constants};
  for (const auto& t : c.tower) lo.tower.push_back(parse(t, po));
  return lo;
}

int exit_code(Status s) {
  switch (s) {
    case Status::Integrated: return 0;
    case Status::NoGammaFormFound: return 2;
    case Status::Unsupported: return 3;
  }
  return 3;
}

std::string report_line(const Report& r) {
  std::ostringstream os;
  os << "verify: symbolic " << (r.symbolic_ok ? "ok" : "FAILED (residual " + to_text(r.residual) + ")")
     << ", side conditions " << (r.side_failures.empty() ? "ok" : "FAILED") << ", numeric max rel error "
     << std::setprecision(3) << r.max_rel_error << " at " << r.numeric_samples.size() << " points"
     << (r.numeric_ok ? "" : " (FAILED)");
  return os.str();
}

std::vector<std::string> tower_names(const Tower& t) {
  std::vector<std::string> out;
  if (!t.top()) return out;
  for (const auto& g : t.generators()) out.push_back(g->name);
  return out;
}

int cmd_integrate(const std::string& text, const Common& c, bool strict_verify, std::ostream& out,
                  std::ostream& err) {
  const LowerOptions lo = lower_options(c);
  const Integration r = integrate_expression(parse(text, ParseOptions{c.var, lo.constants}), lo);
  std::optional<Report> rep;
  if ((c.verify || strict_verify) && r.tower.top() && r.answer.status != Status::Unsupported) {
    rep = verify(r.integrand, r.answer, r.tower, c.seed);
  }
  if (c.json) {
    json j = to_json(r.answer);
    j["integrand"] = r.tower.top() ? to_text(r.integrand) : text;
    j["tower"] = tower_names(r.tower);
    if (rep) j["diagnostics"].push_back({{"report", to_json(*rep)}});
    out << j.dump(2) << "\n";
  } else {
    if (r.answer.status == Status::Unsupported) {
      out << "unsupported: " << r.answer.reason << "\n";
    } else {
      out << print_answer(r.answer, c.var) << " + C\n";
    }
    for (const auto& d : r.answer.diagnostics) err << d << "\n";
    if (rep) out << report_line(*rep) << "\n";
  }
  if (strict_verify) {
    if (r.answer.status == Status::Unsupported) return exit_code(r.answer.status);
    return rep && rep->ok() ? exit_code(r.answer.status) : 4;
  }
  return exit_code(r.answer.status);
}

int cmd_structure(const std::string& text, const Common& c, std::ostream& out) {
  const LowerOptions lo = lower_options(c);
  const ExprPtr e = parse(text, ParseOptions{c.var, lo.constants});
  if (e->kind != Expr::Kind::Exp && e->kind != Expr::Kind::Log) {
    throw CLI::ValidationError("structure", "expected exp(...) or log(...)");
  }
  struct Result {
    bool dependent = false;
    std::string value;
    std::vector<std::pair<std::string, std::string>> witness;
    std::vector<std::string> tower;
  };
  const Result r = with_restarts(lo, [&](Lowering& lw) {
    Result res;
    const Elem arg = lw.lower(e->args.front());
    const Tower& t = lw.tower();
    std::optional<Witness> w;
    if (e->kind == Expr::Kind::Exp) {
      w = exp_dependence(arg, t);
    } else {
      if (arg.is_zero()) throw Unsupported("log_of_zero", "log(0)");
      w = log_dependence(arg, t);
    }
    res.tower = tower_names(t);
    if (!w) return res;
    res.dependent = true;
    res.value = to_text(e->kind == Expr::Kind::Exp ? lw.exp_of(arg) : lw.log_of(arg));
    for (std::size_t i = 0; i < w->r.size(); ++i) {
      if (!w->r[i].is_zero()) res.witness.emplace_back(w->basis.items[i].label, w->r[i].str());
    }
    return res;
  });
  if (c.json) {
    json j;
    j["expression"] = text;
    j["tower"] = r.tower;
    j["status"] = r.dependent ? "dependent" : "transcendental";
    if (r.dependent) {
      j["value"] = r.value;
      j["witness"] = json::array();
      for (const auto& [label, coef] : r.witness) j["witness"].push_back({{"item", label}, {"r", coef}});
    }
    out << j.dump(2) << "\n";
  } else {
    out << (r.dependent ? "dependent: " + r.value : std::string("transcendental")) << "\n";
  }
  return 0;
}

struct Case {
  std::string file;
  int line = 0;
  std::string integrand;
  std::string expect;
  std::vector<std::string> consts;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<Case> read_cases(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw CLI::ValidationError("corpus", "cannot read " + file.string());
  std::vector<Case> out;
  std::vector<std::string> consts;
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    std::string body = line, comment;
    if (auto h = line.find('#'); h != std::string::npos) {
      body = line.substr(0, h);
      comment = trim(line.substr(h + 1));
    }
    body = trim(body);
    if (body.empty()) {
      if (comment.rfind("const ", 0) == 0) consts.push_back(trim(comment.substr(6)));
      continue;
    }
    Case c{file.filename().string(), n, body, "", consts};
    if (comment.rfind("expect:", 0) == 0) c.expect = trim(comment.substr(7));
    out.push_back(std::move(c));
  }
  return out;
}

int cmd_corpus(const std::string& path, const Common& c, long timeout_ms, std::ostream& out) {
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& e : fs::directory_iterator(path)) {
      if (e.path().extension() == ".cases") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  int total = 0, passed = 0;
  json rows = json::array();
  for (const auto& f : files) {
    for (const Case& cs : read_cases(f)) {
      ++total;
      Common cc = c;
      cc.consts.insert(cc.consts.end(), cs.consts.begin(), cs.consts.end());
      std::string status, answer, problem;
      bool ok = true;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const LowerOptions lo = lower_options(cc);
        const Integration r = integrate_expression(parse(cs.integrand, ParseOptions{cc.var, lo.constants}), lo);
        status = status_name(r.answer.status);
        answer = r.answer.status == Status::Unsupported ? r.answer.reason : print_answer(r.answer, cc.var);
        if (r.answer.status != Status::Unsupported && r.tower.top()) {
          const Report rep = verify(r.integrand, r.answer, r.tower, c.seed);
          if (!rep.ok()) {
            ok = false;
            problem = report_line(rep);
          }
        }
      } catch (const std::exception& e) {
        status = "error";
        answer = e.what();
      }
      const long ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
      if (!cs.expect.empty() && cs.expect != status) {
        ok = false;
        problem = "expected " + cs.expect;
      }
      if (cs.expect.empty() && status == "error") ok = false;
      if (timeout_ms > 0 && ms > timeout_ms) {
        ok = false;
        problem = "timeout after " + std::to_string(ms) + " ms";
      }
      if (ok) ++passed;
      const std::string where = cs.file + ":" + std::to_string(cs.line);
      if (c.json) {
        rows.push_back({{"case", where},
                        {"integrand", cs.integrand},
                        {"status", status},
                        {"expect", cs.expect},
                        {"answer", answer},
                        {"ms", ms},
                        {"pass", ok},
                        {"problem", problem}});
      } else {
        out << (ok ? "PASS " : "FAIL ") << std::left << std::setw(16) << where << " " << std::setw(20) << status
            << " " << std::right << std::setw(5) << ms << " ms  " << cs.integrand << "  =>  " << answer;
        if (!problem.empty()) out << "  [" << problem << "]";
        out << "\n";
      }
    }
  }
  if (c.json) {
    out << json{{"cases", rows}, {"total", total}, {"passed", passed}}.dump(2) << "\n";
  } else {
    out << passed << "/" << total << " cases passed\n";
  }
  return passed == total ? 0 : 4;
}

void add_common(CLI::App* sub, Common& c, bool tower) {
  sub->add_option("--var", c.var, "integration variable")->default_val("x");
  sub->add_option("--const", c.consts, "declare NAME=irrational");
  sub->add_flag("--json", c.json, "JSON output");
  sub->add_option("--seed", c.seed, "seed for numeric probe points")->default_val(1);
  if (tower) sub->add_option("--tower", c.tower, "generator to place in the tower first (repeatable)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic integration with Ei and incomplete gamma terms", "liouville"};
  app.require_subcommand(1);
  Common c;
  std::string expr, path;
  long timeout_ms = 1000;

  auto* integ = app.add_subcommand("integrate", "integrate an expression in x");
  integ->add_option("expr", expr, "integrand")->required();
  add_common(integ, c, true);
  integ->add_flag("--verify", c.verify, "append the verification report");

  auto* structure = app.add_subcommand("structure", "is exp(g) or log(f) dependent on the tower?");
  structure->add_option("expr", expr, "exp(...) or log(...)")->required();
  add_common(structure, c, true);

  auto* ver = app.add_subcommand("verify", "integrate and certify; exit 4 when the certificate fails");
  ver->add_option("expr", expr, "integrand")->required();
  add_common(ver, c, true);

  auto* corpus = app.add_subcommand("corpus", "run .cases files");
  corpus->add_option("path", path, "directory or .cases file")->required();
  add_common(corpus, c, false);
  corpus->add_option("--timeout-ms", timeout_ms, "per-case time limit")->default_val(1000);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }
  try {
    if (*integ) return cmd_integrate(expr, c, false, out, err);
    if (*ver) {
      c.verify = true;
      return cmd_integrate(expr, c, true, out, err);
    }
    if (*structure) return cmd_structure(expr, c, out);
    return cmd_corpus(path, c, timeout_ms, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const CLI::Error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.reason() << ": " << e.what() << "\n";
    return 3;
  }
}

}  // namespace liouville::cli
