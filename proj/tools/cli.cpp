// Copyright 2026 The Orlicz Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "orlicz/diagsys.hpp"
#include "orlicz/harness.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/rearrange.hpp"
#include "orlicz/shift.hpp"
#include "orlicz/spec_language.hpp"

namespace orlicz {

namespace {

using numeric::format_number;

// Non-finite numbers are written as strings so the JSON stays standard.
Json num(double x) {
  if (std::isfinite(x)) return x;
  return format_number(x);
}

Json num_array(const std::vector<double>& xs) {
  Json a = Json::array();
  for (double x : xs) a.push_back(num(x));
  return a;
}

std::string cell(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  }
  if (j.is_number_float()) return format_number(j.get<double>());
  if (j.is_null()) return "";
  return j.dump();
}

// One header row and one value row from the scalar fields of a record.
std::string record_csv(const Json& rec) {
  std::string head, row;
  bool first = true;
  for (auto it = rec.begin(); it != rec.end(); ++it) {
    if (it->is_structured()) continue;
    if (!first) {
      head += ",";
      row += ",";
    }
    first = false;
    head += it.key();
    row += cell(it.value());
  }
  return head + "\n" + row + "\n";
}

std::string table_csv(const std::vector<std::string>& columns, const Json& rows) {
  std::string s;
  for (std::size_t i = 0; i < columns.size(); ++i) s += (i ? "," : "") + columns[i];
  s += "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) s += (i ? "," : "") + cell(r.at(columns[i]));
    s += "\n";
  }
  return s;
}

struct Output {
  std::string text;
  int code = 0;
};

struct Settings {
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out;
  std::string config;

  std::string phi;
  std::vector<std::string> phis;
  std::string f;
  std::string tau;  // empty: command default
  std::string system;
  std::vector<std::string> systems;
  std::string points;
  std::string grid = "1e-3:1e3:13";
  std::string weight = "conjugate-inverse";
  double alpha = 0;
  double tol = Tolerances::bisection;
  int random = 100;
  int refine = 0;
  int K = 20;
  int n0 = 2;
  std::string shifts = "1e-3,1e-6,1e-9";
  std::string suite;
  std::vector<std::string> suites;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  return parts;
}

std::vector<double> real_list(const std::string& s, const char* what) {
  std::vector<double> xs;
  for (const auto& p : split(s, ',')) xs.push_back(parse_real(p));
  if (xs.empty()) throw ParseError(std::string(what) + ": empty list");
  return xs;
}

std::vector<double> grid_points(const Settings& st) {
  if (!st.points.empty()) return real_list(st.points, "--points");
  const auto parts = split(st.grid, ':');
  if (parts.size() != 3) throw ParseError("--grid expects lo:hi:n");
  const double lo = parse_real(parts[0]), hi = parse_real(parts[1]);
  const long n = parse_integer(parts[2]);
  if (!(lo > 0 && hi >= lo && std::isfinite(hi)) || n < 1 || n > 100000) throw ParseError("--grid: need 0 < lo <= hi, 1 <= n");
  return n == 1 ? std::vector<double>{lo} : numeric::log_grid(lo, hi, static_cast<int>(n));
}

double horizon(const Settings& st) {
  const double tau = st.tau.empty() ? 1.0 : parse_real(st.tau);
  if (!(tau > 0)) throw ParseError("--tau must be positive");
  return tau;
}

YoungFunction require_phi(const Settings& st) {
  if (st.phi.empty()) throw ParseError("--phi is required");
  return parse_phi(st.phi);
}

Output finish(const Settings& st, Json body, const std::function<std::string(const Json&)>& csv, int code) {
  return {st.format == "csv" ? csv(body) : body.dump(2) + "\n", code};
}

Output cmd_conjugate(const Settings& st) {
  const YoungFunction phi = require_phi(st);
  const auto pts = grid_points(st);
  for (double s : pts)
    if (!(s >= 0) || !std::isfinite(s)) throw ParseError("conjugate: points must be finite and nonnegative");
  const YoungFunction conj = complementary(phi);
  Json rows = Json::array();
  for (double s : pts) rows.push_back({{"s", num(s)}, {"value", num(conj(s))}});
  Json body = {{"phi", st.phi}, {"conjugate", conj.provenance()}, {"points", rows}};
  return finish(st, body, [](const Json& b) { return table_csv({"s", "value"}, b["points"]); }, 0);
}

Json norm_json(const NormResult& r) {
  return {{"value", num(r.value)},
          {"lo", num(r.lo)},
          {"hi", num(r.hi)},
          {"rel_tol", r.rel_tol},
          {"diagnostics",
           {{"panels", r.diagnostics.panels},
            {"truncation", num(r.diagnostics.truncation)},
            {"tail_bound", num(r.diagnostics.tail_bound)},
            {"iterations", r.diagnostics.iterations}}}};
}

Output cmd_norm(const Settings& st) {
  const YoungFunction phi = require_phi(st);
  const double tau = horizon(st);
  if (st.f.empty()) throw ParseError("--f is required");
  const SampledFunction f = parse_function(st.f, tau);
  NormOptions opts;
  opts.rel_tol = st.tol;
  Json body = {{"phi", st.phi}, {"f", st.f}, {"tau", num(tau)}};
  body.update(norm_json(luxemburg_norm(f, phi, opts)));
  return finish(st, body, record_csv, 0);
}

Output cmd_rearrange(const Settings& st) {
  const double tau = horizon(st);
  if (st.f.empty()) throw ParseError("--f is required");
  const SampledFunction f = parse_function(st.f, tau);
  const Rearrangement r = decreasing_rearrangement(f);
  Json body = {{"f", st.f}, {"tau", num(tau)}, {"fstar", r.fstar.describe()}};
  Json pieces = Json::array();
  if (r.fstar.kind() == FunctionKind::step) {
    const auto& br = r.fstar.breaks();
    for (std::size_t i = 0; i + 1 < br.size(); ++i)
      pieces.push_back({{"left", num(br[i])}, {"right", num(br[i + 1])}, {"value", num(r.fstar.values()[i])}});
  }
  body["pieces"] = pieces;
  if (!st.phi.empty()) {
    body["phi"] = st.phi;
    body["weak_norm"] = num(weak_orlicz_norm(f, parse_phi(st.phi)).value);
  }
  return finish(st, body,
                [](const Json& b) {
                  return b["pieces"].empty() ? record_csv(b) : table_csv({"left", "right", "value"}, b["pieces"]);
                },
                0);
}

DiagonalSystem require_system(const Settings& st, const YoungFunction& phi) {
  if (st.system.empty()) throw ParseError("--system is required");
  return parse_system(st.system, phi);
}

Output cmd_admissibility(const Settings& st) {
  const YoungFunction phi = require_phi(st);
  const DiagonalSystem sys = require_system(st, phi);
  const double tau = st.tau.empty() ? kInf : parse_real(st.tau);
  if (!(tau > 0)) throw ParseError("--tau must be positive");
  if (st.random < 0 || st.refine < 0) throw ParseError("--random and --refine must be nonnegative");
  AdmissibilityStrategy strategy;
  strategy.random = st.random;
  strategy.refine = st.refine;
  strategy.seed = st.seed;
  const auto rep = admissibility_constant(sys, phi, tau, strategy);
  Json body = {{"phi", st.phi},
               {"system", sys.describe()},
               {"tau", num(rep.tau)},
               {"constant_lower", num(rep.constant_lower)},
               {"constant_upper", rep.constant_upper ? num(*rep.constant_upper) : Json(nullptr)},
               {"candidates", rep.candidates},
               {"verdict", rep.verdict},
               {"witness", num_array(rep.witness)}};
  const bool failed = rep.verdict == "bound violated" || rep.verdict == "not admissible";
  return finish(st, body, record_csv, failed ? 1 : 0);
}

Output cmd_weiss(const Settings& st) {
  const YoungFunction phi = require_phi(st);
  const DiagonalSystem sys = require_system(st, phi);
  WeissWeight weight;
  if (st.weight == "conjugate-inverse") {
    weight = WeissWeight::inverse_conjugate;
  } else if (st.weight == "exp-norm") {
    weight = WeissWeight::exp_norm;
  } else {
    throw ParseError("--weight must be conjugate-inverse or exp-norm");
  }
  if (!(st.alpha >= 0) || !std::isfinite(st.alpha)) throw ParseError("--alpha must be finite and nonnegative");
  const auto w = weiss_supremum(sys, phi, st.alpha, weight);
  Json modes = Json::array();
  for (std::size_t n = 0; n < w.per_mode.size(); ++n)
    modes.push_back({{"mode", n + 1}, {"value", num(w.per_mode[n].value)}, {"arg", num(w.per_mode[n].arg)}});
  Json body = {{"phi", st.phi},
               {"system", sys.describe()},
               {"weight", weight_name(w.weight)},
               {"alpha", st.alpha},
               {"sup", num(w.sup)},
               {"z_star", num(w.z_star)},
               {"n_star", w.n_star < 0 ? Json(nullptr) : Json(w.n_star + 1)},
               {"tail_monotone", w.tail_monotone},
               {"verdict", w.verdict},
               {"per_mode", modes}};
  return finish(st, body, record_csv, w.verdict == "unbounded" ? 1 : 0);
}

Output cmd_shift(const Settings& st) {
  const YoungFunction phi = parse_phi(st.phi.empty() ? "expm1t" : st.phi);
  const auto ts = real_list(st.shifts, "--t");
  for (double t : ts)
    if (!(t >= 0) || !std::isfinite(t)) throw ParseError("--t values must be finite and nonnegative");
  Json body = {{"phi", st.phi.empty() ? std::string("expm1t") : st.phi}};
  if (!st.f.empty()) {
    // Continuity modulus of the shift on a given step function.
    const SampledFunction f = parse_function(st.f, horizon(st));
    Json rows = Json::array();
    for (double t : ts) rows.push_back({{"t", num(t)}, {"modulus", num(shift_continuity_modulus(f, phi, t))}});
    body["f"] = st.f;
    body["moduli"] = rows;
    return finish(st, body, [](const Json& b) { return table_csv({"t", "modulus"}, b["moduli"]); }, 0);
  }
  if (st.K < 1 || st.n0 < 2) throw ParseError("--K must be >= 1 and --n0 >= 2");
  const auto build = build_delta2_counterexample(phi, st.K, st.n0);
  Json pieces = Json::array();
  for (std::size_t k = 0; k < build.tks.size(); ++k)
    pieces.push_back({{"k", k + 1},
                      {"t_k", num(build.tks[k])},
                      {"growth", num(build.growth[k])},
                      {"left", num(build.intervals[k].first)},
                      {"right", num(build.intervals[k].second)},
                      {"length", num(build.lengths[k])},
                      {"gap", num(build.gaps[k])},
                      {"modular_u", num(build.modular_u[k])},
                      {"modular_2u", num(build.modular_2u[k])}});
  Json shifts = Json::array();
  bool all_certified = true;
  for (double t : ts) {
    const auto d = counterexample_discontinuity(build, t, st.K);
    all_certified = all_certified && (t == 0 || d.verdict == "discontinuous");
    shifts.push_back({{"t", num(t)},
                      {"crossing", d.crossing < 0 ? Json(nullptr) : Json(d.crossing)},
                      {"partial_modular", num(d.partial_modular.empty() ? 0.0 : d.partial_modular.back())},
                      {"verdict", d.verdict}});
  }
  body["n0"] = build.n0;
  body["K"] = st.K;
  body["pieces"] = pieces;
  body["shifts"] = shifts;
  return finish(st, body,
                [](const Json& b) {
                  return table_csv({"k", "t_k", "growth", "left", "right", "length", "gap", "modular_u", "modular_2u"},
                                   b["pieces"]);
                },
                all_certified ? 0 : 1);
}

HarnessConfig harness_config(const Settings& st) {
  HarnessConfig cfg;
  cfg.seed = st.seed;
  cfg.phis = st.phis;
  cfg.systems = st.systems;
  if (!st.suites.empty()) cfg.suites = st.suites;
  return cfg;
}

Output reports_output(const Settings& st, const std::vector<SuiteReport>& reps) {
  const bool pass = std::all_of(reps.begin(), reps.end(), [](const SuiteReport& r) { return r.pass && r.error.empty(); });
  return {st.format == "csv" ? reports_csv(reps) : reports_json(reps), pass ? 0 : 1};
}

Output cmd_verify(const Settings& st) {
  if (st.suite.empty()) throw ParseError("--suite is required");
  return reports_output(st, {run_suite(st.suite, harness_config(st))});
}

Output cmd_run_all(const Settings& st) {
  const auto& known = suite_names();
  for (const auto& s : st.suites)
    if (std::find(known.begin(), known.end(), s) == known.end()) throw ParseError("unknown suite '" + s + "'");
  return reports_output(st, run_all(harness_config(st)));
}

// key = value lines; '#' starts a comment.  Repeated keys feed list options.
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> kv;
  std::string line;
  int lineno = 0;
  const auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(path + ":" + std::to_string(lineno) + ": expected key = value");
    kv.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return kv;
}

// Config values fill only the options the command line left unset.
void apply_config(CLI::App& app, CLI::App* sub, const std::string& path) {
  std::map<CLI::Option*, std::vector<std::string>> pending;
  for (const auto& [key, value] : read_config(path)) {
    if (key == "config") throw ParseError("config files cannot nest");
    CLI::Option* opt = sub ? sub->get_option_no_throw("--" + key) : nullptr;
    if (!opt) opt = app.get_option_no_throw("--" + key);
    if (!opt) throw ParseError("config key '" + key + "' does not apply to this command");
    if (opt->count() == 0) pending[opt].push_back(value);
  }
  for (auto& [opt, values] : pending) {
    for (const auto& v : values) opt->add_result(v);
    opt->run_callback();
  }
}

void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw ParseError("cannot write '" + tmp.string() + "'");
    os << text;
    os.close();
    if (!os) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw ParseError("cannot write '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ParseError("cannot move output into '" + path + "'");
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings st;
  CLI::App app{"Orlicz space admissibility toolkit", "orlicz-cli"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", st.seed, "seed for randomised checks");
  app.add_option("--format", st.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", st.out, "write output to this path (atomically)");
  app.add_option("--config", st.config, "key = value file; command-line flags take precedence");

  std::map<CLI::App*, std::function<Output(const Settings&)>> handlers;
  const auto command = [&](const char* name, const char* help, std::function<Output(const Settings&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    handlers[sub] = std::move(fn);
    return sub;
  };

  auto* conj = command("conjugate", "tabulate the complementary Young function", cmd_conjugate);
  conj->add_option("--phi", st.phi, "Young function spec");
  conj->add_option("--points", st.points, "comma-separated points s");
  conj->add_option("--grid", st.grid, "log grid lo:hi:n (used without --points)");

  auto* norm = command("norm", "Luxemburg norm of a function", cmd_norm);
  norm->add_option("--phi", st.phi, "Young function spec");
  norm->add_option("--f", st.f, "function spec (exp:A,s | const:c | pow:A,b | file:PATH)");
  norm->add_option("--tau", st.tau, "horizon (inf allowed, default 1)");
  norm->add_option("--tol", st.tol, "relative tolerance")->check(CLI::PositiveNumber);

  auto* rear = command("rearrange", "decreasing rearrangement and weak Orlicz norm", cmd_rearrange);
  rear->add_option("--f", st.f, "function spec");
  rear->add_option("--tau", st.tau, "horizon (default 1)");
  rear->add_option("--phi", st.phi, "Young function spec for the weak norm");

  auto* adm = command("admissibility", "admissibility constant of a diagonal system", cmd_admissibility);
  adm->add_option("--phi", st.phi, "Young function spec");
  adm->add_option("--system", st.system, "system spec diag:...");
  adm->add_option("--tau", st.tau, "horizon (default inf)");
  adm->add_option("--random", st.random, "random unit vectors");
  adm->add_option("--refine", st.refine, "refinement rounds");

  auto* weiss = command("weiss", "Phi-Weiss supremum of a diagonal system", cmd_weiss);
  weiss->add_option("--phi", st.phi, "Young function spec");
  weiss->add_option("--system", st.system, "system spec diag:...");
  weiss->add_option("--weight", st.weight, "conjugate-inverse | exp-norm");
  weiss->add_option("--alpha", st.alpha, "lower end of the half line");

  auto* shift = command("shift", "right shift: Delta2 counterexample or continuity modulus", cmd_shift);
  shift->add_option("--phi", st.phi, "Young function spec (default expm1t)");
  shift->add_option("--K", st.K, "pieces of the counterexample");
  shift->add_option("--n0", st.n0, "first index of the interval series");
  shift->add_option("--t", st.shifts, "comma-separated shift amounts");
  shift->add_option("--f", st.f, "step function for the continuity modulus");
  shift->add_option("--tau", st.tau, "horizon for --f (default 1)");

  auto* verify = command("verify", "run one verification suite", cmd_verify);
  verify->add_option("--suite", st.suite, "suite name");
  verify->add_option("--phi", st.phis, "Young function spec (repeatable)");
  verify->add_option("--system", st.systems, "system spec (repeatable)");

  auto* all = command("run-all", "run every verification suite", cmd_run_all);
  all->add_option("--phi", st.phis, "Young function spec (repeatable)");
  all->add_option("--system", st.systems, "system spec (repeatable)");
  all->add_option("--suite", st.suites, "restrict to these suites (repeatable)");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(std::move(args));
    CLI::App* sub = app.get_subcommands().front();
    if (!st.config.empty()) apply_config(app, sub, st.config);
    if (st.format != "json" && st.format != "csv") throw ParseError("--format must be json or csv");
    const Output result = handlers.at(sub)(st);
    if (st.out.empty()) {
      out << result.text;
    } else {
      write_atomically(st.out, result.text);
    }
    return result.code;
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace orlicz
