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
#include "orlicz/spec_language.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <deque>
#include <fstream>
#include <memory>
#include <sstream>

namespace orlicz {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

// Comma tokens of a rho spec; "head:rest" tokens are split so that the rest
// is read as the next token.
class RhoTokens {
 public:
  explicit RhoTokens(const std::string& s) {
    for (auto& t : split(s, ',')) toks_.push_back(t);
  }
  bool empty() const { return toks_.empty(); }
  std::string next() {
    if (toks_.empty()) throw ParseError("rho spec ended early");
    std::string t = toks_.front();
    toks_.pop_front();
    return t;
  }
  void push_front(std::string t) { toks_.push_front(std::move(t)); }

 private:
  std::deque<std::string> toks_;
};

RhoFunction read_rho(RhoTokens& toks) {
  std::string tok = toks.next();
  std::string head = tok, rest;
  const auto colon = tok.find(':');
  if (colon != std::string::npos) {
    head = tok.substr(0, colon);
    rest = tok.substr(colon + 1);
  }
  if (head == "one" || head == "id" || head == "min1" || head == "log1p") {
    if (colon != std::string::npos) throw ParseError("rho '" + head + "' takes no argument");
    if (head == "one") return rho_one();
    if (head == "id") return rho_id();
    if (head == "min1") return rho_min1();
    return rho_log1p();
  }
  if (head == "pow") {
    const double r = parse_real(rest);
    if (!(r >= 0 && r <= 1)) throw ParseError("rho pow:r needs r in [0, 1]");
    return rho_power(r);
  }
  if (head == "affine") {
    const double a = parse_real(rest);
    const double b = parse_real(toks.next());
    const RhoFunction first = read_rho(toks);
    const RhoFunction second = read_rho(toks);
    return rho_affine(a, b, first, second);
  }
  if (head == "compose") {
    if (rest.empty()) throw ParseError("compose needs two rho arguments");
    toks.push_front(rest);
    const RhoFunction outer = read_rho(toks);
    const RhoFunction inner = read_rho(toks);
    return rho_compose(outer, inner);
  }
  throw ParseError("unknown rho '" + tok + "'");
}

// Recursive-descent parser for rule expressions in n.
class RuleParser {
 public:
  using Fn = std::function<double(double)>;
  explicit RuleParser(std::string s) : s_(std::move(s)) {}

  Fn parse() {
    Fn f = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_) + "'");
    return f;
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError("rule '" + s_ + "': " + what); }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Fn expr() {
    Fn lhs = term();
    for (;;) {
      if (eat('+')) {
        Fn rhs = term();
        lhs = [lhs, rhs](double n) { return lhs(n) + rhs(n); };
      } else if (eat('-')) {
        Fn rhs = term();
        lhs = [lhs, rhs](double n) { return lhs(n) - rhs(n); };
      } else {
        return lhs;
      }
    }
  }
  Fn term() {
    Fn lhs = unary();
    for (;;) {
      if (eat('*')) {
        Fn rhs = unary();
        lhs = [lhs, rhs](double n) { return lhs(n) * rhs(n); };
      } else if (eat('/')) {
        Fn rhs = unary();
        lhs = [lhs, rhs](double n) { return lhs(n) / rhs(n); };
      } else {
        return lhs;
      }
    }
  }
  Fn unary() {
    if (eat('-')) {
      Fn inner = unary();
      return [inner](double n) { return -inner(n); };
    }
    if (eat('+')) return unary();
    return power();
  }
  Fn power() {
    Fn base = primary();
    if (eat('^')) {
      Fn ex = unary();
      return [base, ex](double n) { return std::pow(base(n), ex(n)); };
    }
    return base;
  }
  Fn primary() {
    skip();
    if (pos_ >= s_.size()) fail("expression ended early");
    if (eat('(')) {
      Fn inner = expr();
      if (!eat(')')) fail("missing ')'");
      return inner;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
        std::size_t p = pos_ + 1;
        if (p < s_.size() && (s_[p] == '+' || s_[p] == '-')) ++p;
        if (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
          pos_ = p;
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
      }
      const double v = parse_real(s_.substr(start, pos_ - start));
      return [v](double) { return v; };
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      if (name == "n") return [](double n) { return n; };
      double (*fn)(double) = nullptr;
      if (name == "log") fn = [](double x) { return std::log(x); };
      if (name == "log1p") fn = [](double x) { return std::log1p(x); };
      if (name == "exp") fn = [](double x) { return std::exp(x); };
      if (name == "sqrt") fn = [](double x) { return std::sqrt(x); };
      if (name == "abs") fn = [](double x) { return std::abs(x); };
      if (!fn) fail("unknown name '" + name + "'");
      if (!eat('(')) fail("'" + name + "' needs parentheses");
      Fn inner = expr();
      if (!eat(')')) fail("missing ')'");
      return [fn, inner](double n) { return fn(inner(n)); };
    }
    fail(std::string("unexpected '") + c + "'");
  }
};

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  for (const auto& item : split(text, ';')) {
    try {
      out.push_back(parse_real(trim(item)));
    } catch (const ParseError&) {
      throw ParseError(std::string(what) + ": bad list entry '" + item + "'");
    }
  }
  return out;
}

}  // namespace

double parse_real(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw ParseError("expected a number, got nothing");
  double v = 0;
  const char* first = t.data();
  if (*first == '+') ++first;
  const auto res = std::from_chars(first, t.data() + t.size(), v);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size() || std::isnan(v))
    throw ParseError("expected a number, got '" + t + "'");
  return v;
}

long parse_integer(const std::string& text) {
  const std::string t = trim(text);
  long v = 0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size())
    throw ParseError("expected an integer, got '" + t + "'");
  return v;
}

RhoFunction parse_rho(const std::string& spec) {
  RhoTokens toks(trim(spec));
  RhoFunction rho = read_rho(toks);
  if (!toks.empty()) throw ParseError("trailing input after rho spec '" + spec + "'");
  return rho;
}

YoungFunction parse_phi(const std::string& raw) {
  const std::string spec = trim(raw);
  if (spec == "expm1t") return make_expm1t();
  if (starts_with(spec, "power:")) {
    const double p = parse_real(spec.substr(6));
    if (!(p > 1) || !std::isfinite(p)) throw ParseError("power:p needs 1 < p < inf");
    return make_power(p);
  }
  if (starts_with(spec, "classp:")) {
    const std::string rest = spec.substr(7);
    const auto c1 = rest.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : rest.find(',', c1 + 1);
    if (c2 == std::string::npos) throw ParseError("classp needs p,q,rho");
    const double p = parse_real(rest.substr(0, c1));
    const double q = parse_real(rest.substr(c1 + 1, c2 - c1 - 1));
    const RhoFunction rho = parse_rho(rest.substr(c2 + 1));
    try {
      return make_class_p(ClassPSpec(p, q, rho));
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("classp: ") + e.what());
    } catch (const ConstructionError& e) {
      throw ParseError(std::string("classp: ") + e.what());
    }
  }
  if (starts_with(spec, "conjugate-of:")) return complementary(parse_phi(spec.substr(13)));
  throw ParseError("unknown Young function spec '" + spec + "'");
}

std::function<double(double)> parse_rule(const std::string& expr) { return RuleParser(expr).parse(); }

SampledFunction parse_function(const std::string& raw, double tau) {
  const std::string spec = trim(raw);
  if (starts_with(spec, "file:")) return read_step_csv(spec.substr(5));
  if (!(tau > 0)) throw ParseError("horizon must be positive");
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("unknown function spec '" + spec + "'");
  const std::string head = spec.substr(0, colon);
  const auto args = split(spec.substr(colon + 1), ',');
  auto arg = [&](std::size_t i) { return parse_real(args.at(i)); };
  try {
    if (head == "exp" && args.size() == 2) return SampledFunction::exp(arg(0), arg(1), 0.0, tau);
    if (head == "const" && args.size() == 1) return SampledFunction::constant(arg(0), 0.0, tau);
    if (head == "pow" && args.size() == 2) return SampledFunction::power(arg(0), 0.0, arg(1), 0.0, tau);
  } catch (const PreconditionError& e) {
    throw ParseError("function '" + spec + "': " + e.what());
  }
  throw ParseError("unknown function spec '" + spec + "'");
}

SampledFunction read_step_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read step function file '" + path + "'");
  std::vector<double> breaks;
  std::vector<double> values;
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto cells = split(line, ',');
    if (cells.size() != 3) throw ParseError(path + ":" + std::to_string(row) + ": need left,right,value");
    double l = 0, r = 0, v = 0;
    try {
      l = parse_real(cells[0]);
      r = parse_real(cells[1]);
      v = parse_real(cells[2]);
    } catch (const ParseError&) {
      if (breaks.empty() && row == 1) continue;  // header
      throw ParseError(path + ":" + std::to_string(row) + ": bad number");
    }
    if (breaks.empty()) {
      breaks.push_back(l);
    } else if (l != breaks.back()) {
      throw ParseError(path + ":" + std::to_string(row) + ": pieces must be contiguous");
    }
    breaks.push_back(r);
    values.push_back(v);
  }
  if (values.empty()) throw ParseError("step function file '" + path + "' has no pieces");
  try {
    return SampledFunction::step(std::move(breaks), std::move(values));
  } catch (const PreconditionError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string step_csv(const SampledFunction& f) {
  if (f.kind() != FunctionKind::step) throw UnsupportedError("step_csv: step functions only");
  std::ostringstream os;
  os << "left,right,value\n";
  const auto& br = f.breaks();
  const auto& v = f.values();
  for (std::size_t i = 0; i < v.size(); ++i)
    os << numeric::format_number(br[i]) << "," << numeric::format_number(br[i + 1]) << ","
       << numeric::format_number(v[i]) << "\n";
  return os.str();
}

SystemSpec parse_system_spec(const std::string& raw) {
  const std::string spec = trim(raw);
  if (!starts_with(spec, "diag:")) throw ParseError("system spec must start with 'diag:'");
  SystemSpec out;
  bool have_r = false, have_n = false;
  for (const auto& item : split(spec.substr(5), ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("system spec: expected key=value, got '" + item + "'");
    const std::string key = trim(item.substr(0, eq));
    const std::string val = trim(item.substr(eq + 1));
    if (key == "rule") {
      out.rule = val;
      parse_rule(val);
    } else if (key == "eig") {
      out.eigenvalues = parse_list(val, "eig");
    } else if (key == "N") {
      out.N = parse_integer(val);
      have_n = true;
    } else if (key == "r") {
      out.r = parse_real(val);
      have_r = true;
    } else if (key == "weights") {
      if (val == "default") {
        out.weights = SystemSpec::Weights::default_rule;
      } else if (starts_with(val, "scaled:")) {
        out.weights = SystemSpec::Weights::scaled;
        out.scale = parse_real(val.substr(7));
      } else {
        out.weights = SystemSpec::Weights::list;
        out.weight_list = parse_list(val, "weights");
      }
    } else {
      throw ParseError("system spec: unknown key '" + key + "'");
    }
  }
  if (out.rule.empty() == out.eigenvalues.empty()) throw ParseError("system spec: give exactly one of rule= or eig=");
  if (!out.rule.empty() && !have_n) throw ParseError("system spec: rule= needs N=");
  if (!out.eigenvalues.empty()) {
    if (have_n && out.N != static_cast<long>(out.eigenvalues.size()))
      throw ParseError("system spec: N disagrees with the eigenvalue list");
    out.N = static_cast<long>(out.eigenvalues.size());
  }
  if (out.N < 1 || out.N > 1'000'000) throw ParseError("system spec: N must lie in [1, 1e6]");
  if (!have_r) out.r = 2;
  if (!(out.r >= 1) || !std::isfinite(out.r)) throw ParseError("system spec: r must lie in [1, inf)");
  if (out.weights == SystemSpec::Weights::list && static_cast<long>(out.weight_list.size()) != out.N)
    throw ParseError("system spec: need one weight per mode");
  return out;
}

DiagonalSystem build_system(const SystemSpec& spec, const YoungFunction& phi) {
  std::vector<double> eig = spec.eigenvalues;
  if (!spec.rule.empty()) {
    const auto rule = parse_rule(spec.rule);
    eig.clear();
    for (long n = 1; n <= spec.N; ++n) eig.push_back(rule(static_cast<double>(n)));
  }
  for (double l : eig)
    if (!(l <= 0) || !std::isfinite(l))
      throw ParseError("system spec: eigenvalues must be finite and <= 0 (got " + numeric::format_number(l) + ")");
  DiagonalSystem sys = [&] {
    try {
      switch (spec.weights) {
        case SystemSpec::Weights::default_rule: return make_diagonal_system(eig, spec.r, phi);
        case SystemSpec::Weights::scaled: return make_diagonal_system(eig, spec.r, phi, spec.scale);
        case SystemSpec::Weights::list: return make_diagonal_system(eig, spec.r, spec.weight_list);
      }
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("system spec: ") + e.what());
    }
    throw ParseError("system spec: bad weights");
  }();
  sys.rule = spec.rule;
  return sys;
}

DiagonalSystem parse_system(const std::string& spec, const YoungFunction& phi) {
  return build_system(parse_system_spec(spec), phi);
}

}  // namespace orlicz
