#include "rootchi/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "rootchi/errors.hpp"

namespace rootchi {

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) throw ParseError("bad rational '" + text + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

bool GrlexDescending::operator()(const Exponents& x, const Exponents& y) const {
  long sx = std::accumulate(x.begin(), x.end(), 0L);
  long sy = std::accumulate(y.begin(), y.end(), 0L);
  if (sx != sy) return sx > sy;
  return x > y;
}

namespace {

std::set<std::string> used_vars(const LaurentPoly& p) {
  std::set<std::string> out;
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) out.insert(p.vars()[i]);
  return out;
}

bool covers(const std::vector<std::string>& vars, const std::set<std::string>& used) {
  return std::all_of(used.begin(), used.end(), [&](const std::string& v) {
    return std::find(vars.begin(), vars.end(), v) != vars.end();
  });
}

}  // namespace

LaurentPoly::LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

LaurentPoly::LaurentPoly(std::vector<std::string> vars, TermMap terms)
    : vars_(std::move(vars)) {
  for (auto& [e, c] : terms) {
    if (e.size() != vars_.size()) throw InvariantError("exponent vector length mismatch");
    add_term(e, c);
  }
}

LaurentPoly LaurentPoly::constant(const Rational& c, std::vector<std::string> vars) {
  LaurentPoly p(std::move(vars));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const std::string& var, int doubled, const Rational& c) {
  return monomial(std::vector<std::string>{var}, Exponents{doubled}, c);
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, Exponents doubled,
                                  const Rational& c) {
  if (vars.size() != doubled.size()) throw InvariantError("exponent vector length mismatch");
  LaurentPoly p(std::move(vars));
  p.add_term(doubled, c);
  return p;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool LaurentPoly::is_constant() const {
  for (const auto& [e, c] : terms_)
    if (std::any_of(e.begin(), e.end(), [](int x) { return x != 0; })) return false;
  return true;
}

Rational LaurentPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::constant_term() const { return coeff(Exponents(vars_.size(), 0)); }

std::optional<std::size_t> LaurentPoly::var_index(const std::string& v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

int LaurentPoly::min_exp(std::size_t i) const {
  if (terms_.empty()) throw InvariantError("min_exp of zero polynomial");
  int m = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) m = std::min(m, e[i]);
  return m;
}

int LaurentPoly::max_exp(std::size_t i) const {
  if (terms_.empty()) throw InvariantError("max_exp of zero polynomial");
  int m = terms_.begin()->first[i];
  for (const auto& [e, c] : terms_) m = std::max(m, e[i]);
  return m;
}

LaurentPoly LaurentPoly::with_vars(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  if (!covers(vars, used_vars(*this))) throw InvariantError("variable mismatch");
  std::vector<int> src(vars.size(), -1);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto idx = var_index(vars[i]);
    if (idx) src[i] = static_cast<int>(*idx);
  }
  LaurentPoly out(vars);
  for (const auto& [e, c] : terms_) {
    Exponents f(vars.size(), 0);
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (src[i] >= 0) f[i] = e[src[i]];
    out.add_term(f, c);
  }
  return out;
}

// Re-expresses p over the variables of target, or throws on a genuine mismatch.
LaurentPoly align_for(const LaurentPoly& target, const LaurentPoly& p) {
  if (p.vars_ == target.vars_) return p;
  return p.with_vars(target.vars_);
}

namespace {

// Picks a common variable list for a binary operation.
std::vector<std::string> common_vars(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.vars() == y.vars()) return x.vars();
  if (covers(x.vars(), used_vars(y))) return x.vars();
  if (covers(y.vars(), used_vars(x))) return y.vars();
  throw InvariantError("variable mismatch");
}

}  // namespace

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  auto vars = common_vars(*this, o);
  if (vars != vars_) *this = with_vars(vars);
  LaurentPoly other = align_for(*this, o);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  auto vars = common_vars(*this, o);
  if (vars != vars_) *this = with_vars(vars);
  LaurentPoly other = align_for(*this, o);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  auto vars = common_vars(x, y);
  LaurentPoly a = x.with_vars(vars);
  LaurentPoly b = y.with_vars(vars);
  LaurentPoly out(vars);
  Exponents e(vars.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) {
    if (!is_monomial()) throw InvariantError("negative power of a non-monomial");
    const auto& [e, c] = *terms_.begin();
    Exponents f(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) f[i] = -e[i] * (-k);
    Rational inv = 1 / c;
    Rational cc = 1;
    for (int i = 0; i < -k; ++i) cc *= inv;
    return monomial(vars_, f, cc);
  }
  LaurentPoly result = constant(1, vars_);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.vars_ == y.vars_) return x.terms_ == y.terms_;
  auto ux = used_vars(x);
  if (ux != used_vars(y)) return false;
  std::vector<std::string> vars(ux.begin(), ux.end());
  return x.with_vars(vars).terms_ == y.with_vars(vars).terms_;
}

namespace {

std::string exponent_text(int doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return "(" + std::to_string(doubled) + "/2)";
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] != 2) mono += "^" + exponent_text(e[i]);
    }
    Rational a = abs(c);
    bool neg = c < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (mono.empty())
      out += a.get_str();
    else if (a == 1)
      out += mono;
    else
      out += a.get_str() + "*" + mono;
  }
  return out;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw InvariantError("division by zero polynomial");
  auto vars = common_vars(p, d);
  LaurentPoly r = p.with_vars(vars);
  LaurentPoly dd = d.with_vars(vars);
  LaurentPoly q(vars);
  if (r.is_zero()) return q;
  const std::size_t nv = vars.size();
  std::vector<int> lo(nv), hi(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    lo[i] = r.min_exp(i) - dd.min_exp(i);
    hi[i] = r.max_exp(i) - dd.max_exp(i);
  }
  const auto& [ld_e, ld_c] = *dd.terms().begin();
  while (!r.is_zero()) {
    const auto& [lr_e, lr_c] = *r.terms().begin();
    Exponents m(nv);
    for (std::size_t i = 0; i < nv; ++i) {
      m[i] = lr_e[i] - ld_e[i];
      if (m[i] < lo[i] || m[i] > hi[i])
        throw NotDivisible(p.to_string() + " is not divisible by " + d.to_string());
    }
    LaurentPoly mono = LaurentPoly::monomial(vars, m, lr_c / ld_c);
    q += mono;
    r -= mono * dd;
  }
  return q;
}

namespace {

struct SubstPlan {
  std::vector<std::string> out_vars;
  std::size_t var_idx;
  std::vector<int> keep;  // source index for each output var, -1 if from image only
};

SubstPlan plan_for(const LaurentPoly& p, const std::string& var, const LaurentPoly& image) {
  auto idx = p.var_index(var);
  if (!idx) throw InvariantError("variable '" + var + "' not present");
  SubstPlan plan;
  plan.var_idx = *idx;
  for (std::size_t i = 0; i < p.vars().size(); ++i)
    if (i != *idx) plan.out_vars.push_back(p.vars()[i]);
  for (const auto& v : used_vars(image))
    if (std::find(plan.out_vars.begin(), plan.out_vars.end(), v) == plan.out_vars.end())
      plan.out_vars.push_back(v);
  for (const auto& v : plan.out_vars) {
    auto j = p.var_index(v);
    plan.keep.push_back(j && *j != *idx ? static_cast<int>(*j) : -1);
  }
  return plan;
}

// Applies var^(e/2) -> power(e) termwise.
template <class PowerFn>
LaurentPoly apply_subst(const LaurentPoly& p, const SubstPlan& plan, PowerFn power) {
  LaurentPoly out(plan.out_vars);
  std::map<int, LaurentPoly> grouped;
  // Group terms by the exponent of the substituted variable.
  for (const auto& [e, c] : p.terms()) {
    Exponents f(plan.out_vars.size(), 0);
    for (std::size_t i = 0; i < f.size(); ++i)
      if (plan.keep[i] >= 0) f[i] = e[plan.keep[i]];
    auto [it, ins] = grouped.try_emplace(e[plan.var_idx], LaurentPoly(plan.out_vars));
    it->second += LaurentPoly::monomial(plan.out_vars, f, c);
  }
  for (const auto& [k, rest] : grouped) out += rest * power(k).with_vars(plan.out_vars);
  return out;
}

LaurentPoly sqrt_monomial(const LaurentPoly& image) {
  if (!image.is_monomial() || image.terms().begin()->second != 1)
    throw InvariantError("half-integer power of " + image.to_string() + " is undefined");
  const auto& e = image.terms().begin()->first;
  Exponents h(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] % 2 != 0)
      throw InvariantError("half-integer power of " + image.to_string() + " is undefined");
    h[i] = e[i] / 2;
  }
  return LaurentPoly::monomial(image.vars(), h);
}

}  // namespace

LaurentPoly substitute(const LaurentPoly& p, const std::string& var, const LaurentPoly& image) {
  if (!p.var_index(var)) return p;
  auto plan = plan_for(p, var, image);
  std::optional<LaurentPoly> root;
  return apply_subst(p, plan, [&](int k) {
    if (k % 2 == 0) {
      if (k < 0 && !image.is_monomial())
        throw InvariantError("negative power of " + image.to_string() +
                             " needs rational-pair substitution");
      return image.pow(k / 2);
    }
    if (!root) root = sqrt_monomial(image);
    return root->pow(k);
  });
}

LaurentPoly substitute_half(const LaurentPoly& p, const std::string& var,
                            const LaurentPoly& image) {
  if (!p.var_index(var)) return p;
  auto plan = plan_for(p, var, image);
  return apply_subst(p, plan, [&](int k) {
    if (k < 0 && !image.is_monomial())
      throw InvariantError("negative power of " + image.to_string() +
                           " needs rational-pair substitution");
    return image.pow(k);
  });
}

RationalPair substitute_pair(const LaurentPoly& p, const std::string& var,
                             const LaurentPoly& image) {
  auto idx = p.var_index(var);
  if (!idx || p.is_zero() || image.is_monomial()) return RationalPair(substitute(p, var, image));
  int m = p.min_exp(*idx);
  if (m >= 0) return RationalPair(substitute(p, var, image));
  if (m % 2 != 0) throw InvariantError("half-integer power of a binomial image");
  LaurentPoly lifted = p * LaurentPoly::monomial(var, -m);
  return RationalPair(substitute(lifted, var, image), image.pow(-m / 2));
}

RationalPair substitute_pair(const RationalPair& p, const std::string& var,
                             const LaurentPoly& image) {
  RationalPair n = substitute_pair(p.num, var, image);
  RationalPair d = substitute_pair(p.den, var, image);
  return RationalPair(n.num * d.den, n.den * d.num);
}

RationalPair::RationalPair(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw InvariantError("rational pair with zero denominator");
}

LaurentPoly RationalPair::exact() const { return exact_div(num, den); }

bool RationalPair::is_polynomial() const {
  try {
    exact();
    return true;
  } catch (const NotDivisible&) {
    return false;
  }
}

RationalPair operator+(const RationalPair& x, const RationalPair& y) {
  if (x.den == y.den) return RationalPair(x.num + y.num, x.den);
  return RationalPair(x.num * y.den + y.num * x.den, x.den * y.den);
}

RationalPair operator-(const RationalPair& x, const RationalPair& y) {
  if (x.den == y.den) return RationalPair(x.num - y.num, x.den);
  return RationalPair(x.num * y.den - y.num * x.den, x.den * y.den);
}

RationalPair operator*(const RationalPair& x, const RationalPair& y) {
  return RationalPair(x.num * y.num, x.den * y.den);
}

bool operator==(const RationalPair& x, const RationalPair& y) {
  return x.num * y.den == y.num * x.den;
}

std::string RationalPair::to_string() const {
  if (den == LaurentPoly::constant(1)) return num.to_string();
  return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& s) : s_(s) {}

  struct Factor {
    Rational coeff = 1;
    std::map<std::string, int> exps;
  };
  using Term = Factor;

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip();
    if (at_end()) throw ParseError("empty polynomial");
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = get() == '-';
    terms.push_back(term(neg));
    while (true) {
      skip();
      if (at_end()) break;
      char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      terms.push_back(term(op == '-'));
    }
    return terms;
  }

 private:
  Term term(bool neg) {
    Term t;
    factor(t);
    while (true) {
      skip();
      if (at_end()) break;
      char c = peek();
      if (c == '*') {
        ++pos_;
        factor(t);
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(') {
        factor(t);
      } else {
        break;
      }
    }
    if (neg) t.coeff = -t.coeff;
    return t;
  }

  void factor(Term& t) {
    skip();
    if (at_end()) fail("unexpected end");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      skip();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip();
        num += "/" + digits();
      }
      t.coeff *= parse_rational(num);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
        name += get();
      int e = 2;
      skip();
      if (!at_end() && peek() == '^') {
        ++pos_;
        e = exponent();
      }
      t.exps[name] += e;
    } else if (c == '(') {
      // Parenthesized signed coefficient such as (-1).
      ++pos_;
      skip();
      bool neg = false;
      if (peek() == '+' || peek() == '-') neg = get() == '-';
      skip();
      std::string num = digits();
      skip();
      if (peek() == '/') {
        ++pos_;
        skip();
        num += "/" + digits();
      }
      skip();
      expect(')');
      Rational r = parse_rational(num);
      t.coeff *= neg ? Rational(-r) : r;
    } else {
      fail("unexpected character");
    }
  }

  int exponent() {
    skip();
    bool paren = false;
    if (peek() == '(' || peek() == '{') {
      paren = true;
      ++pos_;
      skip();
    }
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = get() == '-';
    skip();
    long p = std::stol(digits());
    long q = 1;
    skip();
    if (paren && !at_end() && peek() == '/') {
      ++pos_;
      skip();
      q = std::stol(digits());
    }
    if (paren) {
      skip();
      if (peek() != ')' && peek() != '}') fail("expected ')'");
      ++pos_;
    }
    if (q == 0 || (2 * p) % q != 0) fail("exponent must be a multiple of 1/2");
    long d = 2 * p / q;
    return static_cast<int>(neg ? -d : d);
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += get();
    if (out.empty()) fail("expected digits");
    return out;
  }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial '" + s_ + "': " + msg + " at position " +
                     std::to_string(pos_));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(const std::string& text, std::vector<std::string> vars) {
  auto terms = PolyParser(text).parse();
  if (vars.empty()) {
    std::set<std::string> names;
    for (const auto& t : terms)
      for (const auto& [v, e] : t.exps) names.insert(v);
    vars.assign(names.begin(), names.end());
  }
  LaurentPoly out(vars);
  for (const auto& t : terms) {
    Exponents e(vars.size(), 0);
    for (const auto& [v, k] : t.exps) {
      auto it = std::find(vars.begin(), vars.end(), v);
      if (it == vars.end()) throw ParseError("unknown variable '" + v + "' in '" + text + "'");
      e[it - vars.begin()] += k;
    }
    out += LaurentPoly::monomial(vars, e, t.coeff);
  }
  return out;
}

}  // namespace rootchi
