#include "rootchi/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "rootchi/errors.hpp"

namespace rootchi {

namespace {

using QPoly = std::vector<Rational>;

std::mutex phi_mutex;
std::map<int, std::vector<Integer>> phi_cache;

std::vector<Integer> compute_cyclotomic(int m) {
  // x^m - 1 divided by Phi_d for every proper divisor d.
  std::vector<Integer> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& den = phi_cache.at(d);
    int dn = static_cast<int>(den.size()) - 1;
    int nn = static_cast<int>(num.size()) - 1;
    std::vector<Integer> q(nn - dn + 1, 0);
    for (int i = nn; i >= dn; --i) {
      Integer c = num[i];
      if (c == 0) continue;
      q[i - dn] = c;
      for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    num = q;
  }
  return num;
}

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo the monic integer polynomial phi.
QPoly reduce_mod(QPoly p, const std::vector<Integer>& phi) {
  int deg = static_cast<int>(phi.size()) - 1;
  for (int i = static_cast<int>(p.size()) - 1; i >= deg; --i) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    for (int j = 0; j <= deg; ++j) p[i - deg + j] -= c * Rational(phi[j]);
  }
  p.resize(deg, Rational(0));
  return p;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder over Q.
std::pair<QPoly, QPoly> poly_divmod(QPoly a, const QPoly& b) {
  trim(a);
  int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) return {{}, a};
  QPoly q(a.size() - b.size() + 1, Rational(0));
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    if (a[i] == 0) continue;
    Rational c = a[i] / b[db];
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  a.resize(db, Rational(0));
  trim(a);
  trim(q);
  return {q, a};
}

}  // namespace

const std::vector<Integer>& cyclotomic_poly(int m) {
  if (m < 1) throw InvariantError("cyclotomic polynomial of order < 1");
  std::lock_guard<std::mutex> lock(phi_mutex);
  auto it = phi_cache.find(m);
  if (it != phi_cache.end()) return it->second;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0 && !phi_cache.count(d)) phi_cache.emplace(d, compute_cyclotomic(d));
  return phi_cache.at(m);
}

int euler_phi(int m) { return static_cast<int>(cyclotomic_poly(m).size()) - 1; }

CycloNum::CycloNum(int order) : order_(order) {
  if (order < 1) throw InvariantError("cyclotomic order must be positive");
  coeffs_.assign(euler_phi(order), Rational(0));
}

CycloNum::CycloNum(int order, const Rational& c) : CycloNum(order) { coeffs_[0] = c; }

CycloNum::CycloNum(int order, std::vector<Rational> coeffs) : order_(order) {
  if (order < 1) throw InvariantError("cyclotomic order must be positive");
  coeffs_ = reduce_mod(std::move(coeffs), cyclotomic_poly(order));
}

bool CycloNum::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool CycloNum::is_integral() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

Rational CycloNum::rational_value() const {
  if (!is_rational()) throw InvariantError("cyclotomic number is not rational");
  return coeffs_[0];
}

CycloNum CycloNum::embed(int m) const {
  if (m == order_) return *this;
  if (m % order_ != 0) throw InvariantError("cannot embed order " + std::to_string(order_) +
                                            " into order " + std::to_string(m));
  int s = m / order_;
  QPoly p(static_cast<std::size_t>(coeffs_.size() == 0 ? 1 : (coeffs_.size() - 1) * s + 1),
          Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * s] = coeffs_[i];
  return CycloNum(m, std::move(p));
}

namespace {

int common_order(const CycloNum& x, const CycloNum& y) { return std::lcm(x.order(), y.order()); }

}  // namespace

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloNum operator+(const CycloNum& x, const CycloNum& y) {
  int m = common_order(x, y);
  CycloNum a = x.embed(m);
  CycloNum b = y.embed(m);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  return a;
}

CycloNum operator-(const CycloNum& x, const CycloNum& y) { return x + (-y); }

CycloNum operator*(const CycloNum& x, const CycloNum& y) {
  int m = common_order(x, y);
  CycloNum a = x.embed(m);
  CycloNum b = y.embed(m);
  return CycloNum(m, poly_mul(a.coeffs_, b.coeffs_));
}

CycloNum operator*(const CycloNum& x, const Rational& c) {
  CycloNum out = x;
  for (auto& v : out.coeffs_) v *= c;
  return out;
}

bool operator==(const CycloNum& x, const CycloNum& y) {
  if (x.order_ == y.order_) return x.coeffs_ == y.coeffs_;
  int m = common_order(x, y);
  return x.embed(m).coeffs_ == y.embed(m).coeffs_;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw InvariantError("inverse of zero in cyclotomic field");
  const auto& phi = cyclotomic_poly(order_);
  QPoly f(phi.begin(), phi.end());
  QPoly g = coeffs_;
  trim(g);
  // Extended Euclid: track s with s*g == r (mod f).
  QPoly r0 = f, r1 = g;
  QPoly s0 = {}, s1 = {Rational(1)};
  while (!(r1.size() == 1)) {
    auto [q, r] = poly_divmod(r0, r1);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw InvariantError("non-invertible cyclotomic element");
  }
  for (auto& c : s1) c /= r1[0];
  return CycloNum(order_, std::move(s1));
}

CycloNum CycloNum::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CycloNum result(order_, Rational(1));
  CycloNum base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

std::string CycloNum::to_string() const {
  std::ostringstream os;
  os << "cyclo(" << order_ << ")[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? ", " : "") << coeffs_[i].get_str();
  os << "]";
  return os.str();
}

std::string CycloNum::pretty() const {
  return is_rational() ? coeffs_[0].get_str() : to_string();
}

std::complex<double> CycloNum::approx() const {
  std::complex<double> sum = 0;
  const double pi = std::acos(-1.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    sum += coeffs_[i].get_d() * std::polar(1.0, 2 * pi * static_cast<double>(i) / order_);
  return sum;
}

CycloNum parse_cyclo(const std::string& text) {
  auto fail = [&]() -> CycloNum { throw ParseError("bad cyclotomic number '" + text + "'"); };
  auto open = text.find('(');
  auto close = text.find(')');
  auto lb = text.find('[');
  auto rb = text.rfind(']');
  if (text.rfind("cyclo", 0) != 0 || open == std::string::npos || close == std::string::npos ||
      lb == std::string::npos || rb == std::string::npos || lb < close || rb < lb)
    return fail();
  int order = 0;
  try {
    order = std::stoi(text.substr(open + 1, close - open - 1));
  } catch (const std::exception&) {
    return fail();
  }
  if (order < 1) return fail();
  std::vector<Rational> coeffs;
  std::string body = text.substr(lb + 1, rb - lb - 1);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) return fail();
    coeffs.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  if (static_cast<int>(coeffs.size()) != euler_phi(order)) return fail();
  return CycloNum(order, std::move(coeffs));
}

CycloNum root(int n, long k) {
  if (n < 1) throw InvariantError("root order must be positive");
  long m = 2L * n;
  long e = ((k % m) + m) % m;
  QPoly p(e + 1, Rational(0));
  p[e] = 1;
  return CycloNum(static_cast<int>(m), std::move(p));
}

namespace {

// Index of the single variable a polynomial uses, if any.
std::optional<std::size_t> single_var(const LaurentPoly& p) {
  std::optional<std::size_t> idx;
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) {
        if (idx && *idx != i) throw InvariantError("expected a one-variable polynomial");
        idx = i;
      }
  return idx;
}

CycloNum eval_scaled(const LaurentPoly& p, int n, long k, bool half) {
  long m = 2L * n;
  auto idx = single_var(p);
  QPoly acc(m, Rational(0));
  for (const auto& [e, c] : p.terms()) {
    long d = idx ? e[*idx] : 0;
    if (!half) {
      if (d % 2 != 0) throw InvariantError("half-integer exponent at an integer substitution");
      d /= 2;
    }
    long pos = ((d * k) % m + m) % m;
    acc[pos] += c;
  }
  return CycloNum(static_cast<int>(m), std::move(acc));
}

}  // namespace

CycloNum eval_at_root(const LaurentPoly& p, int n, long k) { return eval_scaled(p, n, k, false); }

CycloNum eval_half_at_root(const LaurentPoly& p, int n, long k) {
  return eval_scaled(p, n, k, true);
}

CycloNum eval_poly(const LaurentPoly& p,
                   const std::vector<std::pair<std::string, CycloNum>>& values, int order) {
  std::vector<const CycloNum*> vals(p.vars().size(), nullptr);
  for (std::size_t i = 0; i < p.vars().size(); ++i)
    for (const auto& [name, v] : values)
      if (name == p.vars()[i]) vals[i] = &v;
  std::vector<std::map<int, CycloNum>> powers(p.vars().size());
  CycloNum sum(order);
  for (const auto& [e, c] : p.terms()) {
    CycloNum term(order, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!vals[i]) throw InvariantError("no value for variable '" + p.vars()[i] + "'");
      if (e[i] % 2 != 0) throw InvariantError("half-integer exponent at an integer substitution");
      int k = e[i] / 2;
      auto it = powers[i].find(k);
      if (it == powers[i].end()) it = powers[i].emplace(k, vals[i]->pow(k)).first;
      term *= it->second;
    }
    sum += term;
  }
  return sum;
}

}  // namespace rootchi
