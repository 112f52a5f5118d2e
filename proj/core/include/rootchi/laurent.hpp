#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rootchi/rational.hpp"

namespace rootchi {

// Exponent vector; every entry is twice the actual exponent.
using Exponents = std::vector<int>;

// Graded lexicographic, descending: higher total degree first, then
// lexicographically larger exponent vectors first.
struct GrlexDescending {
  bool operator()(const Exponents& x, const Exponents& y) const;
};

class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexDescending>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<std::string> vars);
  LaurentPoly(std::vector<std::string> vars, TermMap terms);

  static LaurentPoly constant(const Rational& c, std::vector<std::string> vars = {});
  // c * v^(doubled/2) in a single variable.
  static LaurentPoly monomial(const std::string& var, int doubled, const Rational& c = 1);
  static LaurentPoly monomial(std::vector<std::string> vars, Exponents doubled,
                              const Rational& c = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Coefficient of the given doubled exponent vector (zero if absent).
  Rational coeff(const Exponents& e) const;
  Rational constant_term() const;
  std::optional<std::size_t> var_index(const std::string& v) const;
  // Min/max doubled exponent of variable i; requires nonzero.
  int min_exp(std::size_t i) const;
  int max_exp(std::size_t i) const;

  // Same polynomial expressed over a different ordering or superset of variables.
  LaurentPoly with_vars(const std::vector<std::string>& vars) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator*(LaurentPoly x, const Rational& c) { return x *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly x) { return x *= c; }

  // Negative k is allowed only for monomials.
  LaurentPoly pow(int k) const;

  // Equality up to variable ordering; constants compare equal across var sets.
  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y);
  friend bool operator!=(const LaurentPoly& x, const LaurentPoly& y) { return !(x == y); }

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  std::vector<std::string> vars_;
  TermMap terms_;

  friend LaurentPoly align_for(const LaurentPoly& target, const LaurentPoly& p);
};

// Quotient num/den of Laurent polynomials; only used where a division by a
// non-monomial cannot be cleared.
struct RationalPair {
  LaurentPoly num;
  LaurentPoly den;

  RationalPair() : num(), den(LaurentPoly::constant(1)) {}
  RationalPair(LaurentPoly n) : num(std::move(n)), den(LaurentPoly::constant(1)) {}
  RationalPair(LaurentPoly n, LaurentPoly d);

  // num/den as a Laurent polynomial; throws NotDivisible.
  LaurentPoly exact() const;
  bool is_polynomial() const;

  friend RationalPair operator+(const RationalPair& x, const RationalPair& y);
  friend RationalPair operator-(const RationalPair& x, const RationalPair& y);
  friend RationalPair operator*(const RationalPair& x, const RationalPair& y);
  friend bool operator==(const RationalPair& x, const RationalPair& y);
  friend bool operator!=(const RationalPair& x, const RationalPair& y) { return !(x == y); }

  std::string to_string() const;
};

// Quotient with p == d * q exactly; throws NotDivisible otherwise.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d);

// Replaces var by image.  Odd doubled exponents need a monomial image with
// coefficient 1 and even exponents; negative powers need a monomial image.
LaurentPoly substitute(const LaurentPoly& p, const std::string& var, const LaurentPoly& image);
// Replaces var^(1/2) by image, so var^(e/2) becomes image^e.
LaurentPoly substitute_half(const LaurentPoly& p, const std::string& var,
                            const LaurentPoly& image);
// Like substitute, but negative powers of a non-monomial image are kept in
// a denominator.
RationalPair substitute_pair(const LaurentPoly& p, const std::string& var,
                             const LaurentPoly& image);
// Applies the substitution to numerator and denominator.
RationalPair substitute_pair(const RationalPair& p, const std::string& var,
                             const LaurentPoly& image);

// Parses "c*v^(p/2) + ...".  If vars is empty, the sorted identifiers found
// in the text are used.
LaurentPoly parse_poly(const std::string& text, std::vector<std::string> vars = {});

}  // namespace rootchi
