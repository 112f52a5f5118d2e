#pragma once

#include <complex>
#include <string>
#include <vector>

#include "rootchi/laurent.hpp"
#include "rootchi/rational.hpp"

namespace rootchi {

// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<Integer>& cyclotomic_poly(int m);
int euler_phi(int m);

// Element of Q(x), x a primitive root of unity of the given order, stored in
// the power basis of Q[x]/Phi_order.  zeta_n = e^{pi i/n} has order 2n.
class CycloNum {
 public:
  CycloNum() : CycloNum(2) {}
  explicit CycloNum(int order);
  CycloNum(int order, const Rational& c);
  CycloNum(int order, std::vector<Rational> coeffs);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_integral() const;
  Rational rational_value() const;

  // Same element viewed in a field of order m (which must be a multiple).
  CycloNum embed(int m) const;

  CycloNum operator-() const;
  friend CycloNum operator+(const CycloNum& x, const CycloNum& y);
  friend CycloNum operator-(const CycloNum& x, const CycloNum& y);
  friend CycloNum operator*(const CycloNum& x, const CycloNum& y);
  friend CycloNum operator*(const CycloNum& x, const Rational& c);
  CycloNum& operator+=(const CycloNum& y) { return *this = *this + y; }
  CycloNum& operator-=(const CycloNum& y) { return *this = *this - y; }
  CycloNum& operator*=(const CycloNum& y) { return *this = *this * y; }
  friend bool operator==(const CycloNum& x, const CycloNum& y);
  friend bool operator!=(const CycloNum& x, const CycloNum& y) { return !(x == y); }

  CycloNum inverse() const;
  CycloNum pow(long k) const;

  // "cyclo(order)[c0, c1, ...]"
  std::string to_string() const;
  // Rational text when possible, otherwise the cyclo form.
  std::string pretty() const;
  // Floating-point value, for display only.
  std::complex<double> approx() const;

 private:
  int order_;
  std::vector<Rational> coeffs_;
};

CycloNum parse_cyclo(const std::string& text);

// zeta_n^k = e^{pi i k/n}.
CycloNum root(int n, long k);

// One-variable p with v -> zeta_n^k; p must have integer exponents.
CycloNum eval_at_root(const LaurentPoly& p, int n, long k);
// One-variable p with v^(1/2) -> zeta_n^k.
CycloNum eval_half_at_root(const LaurentPoly& p, int n, long k);
// Multi-variable p with var -> value; exponents must be integral.  Negative
// powers use field inverses.
CycloNum eval_poly(const LaurentPoly& p, const std::vector<std::pair<std::string, CycloNum>>& values,
                   int order);

}  // namespace rootchi
