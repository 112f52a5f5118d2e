#pragma once

#include "rootchi/laurent.hpp"
#include "rootchi/linkdiag.hpp"

namespace rootchi {

// Alexander polynomial up to units +-t^k, stored with lowest exponent 0 and
// positive leading coefficient.  Variable t.
struct AlexClass {
  LaurentPoly poly;
  int ell = 1;
};

// Fraction-free determinant of a square matrix over Z[t^+-1].
LaurentPoly bareiss_det(std::vector<std::vector<LaurentPoly>> m);

// Wirtinger/Fox calculus class of the diagram; zero for split diagrams.
AlexClass alex_matrix_poly(const LinkDiagram& d);

struct SymmetricAlex {
  LaurentPoly poly;      // in t, half-integer exponents allowed
  bool sign_ambiguous;   // true for links: only +-poly is determined
};

// The symmetric unit multiple; sign fixed by Delta(1) = 1 for knots.
SymmetricAlex normalize_symmetric(const AlexClass& c);

}  // namespace rootchi
