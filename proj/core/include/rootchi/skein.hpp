#pragma once

#include <map>
#include <vector>

#include "rootchi/laurent.hpp"
#include "rootchi/linkdiag.hpp"

namespace rootchi {

// Crossing bound for the skein recursion: ROOTCHI_MAX_CROSSINGS or 14.
int max_crossings();

// HOMFLY-PT invariant in the variables (a, z) with z = q - q^-1.
struct HomflyInvariant {
  LaurentPoly unreduced_az;  // P, unknot = (a - a^-1) z^-1
  LaurentPoly quotient_az;   // Q with P = (a - a^-1) Q

  LaurentPoly reduced_az() const;  // z Q, unknot = 1
  LaurentPoly middle_az() const;   // -Q, unknot = -z^-1
};

// Memoized skein evaluator; the cache lives as long as the engine.
class SkeinEngine {
 public:
  explicit SkeinEngine(int bound = max_crossings()) : bound_(bound) {}
  LaurentPoly unreduced(const LinkDiagram& d);
  std::size_t cache_size() const { return memo_.size(); }

 private:
  LaurentPoly evaluate(const LinkDiagram& d);
  LaurentPoly connected(const LinkDiagram& piece);

  int bound_;
  std::map<std::vector<int>, LaurentPoly> memo_;
};

// (a - a^-1) z^-1
LaurentPoly unknot_value();
// z = q - q^-1 as a polynomial in q.
LaurentPoly z_in_q();
// [n]_q = (q^n - q^-n)/(q - q^-1)
LaurentPoly quantum_integer(int n);

HomflyInvariant homfly(const LinkDiagram& d);
LaurentPoly homfly_unreduced(const LinkDiagram& d);
LaurentPoly homfly_reduced(const LinkDiagram& d);
LaurentPoly homfly_middle(const LinkDiagram& d);
// An (a, z) polynomial rewritten in (a, q); a pair when z-powers are negative.
RationalPair az_to_aq(const LaurentPoly& p);

// Conway polynomial: reduced HOMFLY-PT at a = 1, in z.
LaurentPoly conway_from(const HomflyInvariant& h);
// Delta(t) = C(t^(1/2) - t^(-1/2)), in t.
LaurentPoly alexander_from(const HomflyInvariant& h);
LaurentPoly alexander(const LinkDiagram& d);

// P(q^n, q) cleared of z-denominators, or its quotient by [n]_q.
LaurentPoly sln_from(const HomflyInvariant& h, int n, bool reduced);
LaurentPoly sln_poly(const LinkDiagram& d, int n, bool reduced);

}  // namespace rootchi
