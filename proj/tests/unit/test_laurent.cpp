#include <doctest.h>

#include "random_objects.hpp"
#include "rootchi/errors.hpp"
#include "rootchi/laurent.hpp"

using namespace rootchi;

namespace {
LaurentPoly P(const std::string& s, std::vector<std::string> vars) { return parse_poly(s, std::move(vars)); }
}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK(P("t - 1", {"t"}) + P("1 + t^-1", {"t"}) == P("t + t^-1", {"t"}));
  CHECK(P("q - q^-1", {"q"}) * P("q + q^-1", {"q"}) == P("q^2 - q^-2", {"q"}));
  LaurentPoly zero = P("a - a^-1", {"a"}) * LaurentPoly();
  CHECK(zero.is_zero());
  CHECK(zero.terms().empty());
}

TEST_CASE("variable mismatch is reported") {
  CHECK_THROWS_AS(P("a", {"a"}) + P("t", {"t"}), InvariantError);
  CHECK(P("a", {"a"}) + LaurentPoly::constant(2) == P("a + 2", {"a"}));
}

TEST_CASE("substitution") {
  LaurentPoly pbar = P("-a^4 + a^2*q^2 + a^2*q^-2", {"a", "q"});
  LaurentPoly out = substitute(pbar, "a", LaurentPoly::monomial("q", 4));
  CHECK(out == P("-q^8 + q^6 + q^2", {"q"}));

  LaurentPoly delta = P("t - 1 + t^-1", {"t"});
  CHECK(substitute(delta, "t", LaurentPoly::monomial("t", -2)) == delta);

  LaurentPoly mono = P("3*a^2*q^-3", {"a", "q"});
  LaurentPoly flipped = substitute(substitute(mono, "a", P("-a", {"a"})), "q", P("-q", {"q"}));
  CHECK(flipped == -mono);

  // Identity image.
  CHECK(substitute(pbar, "q", P("q", {"q"})) == pbar);
}

TEST_CASE("substitution into a binomial with negative powers needs pair mode") {
  LaurentPoly p = P("z^-1 + z", {"z"});
  LaurentPoly zq = P("q - q^-1", {"q"});
  CHECK_THROWS_AS(substitute(p, "z", zq), InvariantError);
  RationalPair r = substitute_pair(p, "z", zq);
  CHECK(r == RationalPair(P("q^2 - 1 + q^-2", {"q"}), zq));
}

TEST_CASE("exact division") {
  CHECK(exact_div(P("a*z^-1 - a^-1*z^-1", {"a", "z"}), P("a - a^-1", {"a"})) == P("z^-1", {"z"}));
  CHECK(exact_div(P("q^2 - q^-2", {"q"}), P("q - q^-1", {"q"})) == P("q + q^-1", {"q"}));
  CHECK_THROWS_AS(exact_div(P("q^3 + 1", {"q"}), P("q - q^-1", {"q"})), NotDivisible);
  CHECK_THROWS_AS(exact_div(P("q", {"q"}), LaurentPoly()), InvariantError);
}

TEST_CASE("text round trip") {
  CHECK(P("t - 1 + t^-1", {"t"}).to_string() == "t - 1 + t^-1");
  LaurentPoly hopf = P("t^(1/2) - t^(-1/2)", {"t"});
  CHECK(hopf.coeff({1}) == 1);
  CHECK(hopf.coeff({-1}) == -1);
  CHECK(hopf.to_string() == "t^(1/2) - t^(-1/2)");
  CHECK(P("0", {"t"}).is_zero());
  CHECK(LaurentPoly().to_string() == "0");
  // Graded order: equal total degree falls back to larger exponents first.
  CHECK(P("1/2*a^-2*z^2 - 3", {"a", "z"}).to_string() == "-3 + 1/2*a^-2*z^2");
  CHECK_THROWS_AS(P("t^", {"t"}), ParseError);
  CHECK_THROWS_AS(P("2**t", {"t"}), ParseError);
}

TEST_CASE("ring properties on random polynomials") {
  testing::Rng rng(17);
  const std::vector<std::string> vars{"a", "z"};
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly x = testing::random_poly(rng, vars, 4, 3, true);
    LaurentPoly y = testing::random_poly(rng, vars, 4, 3, true);
    LaurentPoly w = testing::random_poly(rng, vars, 3, 3, true);
    CHECK((x * y) * w == x * (y * w));
    CHECK(x * (y + w) == x * y + x * w);
    CHECK(x - x == LaurentPoly());
    CHECK(parse_poly(x.to_string(), vars) == x);
    if (!y.is_zero()) CHECK(exact_div(x * y, y) == x);
  }
}

TEST_CASE("parity lemma on monomials") {
  testing::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly p = testing::random_poly(rng, {"a", "q"}, 5, 4);
    LaurentPoly flipped = substitute(substitute(p, "a", P("-a", {"a"})), "q", P("-q", {"q"}));
    bool all_even = true;
    for (const auto& [e, c] : p.terms())
      if (((e[0] + e[1]) / 2) % 2 != 0) all_even = false;
    CHECK((flipped == p) == all_even);
  }
}
