#include <doctest.h>

#include <cstdlib>

#include "rootchi/corpus.hpp"
#include "rootchi/errors.hpp"
#include "rootchi/skein.hpp"

using namespace rootchi;

namespace {
LaurentPoly az(const std::string& s) { return parse_poly(s, {"a", "z"}); }
LaurentPoly q(const std::string& s) { return parse_poly(s, {"q"}); }

// Left-handed in the a P(L+) - a^-1 P(L-) = z P(L0) convention.
const char* kMirrorTrefoil = "BR[2; -1 -1 -1]";
}  // namespace

TEST_CASE("unknot and unlink") {
  LinkDiagram u = parse_link("U");
  CHECK(homfly_unreduced(u) == az("a*z^-1 - a^-1*z^-1"));
  CHECK(homfly_reduced(u) == LaurentPoly::constant(1));
  CHECK(homfly_middle(u) == az("-z^-1"));
  LaurentPoly d = unknot_value();
  CHECK(homfly_unreduced(parse_link("U ⊔ U")) == d * d);
  CHECK(alexander(u) == LaurentPoly::constant(1));
}

TEST_CASE("trefoil values") {
  LinkDiagram t = parse_link(kMirrorTrefoil);
  CHECK(az_to_aq(homfly_reduced(t)) == RationalPair(parse_poly("-a^4 + a^2*q^2 + a^2*q^-2", {"a", "q"})));
  CHECK(homfly_middle(t) == -az("-a^4*z^-1 + a^2*z + 2*a^2*z^-1"));
  CHECK(alexander(t) == parse_poly("t - 1 + t^-1", {"t"}));
  CHECK(sln_poly(t, 2, true) == q("q^2 + q^6 - q^8"));

  // The positive braid closure is its mirror image.
  LinkDiagram pos = parse_link("BR[2; 1 1 1]");
  CHECK(homfly_reduced(pos) == az("a^-2*z^2 + 2*a^-2 - a^-4"));
  CHECK(homfly_unreduced(parse_link("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]")) == homfly_unreduced(pos));
}

TEST_CASE("Hopf link") {
  LinkDiagram h = parse_link("BR[2; 1 1]");
  CHECK(homfly_reduced(h) == az("a^-1*z^-1 - a^-3*z^-1 + a^-1*z"));
  CHECK(alexander(h) == parse_poly("t^(1/2) - t^(-1/2)", {"t"}));
  CHECK(sln_poly(h, 2, true) == q("q^-1 + q^-5"));
  CHECK(alexander(parse_link("BR[2; -1 -1]")) == parse_poly("t^(-1/2) - t^(1/2)", {"t"}));
}

TEST_CASE("sl(n) specializations") {
  LinkDiagram u = parse_link("U");
  CHECK(sln_poly(u, 4, false) == q("q^3 + q + q^-1 + q^-3"));
  for (int n = 1; n <= 6; ++n) CHECK(sln_poly(u, n, true) == LaurentPoly::constant(1));
  for (const char* spec : {"BR[2; 1 1 1]", "BR[2; 1 1]", "BR[3; 1 -2 1 -2]"}) {
    LinkDiagram d = parse_link(spec);
    CHECK(sln_poly(d, 1, true) == LaurentPoly::constant(1));
    CHECK(sln_poly(d, 1, false) == LaurentPoly::constant(1));
  }
  CHECK_THROWS_AS(sln_poly(u, 0, true), InvariantError);
}

TEST_CASE("switched Hopf diagram is the unlink") {
  auto r = skein_resolve({parse_link("BR[2; 1 1]"), 0});
  CHECK(homfly_unreduced(r.switched) == unknot_value() * unknot_value());
  CHECK(homfly_unreduced(r.smoothed) == unknot_value());
}

TEST_CASE("split unions and divisibility") {
  for (const char* spec : {"BR[2; 1 1 1]", "BR[2; 1 1]", "BR[3; 1 -2 1 -2]"}) {
    LinkDiagram d = parse_link(spec);
    LaurentPoly p = homfly_unreduced(d);
    CHECK(homfly_unreduced(d.disjoint_union(parse_link("U"))) == p * unknot_value());
    CHECK(alexander(d.disjoint_union(parse_link("U"))).is_zero());
    CHECK(substitute(p, "a", LaurentPoly::constant(1)).is_zero());
  }
}

TEST_CASE("corpus expected values") {
  for (const auto& e : load_corpus(ROOTCHI_TEST_CORPUS)) {
    CAPTURE(e.name);
    HomflyInvariant h = homfly(parse_link(e.source));
    if (e.homfly) CHECK(h.reduced_az() == parse_poly(*e.homfly, {"a", "z"}));
    if (e.conway) CHECK(conway_from(h) == parse_poly(*e.conway, {"z"}));
  }
}

TEST_CASE("resource bound") {
  SkeinEngine small(2);
  CHECK_THROWS_AS(small.unreduced(parse_link("BR[2; 1 1 1]")), ResourceError);
  setenv("ROOTCHI_MAX_CROSSINGS", "2", 1);
  CHECK(max_crossings() == 2);
  CHECK_THROWS_AS(homfly(parse_link("BR[2; 1 1 1]")), ResourceError);
  setenv("ROOTCHI_MAX_CROSSINGS", "many", 1);
  CHECK_THROWS_AS(max_crossings(), ParseError);
  unsetenv("ROOTCHI_MAX_CROSSINGS");
  CHECK(max_crossings() == 14);
}
