#include <doctest.h>

#include <cstdlib>

#include "rootchi/corpus.hpp"
#include "rootchi/errors.hpp"
#include "rootchi/linkdiag.hpp"

using namespace rootchi;

namespace {
const char* kTrefoil = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";

std::vector<LinkDiagram> corpus_diagrams() {
  std::vector<LinkDiagram> out;
  for (const auto& e : load_corpus(ROOTCHI_TEST_CORPUS)) out.push_back(parse_link(e.source));
  return out;
}
}  // namespace

TEST_CASE("parse_pd") {
  LinkDiagram t = parse_pd(kTrefoil);
  CHECK(t.crossing_count() == 3);
  CHECK(t.component_count() == 1);

  LinkDiagram u = parse_link("U");
  CHECK(u.crossing_count() == 0);
  CHECK(u.component_count() == 1);

  CHECK_THROWS_AS(parse_pd("PD[X[1,4,2,5]]"), ParseError);
  CHECK_THROWS_AS(parse_pd("PD[X[1,4,2]]"), ParseError);
  CHECK_THROWS_AS(parse_pd("PD[X[1,2,3,4"), ParseError);
}

TEST_CASE("parse_braid") {
  LinkDiagram t = parse_braid({1, 1, 1}, 2);
  CHECK(t.component_count() == 1);
  CHECK(t.writhe() == 3);
  LinkDiagram h = parse_braid({1, 1}, 2);
  CHECK(h.component_count() == 2);
  LinkDiagram u = parse_braid(std::vector<int>{}, 1);
  CHECK(u.component_count() == 1);
  CHECK(u.crossing_count() == 0);
  CHECK_THROWS_AS(parse_braid({1, 3}, 3), ParseError);
  CHECK_THROWS_AS(parse_braid({0}, 2), ParseError);
  CHECK(parse_braid("BR[2; 1 1 1]") == t);
}

TEST_CASE("diagram_stats") {
  auto s = diagram_stats(parse_pd(kTrefoil));
  CHECK(s.components == 1);
  CHECK(s.writhe == 3);
  CHECK(s.crossings == 3);
  s = diagram_stats(parse_braid({1, 1}, 2));
  CHECK(s.components == 2);
  CHECK(s.writhe == 2);
  CHECK(s.crossings == 2);
  s = diagram_stats(parse_link("U"));
  CHECK(s.components == 1);
  CHECK(s.writhe == 0);
  CHECK(s.crossings == 0);
  CHECK(diagram_stats(parse_link("U ⊔ U")).components == 2);
}

TEST_CASE("skein_resolve examples") {
  LinkDiagram t = parse_pd(kTrefoil);
  auto r = skein_resolve({t, 0});
  CHECK(r.switched.writhe() == 1);
  CHECK(r.smoothed.crossing_count() == 2);
  CHECK(r.smoothed.component_count() == 2);

  LinkDiagram h = parse_braid({1, 1}, 2);
  auto rh = skein_resolve({h, 0});
  // The switched Hopf diagram is a two-crossing picture of the 2-unlink.
  CHECK(rh.switched.component_count() == 2);
  CHECK(rh.switched.writhe() == 0);
  CHECK(rh.switched.split_pieces().size() == 1);
  CHECK(rh.smoothed.simplified().crossing_count() == 0);
  CHECK(rh.smoothed.component_count() == 1);

  CHECK(t.switched(1).switched(1) == t);
  CHECK_THROWS(skein_resolve({t, 3}));
}

TEST_CASE("surgery properties over the corpus") {
  for (const auto& d : corpus_diagrams()) {
    CAPTURE(d.to_pd());
    for (std::size_t i = 0; i < d.crossing_count(); ++i) {
      auto r = skein_resolve({d, i});
      int sign = d.crossings()[i].sign;
      CHECK(r.switched.writhe() == d.writhe() - 2 * sign);
      CHECK(r.smoothed.crossing_count() == d.crossing_count() - 1);
      CHECK(std::abs(r.smoothed.component_count() - d.component_count()) == 1);
      CHECK(d.switched(i).switched(i) == d);
    }
    LinkDiagram again = parse_link(d.to_pd());
    CHECK(again.canonical_key() == d.canonical_key());
    CHECK(again.component_count() == d.component_count());
  }
}

TEST_CASE("stored signs are checked") {
  LinkDiagram t = parse_pd(kTrefoil);
  auto crossings = t.crossings();
  CHECK(LinkDiagram::from_signed(crossings) == t);
  crossings[0].sign = -crossings[0].sign;
  CHECK_THROWS_AS(LinkDiagram::from_signed(crossings), InvariantError);
}

TEST_CASE("mirror and disjoint union") {
  LinkDiagram t = parse_pd(kTrefoil);
  CHECK(t.mirror().writhe() == -3);
  LinkDiagram two = t.disjoint_union(parse_link("U"));
  CHECK(two.component_count() == 2);
  CHECK(two.split_pieces().size() == 1);
  CHECK(two.to_pd().find("⊔ U") != std::string::npos);
}
