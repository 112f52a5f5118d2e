#include <doctest.h>

#include <algorithm>

#include "random_objects.hpp"
#include "rootchi/corpus.hpp"
#include "rootchi/skein.hpp"
#include "rootchi/verify.hpp"

using namespace rootchi;

namespace {

bool all_pass(const std::vector<Check>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const Check& c) { return c.status == Status::pass; });
}

bool any_fail(const std::vector<Check>& cs) {
  return std::any_of(cs.begin(), cs.end(), [](const Check& c) { return c.status == Status::fail; });
}

const Check& named(const std::vector<Check>& cs, const std::string& name) {
  auto it = std::find_if(cs.begin(), cs.end(), [&](const Check& c) { return c.name == name; });
  REQUIRE(it != cs.end());
  return *it;
}

LinkData trefoil() { return analyze("trefoil", parse_link("BR[2; 1 1 1]")); }
LinkData hopf() { return analyze("hopf", parse_link("BR[2; 1 1]")); }

}  // namespace

TEST_CASE("skein triples") {
  CHECK(verify_skein_triple({parse_link("BR[2; 1 1 1]"), 0}).status == Status::pass);
  CHECK(verify_skein_triple({parse_link("BR[2; 1 1]"), 0}).status == Status::pass);
  CHECK(verify_skein_triple({parse_link("BR[3; 1 -2 1 -2]"), 1}).status == Status::pass);

  LinkDiagram t = parse_link("BR[2; 1 1 1]");
  auto r = skein_resolve({t, 0});
  LaurentPoly plus = homfly_unreduced(t);
  LaurentPoly bumped = plus + LaurentPoly::monomial({"a", "z"}, {2, 2});
  Check bad = skein_triple_check("mutant", bumped, homfly_unreduced(r.switched), homfly_unreduced(r.smoothed));
  CHECK(bad.status == Status::fail);
  CHECK(bad.lhs != bad.rhs);
}

TEST_CASE("polynomial identities") {
  CHECK(all_pass(verify_polynomial_identities(analyze("unknot", parse_link("U")))));
  auto tre = verify_polynomial_identities(trefoil());
  CHECK(all_pass(tre));
  CHECK(named(tre, "identity.reduced_am1").lhs == "t - 1 + t^-1");
  auto unlink = verify_polynomial_identities(analyze("unlink", parse_link("U ⊔ U")));
  CHECK(all_pass(unlink));
  CHECK(named(unlink, "identity.reduced_a1").rhs == "0");
  CHECK(all_pass(verify_polynomial_identities(hopf())));
}

TEST_CASE("sl(n) theorem") {
  auto t2 = verify_thm_sln(trefoil(), 2);
  CHECK(all_pass(t2));
  CHECK(named(t2, "sln.reduced[n=2]").lhs == CycloNum(4, -3).to_string());
  auto h2 = verify_thm_sln(hopf(), 2);
  CHECK(all_pass(h2));
  CHECK(named(h2, "sln.reduced[n=2]").lhs == (CycloNum(4, -2) * root(2, 1)).to_string());
  auto u5 = verify_thm_sln(analyze("unknot", parse_link("U")), 5);
  CHECK(all_pass(u5));
  CHECK(named(u5, "sln.reduced[n=5]").lhs == CycloNum(10, 1).to_string());
  CHECK(all_pass(verify_thm_sln(trefoil(), 1)));
}

TEST_CASE("HFK theorem chain") {
  auto h2 = verify_thm_hfk(hopf(), 2);
  CHECK(all_pass(h2));
  // chi_primed = -2i and chi_unprimed = 2, related by -i.
  CHECK(named(h2, "hfk.shift[n=2]").lhs == (CycloNum(4, -2) * root(2, 1)).to_string());
  CHECK(named(h2, "hfk.module_chi[n=2]").rhs == CycloNum(4, 2).to_string());
  for (int n = 2; n <= 6; ++n) CHECK(all_pass(verify_thm_hfk(trefoil(), n)));
  auto u3 = verify_thm_hfk(analyze("unknot", parse_link("U")), 3);
  CHECK(named(u3, "hfk.shift[n=3]").lhs == CycloNum(6, 1).to_string());
  CHECK(all_pass(verify_thm_hfk(trefoil(), 1)));
}

TEST_CASE("square") {
  auto t2 = verify_square(trefoil(), 2);
  CHECK(all_pass(t2));
  CHECK(named(t2, "square.BC[n=2]").rhs == CycloNum(4, -3).to_string());
  CHECK(all_pass(verify_square(trefoil(), 3)));
  for (int n = 2; n <= 6; ++n) {
    auto u = verify_square(analyze("unknot", parse_link("U")), n);
    CHECK(all_pass(u));
    CHECK(named(u, "square.AB[n=" + std::to_string(n) + "]").lhs == CycloNum(2 * n, 1).to_string());
  }
}

TEST_CASE("oracle") {
  CHECK(verify_oracle(trefoil()).status == Status::pass);
  CHECK(verify_oracle(hopf()).status != Status::fail);
  CHECK(verify_oracle(analyze("unlink", parse_link("U ⊔ U"))).status == Status::pass);
}

TEST_CASE("corrupted coefficients are caught") {
  auto corpus = load_corpus(ROOTCHI_TEST_CORPUS);
  testing::Rng rng(31);
  std::shuffle(corpus.begin(), corpus.end(), rng);
  for (int i = 0; i < 20; ++i) {
    LinkData L = analyze(corpus[i]);
    CAPTURE(L.name);
    const auto& terms = L.unreduced.terms();
    auto it = terms.begin();
    std::advance(it, testing::uniform(rng, 0, static_cast<int>(terms.size()) - 1));
    L.unreduced += LaurentPoly::monomial({"a", "z"}, it->first, testing::uniform(rng, 0, 1) ? 1 : -1);
    VerifyOptions opts;
    opts.skein_sites = false;
    opts.n_hi = 3;
    CHECK_FALSE(verify_link(L, opts).ok());
  }
}

TEST_CASE("corpus runs are ordered and deterministic") {
  auto corpus = load_corpus(ROOTCHI_TEST_CORPUS);
  corpus.resize(12);
  corpus.push_back({"broken", "PD[X[1,1,2,2]", {}, {}});
  VerifyOptions opts;
  opts.n_hi = 3;
  auto serial = verify_corpus(corpus, opts, 1);
  auto parallel = verify_corpus(corpus, opts, 3);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].link == corpus[i].name);
    CHECK(parallel[i].link == corpus[i].name);
    REQUIRE(serial[i].checks.size() == parallel[i].checks.size());
    for (std::size_t j = 0; j < serial[i].checks.size(); ++j) {
      CHECK(serial[i].checks[j].name == parallel[i].checks[j].name);
      CHECK(serial[i].checks[j].lhs == parallel[i].checks[j].lhs);
    }
  }
  CHECK(any_fail(serial.back().checks));
  for (std::size_t i = 0; i + 1 < serial.size(); ++i) CHECK(serial[i].ok());
}
