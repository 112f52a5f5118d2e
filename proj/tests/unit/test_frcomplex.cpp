#include <doctest.h>

#include "random_objects.hpp"
#include "rootchi/errors.hpp"
#include "rootchi/frcomplex.hpp"

using namespace rootchi;

namespace {

FracComplex single(int n, int deg) { return FracComplex::build(n, {{"x", deg, std::nullopt}}, QMatrix(1, 1)); }

FracComplex pair(int n, int deg, std::optional<int> lx = {}, std::optional<int> ly = {}) {
  QMatrix d(2, 2);
  d(1, 0) = 1;
  return FracComplex::build(n, {{"x", deg, lx}, {"y", deg + n, ly}}, d);
}

}  // namespace

TEST_CASE("build validation") {
  CHECK_NOTHROW(single(1, 0));
  FracComplex p = pair(1, 0);
  CHECK(homology(p).dims.empty());

  QMatrix d(2, 2);
  d(1, 0) = 1;
  try {
    FracComplex::build(2, {{"x", 0, {}}, {"y", 1, {}}}, d);
    FAIL("expected a degree error");
  } catch (const InvariantError& e) {
    CHECK(std::string(e.what()).rfind("degree", 0) == 0);
  }

  QMatrix dd(3, 3);
  dd(1, 0) = 1;
  dd(2, 1) = 1;
  CHECK_THROWS_WITH_AS(FracComplex::build(1, {{"x", 0, {}}, {"y", 1, {}}, {"w", 2, {}}}, dd), "d^2 != 0",
                       InvariantError);
  try {
    pair(1, 0, 1, 0);
    FAIL("expected a filtration error");
  } catch (const InvariantError& e) {
    CHECK(std::string(e.what()).rfind("filtration", 0) == 0);
  }
}

TEST_CASE("shift") {
  for (int n = 1; n <= 6; ++n) {
    FracComplex c = single(n, 0);
    CHECK(euler_char(shift(c, 1)) == root(n, -1));
    CHECK(shift(c, 0).generators()[0].deg == 0);
    CHECK(shift(shift(c, 1), -1).generators()[0].deg == 0);
  }
}

TEST_CASE("cone examples") {
  FracComplex q = single(3, 0);
  QMatrix id = QMatrix::identity(1);
  FracComplex c = cone(q, q, id);
  CHECK(homology(c).dims.empty());
  CHECK(euler_char(c) == CycloNum(6));
  FracComplex z = cone(q, q, QMatrix(1, 1));
  CHECK(euler_char(z) == CycloNum(6));
  CHECK(homology(z).dims.size() == 2);
  CHECK_THROWS_AS(cone(pair(1, 0), single(1, 0), QMatrix(2, 1)), InvariantError);
  QMatrix not_chain(2, 1);
  not_chain(0, 0) = 1;
  CHECK_THROWS_WITH_AS(cone(single(1, 0), pair(1, 0), not_chain), "f is not a chain map", InvariantError);
}

TEST_CASE("homology examples") {
  FracComplex z = FracComplex::build(2, {{"a", 0, {}}, {"b", 1, {}}, {"c", 1, {}}}, QMatrix(3, 3));
  Homology h = homology(z);
  CHECK(h.dims.at(0) == 1);
  CHECK(h.dims.at(1) == 2);

  // Q[U]/(U^3) with n = 2: degrees 0, 1, 2 in units of 1/2; one Koszul factor.
  GradedModule m{2, {0, 2, 4}, {QMatrix(3, 3)}};
  m.u[0](1, 0) = 1;
  m.u[0](2, 1) = 1;
  FracComplex k = koszul_tensor(m);
  std::size_t total = 0;
  for (const auto& [deg, dim] : homology(k).dims) total += dim;
  CHECK(total == 2);
  CHECK(euler_char(k) == CycloNum(4, 2));
  CHECK(euler_char(m) == CycloNum(4, 1));
}

TEST_CASE("Euler characteristic examples") {
  CHECK(euler_char(unknot_hfkn(2)) == CycloNum(4));
  CHECK(euler_char(unknot_hfkn(1)) == CycloNum(2, 1));
  CHECK(euler_char(single(2, 1)) == root(2, 1));
  FracComplex u3 = unknot_hfkn(3);
  std::vector<int> degs;
  for (const auto& g : u3.generators()) degs.push_back(g.deg);
  CHECK(degs == std::vector<int>{-2, 0, 2});
  CHECK(euler_char(u3) == CycloNum(6));
  CHECK(unknot_hfkn(1).size() == 1);
}

TEST_CASE("Koszul tensor") {
  GradedModule m{3, {0, 2}, {}};
  FracComplex k0 = koszul_tensor(m);
  CHECK(k0.size() == 2);
  CHECK(k0.differential().is_zero());
  CHECK(euler_char(k0) == euler_char(m));

  GradedModule bad{2, {0, 1}, {QMatrix(2, 2)}};
  bad.u[0](1, 0) = 1;
  CHECK_THROWS_AS(koszul_tensor(bad), InvariantError);

  GradedModule nc{1, {0, 2, 2, 4}, {QMatrix(4, 4), QMatrix(4, 4)}};
  nc.u[0](1, 0) = 1;
  nc.u[1](2, 0) = 1;
  nc.u[0](3, 2) = 1;
  CHECK_THROWS_AS(koszul_tensor(nc), InvariantError);
}

TEST_CASE("spectral sequence examples") {
  FracComplex flat = FracComplex::build(1, {{"x", 0, 0}, {"y", 0, 0}}, QMatrix(2, 2));
  SpectralSequence s0 = spectral_sequence(flat);
  CHECK(s0.pages[1].dims == s0.e_infinity);

  SpectralSequence s = spectral_sequence(pair(1, 0, 0, 1));
  CHECK(s.pages[1].dims == LevelTable{{{0, 0}, 1}, {{1, 1}, 1}});
  CHECK(s.pages[2].dims.empty());
  CHECK(s.e_infinity.empty());
  CHECK(s.stabilization == 2);
  for (const auto& p : s.pages) CHECK(p.chi == CycloNum(2));

  // U = 0: d vanishes from the first page on.
  GradedModule m{2, {0, 2}, {QMatrix(2, 2), QMatrix(2, 2)}};
  FracComplex k = koszul_tensor(m);
  SpectralSequence sk = spectral_sequence(k);
  CHECK(sk.pages[1].dims == sk.e_infinity);
  std::size_t total = 0;
  for (const auto& [key, dim] : sk.e_infinity) total += dim;
  CHECK(total == 8);
}

TEST_CASE("algebraic properties on random complexes") {
  testing::Rng rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    int n = testing::uniform(rng, 1, 8);
    FracComplex c = testing::random_complex(rng, n, testing::uniform(rng, 0, 20));
    CycloNum chi = euler_char(c);
    Homology h = homology(c);
    CHECK(euler_char(n, h.dims) == chi);
    CHECK(euler_char(shift(c, 1)) == root(n, -1) * chi);
    int s = testing::uniform(rng, -3 * n, 3 * n);
    CHECK(euler_char(shift(c, s)) == root(n, -s) * chi);

    FracComplex acyclic = direct_sum(c, pair(n, testing::uniform(rng, -n, n)));
    CHECK(euler_char(acyclic) == chi);
    CHECK(homology(acyclic).dims == h.dims);

    auto sample = testing::random_chain_map(rng, n, testing::uniform(rng, 0, 12));
    FracComplex cn = cone(sample.x, sample.y, sample.f);
    CHECK(euler_char(cn) == euler_char(sample.y) - euler_char(sample.x));
  }
}

TEST_CASE("spectral sequences of random filtered complexes") {
  testing::Rng rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    int n = testing::uniform(rng, 1, 6);
    FracComplex c = testing::random_complex(rng, n, testing::uniform(rng, 1, 16), true);
    SpectralSequence ss = spectral_sequence(c);
    for (const auto& p : ss.pages) CHECK(p.chi == euler_char(c));
    CHECK(ss.e_infinity == associated_graded_homology(c));
    DegreeTable by_degree;
    for (const auto& [key, dim] : ss.e_infinity) by_degree[key.first] += dim;
    CHECK(by_degree == homology(c).dims);
  }
}

TEST_CASE("Koszul factor on random modules") {
  testing::Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int n = testing::uniform(rng, 1, 8), k = testing::uniform(rng, 0, 4);
    GradedModule m = testing::random_module(rng, n, k, 10);
    CHECK_NOTHROW(m.validate());
    CycloNum factor = (CycloNum(2 * n, 1) - root(n, 2)).pow(k);
    CHECK(euler_char(koszul_tensor(m)) == factor * euler_char(m));
  }
}
