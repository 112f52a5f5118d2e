#include "rootchi/skein.hpp"

#include <cstdlib>
#include <string>

#include "rootchi/errors.hpp"

namespace rootchi {

namespace {

const std::vector<std::string> kAZ{"a", "z"};

LaurentPoly az(int a2, int z2, const Rational& c = 1) {
  return LaurentPoly::monomial(kAZ, {a2, z2}, c);
}

LaurentPoly a_minus_ainv() { return az(2, 0) - az(-2, 0); }

}  // namespace

int max_crossings() {
  if (const char* env = std::getenv("ROOTCHI_MAX_CROSSINGS")) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(env, &pos);
      if (pos == std::string(env).size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("bad ROOTCHI_MAX_CROSSINGS value '") + env + "'");
  }
  return 14;
}

LaurentPoly unknot_value() { return a_minus_ainv() * az(0, -2); }

LaurentPoly z_in_q() { return LaurentPoly::monomial("q", 2) - LaurentPoly::monomial("q", -2); }

LaurentPoly quantum_integer(int n) {
  if (n < 1) throw InvariantError("quantum integer needs n >= 1");
  LaurentPoly out(std::vector<std::string>{"q"});
  for (int k = n - 1; k >= 1 - n; k -= 2) out += LaurentPoly::monomial("q", 2 * k);
  return out;
}

LaurentPoly SkeinEngine::unreduced(const LinkDiagram& d) {
  if (static_cast<int>(d.crossing_count()) > bound_)
    throw ResourceError("diagram has " + std::to_string(d.crossing_count()) +
                        " crossings; the skein bound is " + std::to_string(bound_));
  return evaluate(d);
}

LaurentPoly SkeinEngine::evaluate(const LinkDiagram& d) {
  LinkDiagram s = d.simplified();
  LaurentPoly result = unknot_value().pow(s.unknot_count());
  for (const auto& piece : s.split_pieces()) result *= connected(piece);
  return result;
}

// Switches crossings met first from below until the diagram is descending,
// which is an unlink; smoothings are evaluated recursively.
LaurentPoly SkeinEngine::connected(const LinkDiagram& piece) {
  auto key = piece.canonical_key();
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  const int edges = 2 * static_cast<int>(piece.crossing_count());
  std::vector<char> seen(piece.crossing_count(), 0);
  std::vector<std::size_t> bad;
  for (int l = 1; l <= edges; ++l) {
    EdgeEnd h = piece.head(l);
    if (seen[h.crossing]) continue;
    seen[h.crossing] = 1;
    if (h.slot == 0) bad.push_back(h.crossing);
  }

  LaurentPoly acc(kAZ);
  LaurentPoly coef = LaurentPoly::constant(1, kAZ);
  LinkDiagram cur = piece;
  for (std::size_t x : bad) {
    LaurentPoly smooth = evaluate(cur.smoothed(x));
    if (cur.crossings()[x].sign > 0) {
      acc += coef * az(-2, 2) * smooth;
      coef *= az(-4, 0);
    } else {
      acc += coef * az(2, 2, -1) * smooth;
      coef *= az(4, 0);
    }
    cur = cur.switched(x);
  }
  acc += coef * unknot_value().pow(static_cast<int>(piece.components().size()));
  acc = acc.with_vars(kAZ);
  memo_.emplace(std::move(key), acc);
  return acc;
}

LaurentPoly HomflyInvariant::reduced_az() const { return az(0, 2) * quotient_az; }

LaurentPoly HomflyInvariant::middle_az() const { return -quotient_az; }

HomflyInvariant homfly(const LinkDiagram& d) {
  SkeinEngine engine;
  HomflyInvariant h;
  h.unreduced_az = engine.unreduced(d);
  h.quotient_az = exact_div(h.unreduced_az, a_minus_ainv()).with_vars(kAZ);
  return h;
}

LaurentPoly homfly_unreduced(const LinkDiagram& d) { return SkeinEngine().unreduced(d); }

LaurentPoly homfly_reduced(const LinkDiagram& d) { return homfly(d).reduced_az(); }

LaurentPoly homfly_middle(const LinkDiagram& d) { return homfly(d).middle_az(); }

RationalPair az_to_aq(const LaurentPoly& p) {
  RationalPair r = substitute_pair(p.with_vars(kAZ), "z", z_in_q());
  if (r.is_polynomial()) return RationalPair(r.exact());
  return r;
}

LaurentPoly conway_from(const HomflyInvariant& h) {
  LaurentPoly c = substitute(h.reduced_az(), "a", LaurentPoly::constant(1));
  return c.with_vars({"z"});
}

LaurentPoly alexander_from(const HomflyInvariant& h) {
  LaurentPoly image = LaurentPoly::monomial("t", 1) - LaurentPoly::monomial("t", -1);
  return substitute(conway_from(h), "z", image).with_vars({"t"});
}

LaurentPoly alexander(const LinkDiagram& d) { return alexander_from(homfly(d)); }

LaurentPoly sln_from(const HomflyInvariant& h, int n, bool reduced) {
  if (n < 1) throw InvariantError("sl(n) polynomial needs n >= 1");
  LaurentPoly p = substitute(h.unreduced_az, "a", LaurentPoly::monomial("q", 2 * n));
  LaurentPoly pn = substitute_pair(p, "z", z_in_q()).exact().with_vars({"q"});
  if (!reduced) return pn;
  return exact_div(pn, quantum_integer(n)).with_vars({"q"});
}

LaurentPoly sln_poly(const LinkDiagram& d, int n, bool reduced) {
  return sln_from(homfly(d), n, reduced);
}

}  // namespace rootchi
