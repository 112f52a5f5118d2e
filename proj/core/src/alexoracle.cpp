#include "rootchi/alexoracle.hpp"

#include <utility>

#include "rootchi/errors.hpp"

namespace rootchi {

namespace {

const std::vector<std::string> kT{"t"};

LaurentPoly t_pow(int k, const Rational& c = 1) { return LaurentPoly::monomial(kT, {2 * k}, c); }

LaurentPoly normalized_class(LaurentPoly p) {
  p = p.with_vars(kT);
  if (p.is_zero()) return p;
  p *= t_pow(-p.min_exp(0) / 2);
  if (p.terms().begin()->second < 0) p = -p;
  return p;
}

}  // namespace

LaurentPoly bareiss_det(std::vector<std::vector<LaurentPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(1, kT);
  LaurentPoly prev = LaurentPoly::constant(1, kT);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return LaurentPoly(kT);
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = LaurentPoly(kT);
    }
    prev = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det.with_vars(kT);
}

AlexClass alex_matrix_poly(const LinkDiagram& d) {
  AlexClass out;
  out.ell = d.component_count();
  out.poly = LaurentPoly(kT);
  const int c = static_cast<int>(d.crossing_count());
  if (c == 0) {
    if (out.ell == 1) out.poly = LaurentPoly::constant(1, kT);
    return out;
  }
  if (d.unknot_count() > 0 || d.split_pieces().size() > 1) return out;

  // Arcs run from one under-crossing to the next; a new arc starts at every
  // outgoing under edge.
  const int edges = 2 * c;
  std::vector<int> arc(edges + 1, -1);
  int arcs = 0;
  for (int x = 0; x < c; ++x) {
    int l = d.crossings()[x].out_under();
    if (arc[l] >= 0) continue;
    int id = arcs++;
    while (arc[l] < 0) {
      arc[l] = id;
      EdgeEnd h = d.head(l);
      if (h.slot == 0) break;
      l = d.crossings()[h.crossing].e[(h.slot + 2) % 4];
    }
  }
  // A component with no under-crossing lies entirely on top: split.
  if (arcs != c) return out;
  for (int l = 1; l <= edges; ++l)
    if (arc[l] < 0) return out;

  std::vector<std::vector<LaurentPoly>> m(c, std::vector<LaurentPoly>(c, LaurentPoly(kT)));
  const LaurentPoly one = LaurentPoly::constant(1, kT);
  const LaurentPoly t = t_pow(1);
  for (int x = 0; x < c; ++x) {
    const Crossing& cr = d.crossings()[x];
    int o = arc[cr.in_over()], ui = arc[cr.in_under()], uo = arc[cr.out_under()];
    m[x][o] += one - t;
    if (cr.sign > 0) {
      m[x][ui] += t;
      m[x][uo] -= one;
    } else {
      m[x][ui] -= one;
      m[x][uo] += t;
    }
  }
  m.pop_back();
  for (auto& row : m) row.pop_back();
  out.poly = normalized_class(bareiss_det(std::move(m)));
  return out;
}

SymmetricAlex normalize_symmetric(const AlexClass& c) {
  if (c.poly.is_zero()) throw InvariantError("no symmetric representative of the zero class");
  LaurentPoly p = c.poly.with_vars(kT);
  int lo = p.min_exp(0), hi = p.max_exp(0);
  // Shift by half the span (in doubled units the span itself halves).
  int shift = -(lo + hi) / 2;
  LaurentPoly sym = p * LaurentPoly::monomial(kT, {shift});
  LaurentPoly flipped = substitute(sym, "t", LaurentPoly::monomial(kT, {-2})).with_vars(kT);
  int parity = (c.ell - 1) % 2 == 0 ? 1 : -1;
  if (!(flipped == sym * Rational(parity)))
    throw InvariantError("class " + p.to_string() + " has no symmetric representative");
  if (c.ell == 1) {
    Rational at_one = 0;
    for (const auto& [e, v] : sym.terms()) at_one += v;
    if (at_one == -1)
      sym = -sym;
    else if (at_one != 1)
      throw InvariantError("knot class " + p.to_string() + " has Delta(1) != +-1");
    return {sym, false};
  }
  return {sym, true};
}

}  // namespace rootchi
