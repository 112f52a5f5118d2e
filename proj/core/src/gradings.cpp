#include "rootchi/gradings.hpp"

#include <algorithm>

#include "rootchi/errors.hpp"

namespace rootchi {

DimTable::DimTable(std::vector<std::string> labels, std::vector<bool> half)
    : labels_(std::move(labels)), half_(std::move(half)) {
  if (labels_.size() != half_.size()) throw InvariantError("labels and half flags differ in length");
  if (labels_.size() < 2 || labels_.size() > 3) throw InvariantError("tables have arity 2 or 3");
}

void DimTable::add(const Key& doubled, long dim) {
  if (doubled.size() != labels_.size()) throw InvariantError("degree tuple has the wrong length");
  if (dim < 0) throw InvariantError("negative dimension");
  for (std::size_t i = 0; i < doubled.size(); ++i)
    if (!half_[i] && doubled[i] % 2 != 0)
      throw InvariantError("half-integer degree in integer slot " + labels_[i]);
  if (dim == 0) return;
  entries_[doubled] += dim;
}

std::size_t DimTable::slot(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InvariantError("no grading named '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

long DimTable::total() const {
  long s = 0;
  for (const auto& [k, d] : entries_) s += d;
  return s;
}

LaurentPoly chi_bigraded(const DimTable& t, const std::string& sign_label,
                         const std::string& var_label, const std::string& var) {
  if (t.arity() != 2) throw InvariantError("bigraded Euler characteristic needs arity 2");
  std::size_t js = t.slot(sign_label), is = t.slot(var_label);
  LaurentPoly out(std::vector<std::string>{var});
  for (const auto& [k, d] : t.entries()) {
    if (k[js] % 2 != 0) throw InvariantError("sign grading must be integral");
    Rational c = (k[js] / 2) % 2 == 0 ? d : -d;
    out += LaurentPoly::monomial(var, k[is], c);
  }
  return out;
}

LaurentPoly chi_trigraded(const DimTable& t) {
  if (t.arity() != 3) throw InvariantError("trigraded Euler characteristic needs arity 3");
  LaurentPoly out(std::vector<std::string>{"a", "q"});
  for (const auto& [k, d] : t.entries()) {
    for (int v : k)
      if (v % 2 != 0) throw InvariantError("HOMFLY-PT tables have integer (i, j, k)");
    int i = k[0] / 2, j = k[1] / 2, kk = k[2] / 2;
    if ((kk - j) % 2 != 0) throw InvariantError("k - j must be even");
    Rational c = ((kk - j) / 2) % 2 == 0 ? d : -d;
    out += LaurentPoly::monomial({"a", "q"}, {2 * j, 2 * i}, c);
  }
  return out;
}

HomflyDictionary homfly_grading_dict(const DimTable& t, int n) {
  if (t.arity() != 3) throw InvariantError("grading dictionary needs an (i, j, k) table");
  HomflyDictionary out{DimTable({"gr_T", "gr_M"}, {true, false}),
                       DimTable({"gr_Qn", "gr_H"}, {false, false})};
  for (const auto& [k, d] : t.entries()) {
    int i = k[0] / 2, j = k[1] / 2, kk = k[2] / 2;
    if ((kk - j) % 2 != 0) throw InvariantError("k - j must be even");
    // Doubled: gr_T = i/2 -> i; gr_M = i + (j + k)/2 -> 2i + j + k.
    out.hfk.add({i, 2 * i + j + kk}, d);
    out.sln.add({2 * (i + n * j), kk - j}, d);
  }
  return out;
}

DegreeTable collapse_to_frac(const DimTable& t, int n, Collapse convention, int extra_shift) {
  if (n < 1) throw InvariantError("n must be positive");
  if (t.arity() != 2) throw InvariantError("collapse needs a bigraded table");
  DegreeTable out;
  for (const auto& [k, d] : t.entries()) {
    long deg = 0;
    if (convention == Collapse::sln) {
      std::size_t q = t.slot("gr_Qn"), h = t.slot("gr_H");
      if (k[q] % 2 != 0 || k[h] % 2 != 0) throw InvariantError("sl(n) gradings must be integral");
      deg = k[q] / 2 + static_cast<long>(n) * (k[h] / 2);
    } else {
      std::size_t tt = t.slot("gr_T"), m = t.slot("gr_M");
      if (k[m] % 2 != 0) throw InvariantError("Maslov grading must be integral");
      // gr_T is stored doubled, so 2(n-1) gr_T = (n-1) * stored.
      deg = -static_cast<long>(n) * (k[m] / 2) + static_cast<long>(n - 1) * k[tt];
      if (convention == Collapse::hfk_primed) deg = -deg;
    }
    out[static_cast<int>(deg + extra_shift)] += static_cast<std::size_t>(d);
  }
  return out;
}

ShiftSpec hfk_shift_spec(HfkVariant variant, int ell, std::optional<int> n) {
  if (ell < 1) throw InvariantError("component count must be at least 1");
  if (n && *n < 1) throw InvariantError("n must be positive");
  ShiftSpec s;
  switch (variant) {
    case HfkVariant::reduced:
    case HfkVariant::unreduced:
      s.alexander_doubled = ell - 1;
      break;
    case HfkVariant::minus:
      s.alexander_doubled = ell;
      s.maslov = 1;
      break;
  }
  if (n && variant != HfkVariant::minus) {
    // (1 - ell)(1 - 1/n) in units of 1/n.
    int shift = (1 - ell) * (*n - 1);
    s.frac_times_n = shift;
    s.chi_multiplier = root(*n, shift);
  }
  return s;
}

DimTable table_from_poly(const LaurentPoly& p) {
  DimTable t({"gr_T", "gr_M"}, {true, false});
  if (p.is_zero()) return t;
  auto idx = p.var_index("t");
  for (const auto& [e, c] : p.terms()) {
    int te = idx ? e[*idx] : 0;
    if (c.get_den() != 1) throw InvariantError("table coefficients must be integers");
    long v = c.get_num().get_si();
    t.add({te, v > 0 ? 0 : 2}, v > 0 ? v : -v);
  }
  return t;
}

}  // namespace rootchi
