#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rootchi/cyclo.hpp"
#include "rootchi/frcomplex.hpp"
#include "rootchi/laurent.hpp"

namespace rootchi {

// Finitely supported dimension table.  Every degree is stored doubled; slots
// not marked half must hold even values.
class DimTable {
 public:
  using Key = std::vector<int>;

  DimTable() = default;
  DimTable(std::vector<std::string> labels, std::vector<bool> half);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<bool>& half() const { return half_; }
  std::size_t arity() const { return labels_.size(); }
  const std::map<Key, long>& entries() const { return entries_; }

  // Adds dim at the doubled degree vector.
  void add(const Key& doubled, long dim);
  std::size_t slot(const std::string& label) const;
  long total() const;

  friend bool operator==(const DimTable& x, const DimTable& y) {
    return x.labels_ == y.labels_ && x.half_ == y.half_ && x.entries_ == y.entries_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<bool> half_;
  std::map<Key, long> entries_;
};

// Sum of (-1)^J u^I dim with J the sign slot and I the variable slot.
LaurentPoly chi_bigraded(const DimTable& t, const std::string& sign_label,
                         const std::string& var_label, const std::string& var = "t");
// HOMFLY-PT style table over (i, j, k): sum of (-1)^((k-j)/2) a^j q^i dim.
LaurentPoly chi_trigraded(const DimTable& t);

struct HomflyDictionary {
  DimTable hfk;  // (gr_T, gr_M)
  DimTable sln;  // (gr_Qn, gr_H)
};

// gr_T = i/2, gr_M = i + j/2 + k/2; gr_Qn = i + n j, gr_H = (k - j)/2.
HomflyDictionary homfly_grading_dict(const DimTable& t, int n);

enum class Collapse { hfk, hfk_primed, sln };

// Collapses a bigraded table to a single (1/n)Z grading, then shifts it up
// by extra_shift/n.  hfk: n gr_n = -n gr_M + 2(n-1) gr_T; hfk_primed is its
// negative; sln: gr_Qn + n gr_H.
DegreeTable collapse_to_frac(const DimTable& t, int n, Collapse convention, int extra_shift = 0);

enum class HfkVariant { reduced, minus, unreduced };

struct ShiftSpec {
  int alexander_doubled = 0;        // upward Alexander shift, doubled
  int maslov = 0;                   // upward Maslov shift
  std::optional<int> frac_times_n;  // upward (1/n)Z shift of the primed n-variant
  std::optional<CycloNum> chi_multiplier;
};

ShiftSpec hfk_shift_spec(HfkVariant variant, int ell, std::optional<int> n = std::nullopt);

// A table whose graded Euler characteristic is p (in t): positive
// coefficients at gr_M = 0, negative ones at gr_M = 1.
DimTable table_from_poly(const LaurentPoly& p);

}  // namespace rootchi
