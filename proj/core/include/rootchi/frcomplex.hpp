#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootchi/cyclo.hpp"
#include "rootchi/qmatrix.hpp"

namespace rootchi {

// Degrees are stored as n * alpha.
struct Generator {
  std::string name;
  int deg = 0;
  std::optional<int> filt;
};

// Finite (1/n)Z-graded complex over Q.  d(i, j) is the coefficient of
// generator i in d(generator j); d raises degree by 1 (n in stored units).
class FracComplex {
 public:
  FracComplex() = default;
  // Throws InvariantError naming the violated condition (degree, d^2, filtration).
  static FracComplex build(int n, std::vector<Generator> gens, QMatrix d);

  int n() const { return n_; }
  const std::vector<Generator>& generators() const { return gens_; }
  const QMatrix& differential() const { return d_; }
  std::size_t size() const { return gens_.size(); }
  bool filtered() const;
  int level(std::size_t i) const { return gens_[i].filt.value_or(0); }

  std::vector<int> degrees() const;
  std::vector<std::size_t> in_degree(int deg) const;
  // Block of d from degree deg to deg + n.
  QMatrix block(int deg) const;

 private:
  int n_ = 1;
  std::vector<Generator> gens_;
  QMatrix d_;
};

using DegreeTable = std::map<int, std::size_t>;

struct Homology {
  int n = 1;
  DegreeTable dims;
  // Representative cycles in the coordinates of each degree's generators.
  std::map<int, std::vector<QVector>> basis;
};

Homology homology(const FracComplex& c);
CycloNum euler_char(const FracComplex& c);
CycloNum euler_char(int n, const DegreeTable& dims);

// C[alpha] with alpha = s/n: every degree moves down by alpha.
FracComplex shift(const FracComplex& c, int s);
FracComplex direct_sum(const FracComplex& x, const FracComplex& y);
// Mapping cone X[1] + Y of a degree-0 chain map f: X -> Y (f is dimY x dimX).
FracComplex cone(const FracComplex& x, const FracComplex& y, const QMatrix& f);
// Q[U]/(U^n) with generator degrees (1-n)/n, ..., (n-1)/n.
FracComplex unknot_hfkn(int n);

// Finite-dimensional module over Q[U_1..U_k]; each U_i raises degree by 2/n.
struct GradedModule {
  int n = 1;
  std::vector<int> degs;
  std::vector<QMatrix> u;

  void validate() const;
  std::size_t size() const { return degs.size(); }
};

CycloNum euler_char(const GradedModule& m);

// M tensored with the Koszul complex of U_1..U_k, filtered by cube level.
FracComplex koszul_tensor(const GradedModule& m);

using LevelTable = std::map<std::pair<int, int>, std::size_t>;  // (deg, level) -> dim

struct SpectralPage {
  int r = 0;
  LevelTable dims;
  CycloNum chi;
};

struct SpectralSequence {
  std::vector<SpectralPage> pages;
  int stabilization = 0;  // first page from which all later pages agree
  LevelTable e_infinity;
};

SpectralSequence spectral_sequence(const FracComplex& c);
// Degree-wise dimensions of the associated graded of H(C) for the filtration.
LevelTable associated_graded_homology(const FracComplex& c);

}  // namespace rootchi
