#include "rootchi/frcomplex.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "rootchi/errors.hpp"

namespace rootchi {

FracComplex FracComplex::build(int n, std::vector<Generator> gens, QMatrix d) {
  if (n < 1) throw InvariantError("n must be positive");
  const std::size_t N = gens.size();
  if (d.rows() != N || d.cols() != N) {
    if (N == 0 && d.rows() == 0)
      d = QMatrix(0, 0);
    else
      throw InvariantError("differential must be " + std::to_string(N) + "x" + std::to_string(N));
  }
  bool any_filt = false, all_filt = true;
  for (const auto& g : gens) {
    any_filt |= g.filt.has_value();
    all_filt &= g.filt.has_value();
  }
  if (any_filt && !all_filt) throw InvariantError("filtration: every generator needs a level");
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (d(i, j) == 0) continue;
      if (gens[i].deg != gens[j].deg + n)
        throw InvariantError("degree: d maps " + gens[j].name + " to " + gens[i].name +
                             " with degree (" + std::to_string(gens[i].deg - gens[j].deg) +
                             ")/" + std::to_string(n) + " instead of 1");
      if (any_filt && *gens[i].filt < *gens[j].filt)
        throw InvariantError("filtration: d lowers the level from " + gens[j].name + " to " +
                             gens[i].name);
    }
  if (!(d * d).is_zero()) throw InvariantError("d^2 != 0");
  FracComplex c;
  c.n_ = n;
  c.gens_ = std::move(gens);
  c.d_ = std::move(d);
  return c;
}

bool FracComplex::filtered() const { return !gens_.empty() && gens_.front().filt.has_value(); }

std::vector<int> FracComplex::degrees() const {
  std::set<int> s;
  for (const auto& g : gens_) s.insert(g.deg);
  return {s.begin(), s.end()};
}

std::vector<std::size_t> FracComplex::in_degree(int deg) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].deg == deg) out.push_back(i);
  return out;
}

QMatrix FracComplex::block(int deg) const {
  return d_.submatrix(in_degree(deg + n_), in_degree(deg));
}

Homology homology(const FracComplex& c) {
  Homology h;
  h.n = c.n();
  for (int deg : c.degrees()) {
    auto here = c.in_degree(deg);
    QMatrix out = c.block(deg);
    QMatrix in = c.block(deg - c.n());
    auto cycles = nullspace(out);
    std::vector<QVector> span;
    for (std::size_t j = 0; j < in.cols(); ++j) span.push_back(in.column(j));
    span = independent_subset(span, here.size());
    std::size_t b = span.size();
    std::vector<QVector> reps;
    for (const auto& z : cycles) {
      span.push_back(z);
      if (span_rank(span, here.size()) == span.size())
        reps.push_back(z);
      else
        span.pop_back();
    }
    if (cycles.size() < b) throw InvariantError("boundaries exceed cycles");
    if (!reps.empty()) {
      h.dims[deg] = reps.size();
      h.basis[deg] = std::move(reps);
    }
  }
  return h;
}

CycloNum euler_char(int n, const DegreeTable& dims) {
  std::vector<Rational> acc(2 * n, Rational(0));
  for (const auto& [deg, dim] : dims) {
    int pos = ((deg % (2 * n)) + 2 * n) % (2 * n);
    acc[pos] += static_cast<unsigned long>(dim);
  }
  return CycloNum(2 * n, std::move(acc));
}

CycloNum euler_char(const FracComplex& c) {
  DegreeTable dims;
  for (const auto& g : c.generators()) ++dims[g.deg];
  return euler_char(c.n(), dims);
}

FracComplex shift(const FracComplex& c, int s) {
  auto gens = c.generators();
  for (auto& g : gens) g.deg -= s;
  return FracComplex::build(c.n(), std::move(gens), c.differential());
}

FracComplex direct_sum(const FracComplex& x, const FracComplex& y) {
  if (x.n() != y.n()) throw InvariantError("direct sum of complexes with different n");
  if (x.size() && y.size() && x.filtered() != y.filtered())
    throw InvariantError("filtration: direct sum of filtered and unfiltered complexes");
  auto gens = x.generators();
  gens.insert(gens.end(), y.generators().begin(), y.generators().end());
  const std::size_t a = x.size(), N = gens.size();
  QMatrix d(N, N);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) d(i, j) = x.differential()(i, j);
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) d(a + i, a + j) = y.differential()(i, j);
  return FracComplex::build(x.n(), std::move(gens), std::move(d));
}

FracComplex cone(const FracComplex& x, const FracComplex& y, const QMatrix& f) {
  if (x.n() != y.n()) throw InvariantError("cone of complexes with different n");
  if (f.rows() != y.size() || f.cols() != x.size())
    throw InvariantError("chain map has the wrong shape");
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j)
      if (f(i, j) != 0 && y.generators()[i].deg != x.generators()[j].deg)
        throw InvariantError("chain map does not preserve degree");
  if (!(y.differential() * f == f * x.differential()))
    throw InvariantError("f is not a chain map");
  const int n = x.n();
  const std::size_t a = x.size(), N = x.size() + y.size();
  std::vector<Generator> gens;
  for (const auto& g : x.generators()) gens.push_back({g.name + "[1]", g.deg - n, std::nullopt});
  for (const auto& g : y.generators()) gens.push_back({g.name, g.deg, std::nullopt});
  QMatrix d(N, N);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) d(i, j) = -x.differential()(i, j);
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t j = 0; j < a; ++j) d(a + i, j) = f(i, j);
    for (std::size_t j = 0; j < y.size(); ++j) d(a + i, a + j) = y.differential()(i, j);
  }
  return FracComplex::build(n, std::move(gens), std::move(d));
}

FracComplex unknot_hfkn(int n) {
  if (n < 1) throw InvariantError("n must be positive");
  std::vector<Generator> gens;
  for (int k = 0; k < n; ++k)
    gens.push_back({k == 0 ? "1" : (k == 1 ? "U" : "U^" + std::to_string(k)), 1 - n + 2 * k,
                    std::nullopt});
  return FracComplex::build(n, std::move(gens), QMatrix(n, n));
}

void GradedModule::validate() const {
  if (n < 1) throw InvariantError("n must be positive");
  const std::size_t N = degs.size();
  for (std::size_t k = 0; k < u.size(); ++k) {
    const auto& m = u[k];
    if (m.rows() != N || m.cols() != N)
      throw InvariantError("U_" + std::to_string(k + 1) + " has the wrong shape");
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (m(i, j) != 0 && degs[i] != degs[j] + 2)
          throw InvariantError("U_" + std::to_string(k + 1) + " does not have degree 2/n");
  }
  for (std::size_t a = 0; a < u.size(); ++a)
    for (std::size_t b = a + 1; b < u.size(); ++b)
      if (!(u[a] * u[b] == u[b] * u[a]))
        throw InvariantError("U_" + std::to_string(a + 1) + " and U_" + std::to_string(b + 1) +
                             " do not commute");
}

CycloNum euler_char(const GradedModule& m) {
  DegreeTable dims;
  for (int d : m.degs) ++dims[d];
  return euler_char(m.n, dims);
}

FracComplex koszul_tensor(const GradedModule& m) {
  m.validate();
  const int n = m.n;
  const int k = static_cast<int>(m.u.size());
  const std::size_t N = m.size();
  const unsigned subsets = 1u << k;
  std::vector<Generator> gens;
  for (unsigned s = 0; s < subsets; ++s) {
    int size = std::popcount(s);
    std::string tag;
    for (int i = 0; i < k; ++i)
      if (s & (1u << i)) tag += (tag.empty() ? "" : ",") + std::to_string(i + 1);
    for (std::size_t g = 0; g < N; ++g)
      gens.push_back({"m" + std::to_string(g) + (tag.empty() ? "" : "{" + tag + "}"),
                      m.degs[g] + size * (2 - n), k - size});
  }
  QMatrix d(gens.size(), gens.size());
  for (unsigned s = 0; s < subsets; ++s)
    for (int i = 0; i < k; ++i) {
      if (!(s & (1u << i))) continue;
      unsigned t = s & ~(1u << i);
      int below = std::popcount(s & ((1u << i) - 1));
      Rational sign = below % 2 == 0 ? 1 : -1;
      for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c)
          if (m.u[i](r, c) != 0) d(t * N + r, s * N + c) += sign * m.u[i](r, c);
    }
  return FracComplex::build(n, std::move(gens), std::move(d));
}

namespace {

std::vector<QVector> unit_vectors(const std::vector<std::size_t>& local, std::size_t dim) {
  std::vector<QVector> out;
  for (auto i : local) {
    QVector v(dim);
    v[i] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

// Per-degree view of a filtered complex used by the page formulas.
struct DegreeView {
  std::vector<std::size_t> idx;  // global generator indices
  std::vector<int> levels;
};

class PageCalculator {
 public:
  explicit PageCalculator(const FracComplex& c) : c_(c) {
    for (int deg : c.degrees()) {
      DegreeView v;
      v.idx = c.in_degree(deg);
      for (auto i : v.idx) v.levels.push_back(c.level(i));
      views_[deg] = std::move(v);
    }
  }

  const DegreeView* view(int deg) const {
    auto it = views_.find(deg);
    return it == views_.end() ? nullptr : &it->second;
  }

  std::vector<std::size_t> at_least(const DegreeView& v, int p) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < v.levels.size(); ++i)
      if (v.levels[i] >= p) out.push_back(i);
    return out;
  }

  // Basis of Z_r^p in degree deg, in local coordinates.
  std::vector<QVector> z(int deg, int r, int p) {
    auto key = std::make_tuple(deg, r, p);
    auto it = zcache_.find(key);
    if (it != zcache_.end()) return it->second;
    std::vector<QVector> out;
    if (const DegreeView* v = view(deg)) {
      auto cols = at_least(*v, p);
      if (r <= 0 || cols.empty()) {
        out = unit_vectors(cols, v->idx.size());
      } else {
        std::vector<std::size_t> rows_global;
        if (const DegreeView* w = view(deg + c_.n()))
          for (std::size_t i = 0; i < w->idx.size(); ++i)
            if (w->levels[i] < p + r) rows_global.push_back(w->idx[i]);
        std::vector<std::size_t> cols_global;
        for (auto j : cols) cols_global.push_back(v->idx[j]);
        QMatrix sub = c_.differential().submatrix(rows_global, cols_global);
        for (const auto& ns : nullspace(sub)) {
          QVector full(v->idx.size());
          for (std::size_t j = 0; j < cols.size(); ++j) full[cols[j]] = ns[j];
          out.push_back(std::move(full));
        }
      }
    }
    zcache_[key] = out;
    return out;
  }

  // d applied to local vectors of degree deg, landing in degree deg + n.
  std::vector<QVector> image(int deg, const std::vector<QVector>& vecs) const {
    std::vector<QVector> out;
    const DegreeView* v = view(deg);
    const DegreeView* w = view(deg + c_.n());
    if (!v || !w) return out;
    QMatrix blk = c_.differential().submatrix(w->idx, v->idx);
    for (const auto& x : vecs) out.push_back(blk.apply(x));
    return out;
  }

  std::size_t page_dim(int deg, int r, int p) {
    const DegreeView* v = view(deg);
    if (!v) return 0;
    auto top = z(deg, r, p);
    if (top.empty()) return 0;
    auto den = z(deg, r - 1, p + 1);
    auto img = image(deg - c_.n(), z(deg - c_.n(), r - 1, p - r + 1));
    den.insert(den.end(), img.begin(), img.end());
    std::size_t d = span_rank(den, v->idx.size());
    return top.size() - d;
  }

 private:
  const FracComplex& c_;
  std::map<int, DegreeView> views_;
  std::map<std::tuple<int, int, int>, std::vector<QVector>> zcache_;
};

}  // namespace

SpectralSequence spectral_sequence(const FracComplex& c) {
  SpectralSequence ss;
  PageCalculator calc(c);
  if (c.size() == 0) {
    ss.pages.push_back({0, {}, CycloNum(2 * c.n())});
    return ss;
  }
  int lo = c.level(0), hi = c.level(0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    lo = std::min(lo, c.level(i));
    hi = std::max(hi, c.level(i));
  }
  const int last = hi - lo + 1;
  for (int r = 0; r <= last; ++r) {
    SpectralPage page;
    page.r = r;
    DegreeTable by_degree;
    for (int deg : c.degrees())
      for (int p = lo; p <= hi; ++p) {
        std::size_t dim = calc.page_dim(deg, r, p);
        if (dim) {
          page.dims[{deg, p}] = dim;
          by_degree[deg] += dim;
        }
      }
    page.chi = euler_char(c.n(), by_degree);
    ss.pages.push_back(std::move(page));
  }
  ss.e_infinity = ss.pages.back().dims;
  ss.stabilization = last;
  while (ss.stabilization > 0 && ss.pages[ss.stabilization - 1].dims == ss.e_infinity)
    --ss.stabilization;
  return ss;
}

LevelTable associated_graded_homology(const FracComplex& c) {
  LevelTable out;
  if (c.size() == 0) return out;
  int lo = c.level(0), hi = c.level(0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    lo = std::min(lo, c.level(i));
    hi = std::max(hi, c.level(i));
  }
  for (int deg : c.degrees()) {
    auto here = c.in_degree(deg);
    QMatrix in = c.block(deg - c.n());
    std::vector<QVector> bounds;
    for (std::size_t j = 0; j < in.cols(); ++j) bounds.push_back(in.column(j));
    std::size_t b = span_rank(bounds, here.size());
    auto filtered_h = [&](int p) -> std::size_t {
      std::vector<std::size_t> cols_local;
      std::vector<std::size_t> cols_global;
      for (std::size_t j = 0; j < here.size(); ++j)
        if (c.level(here[j]) >= p) {
          cols_local.push_back(j);
          cols_global.push_back(here[j]);
        }
      auto rows = c.in_degree(deg + c.n());
      QMatrix sub = c.differential().submatrix(rows, cols_global);
      std::vector<QVector> vecs = bounds;
      for (const auto& ns : nullspace(sub)) {
        QVector full(here.size());
        for (std::size_t j = 0; j < cols_local.size(); ++j) full[cols_local[j]] = ns[j];
        vecs.push_back(std::move(full));
      }
      return span_rank(vecs, here.size()) - b;
    };
    std::size_t prev = filtered_h(hi + 1);
    for (int p = hi; p >= lo; --p) {
      std::size_t cur = filtered_h(p);
      if (cur > prev) out[{deg, p}] = cur - prev;
      prev = cur;
    }
  }
  return out;
}

}  // namespace rootchi
