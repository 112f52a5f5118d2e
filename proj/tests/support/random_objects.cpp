#include "random_objects.hpp"

#include <algorithm>
#include <numeric>

namespace rootchi::testing {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

namespace {

Rational small_nonzero(Rng& rng) {
  int v = uniform(rng, 1, 3);
  return uniform(rng, 0, 1) ? v : -v;
}

QMatrix permuted(const QMatrix& m, const std::vector<std::size_t>& perm) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(perm[i], perm[j]);
  return out;
}

void shuffle(Rng& rng, std::vector<Generator>& gens, QMatrix& d) {
  std::vector<std::size_t> perm(gens.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Generator> g2;
  for (auto p : perm) g2.push_back(gens[p]);
  gens = std::move(g2);
  d = permuted(d, perm);
}

}  // namespace

void scramble(Rng& rng, std::vector<Generator>& gens, QMatrix& d, int rounds) {
  const std::size_t N = gens.size();
  if (N < 2) return;
  for (int r = 0; r < rounds; ++r) {
    std::size_t i = uniform(rng, 0, N - 1), j = uniform(rng, 0, N - 1);
    if (i == j || gens[i].deg != gens[j].deg) continue;
    if (gens[i].filt.value_or(0) < gens[j].filt.value_or(0)) continue;
    // New basis e_j + c e_i: d <- E d E^-1 with E = 1 + c e_ij.
    Rational c = small_nonzero(rng);
    for (std::size_t k = 0; k < N; ++k) d(i, k) += c * d(j, k);
    for (std::size_t k = 0; k < N; ++k) d(k, j) -= c * d(k, i);
  }
}

FracComplex random_complex(Rng& rng, int n, int size, bool filtered) {
  std::vector<Generator> gens;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  while (static_cast<int>(gens.size()) < size) {
    int deg = uniform(rng, -2 * n, 2 * n);
    int level = uniform(rng, 0, 3);
    if (static_cast<int>(gens.size()) + 2 <= size && uniform(rng, 0, 2) > 0) {
      int up = level + uniform(rng, 0, 2);
      pairs.push_back({gens.size(), gens.size() + 1});
      gens.push_back({"g" + std::to_string(gens.size()), deg, filtered ? std::optional<int>(level) : std::nullopt});
      gens.push_back({"g" + std::to_string(gens.size()), deg + n, filtered ? std::optional<int>(up) : std::nullopt});
    } else {
      gens.push_back({"g" + std::to_string(gens.size()), deg, filtered ? std::optional<int>(level) : std::nullopt});
    }
  }
  QMatrix d(gens.size(), gens.size());
  for (auto [x, y] : pairs) d(y, x) = small_nonzero(rng);
  scramble(rng, gens, d, 4 * size);
  shuffle(rng, gens, d);
  return FracComplex::build(n, std::move(gens), std::move(d));
}

ChainMapSample random_chain_map(Rng& rng, int n, int size) {
  FracComplex x = random_complex(rng, n, size);
  FracComplex w = random_complex(rng, n, uniform(rng, 0, size));
  FracComplex y = direct_sum(x, w);
  const std::size_t X = x.size(), Y = y.size();
  QMatrix f(Y, X);
  Rational c = uniform(rng, 0, 3);
  for (std::size_t i = 0; i < X; ++i) f(i, i) = c;
  // Add d_Y h + h d_X for a random h of degree -1.
  QMatrix h(Y, X);
  for (std::size_t i = 0; i < Y; ++i)
    for (std::size_t j = 0; j < X; ++j)
      if (y.generators()[i].deg == x.generators()[j].deg - n && uniform(rng, 0, 2) == 0) h(i, j) = uniform(rng, -2, 2);
  f = f + y.differential() * h + h * x.differential();
  return {x, y, f};
}

GradedModule random_module(Rng& rng, int n, int k, int max_dim) {
  GradedModule m;
  m.n = n;
  m.u.assign(k, QMatrix());
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> edges(k);
  while (true) {
    std::vector<int> extent(k);
    int dim = 1;
    for (int i = 0; i < k; ++i) {
      extent[i] = uniform(rng, 0, 2);
      dim *= extent[i] + 1;
    }
    if (static_cast<int>(m.size()) + dim > max_dim) break;
    int base = uniform(rng, -2 * n, 2 * n);
    std::size_t offset = m.size();
    for (int idx = 0; idx < dim; ++idx) {
      int rest = idx, total = 0;
      std::vector<int> e(k);
      for (int i = 0; i < k; ++i) {
        e[i] = rest % (extent[i] + 1);
        rest /= extent[i] + 1;
        total += e[i];
      }
      m.degs.push_back(base + 2 * total);
      int stride = 1;
      for (int i = 0; i < k; ++i) {
        if (e[i] < extent[i]) edges[i].push_back({offset + idx + stride, offset + idx});
        stride *= extent[i] + 1;
      }
    }
    if (uniform(rng, 0, 3) == 0) break;
  }
  const std::size_t N = m.size();
  for (int i = 0; i < k; ++i) {
    m.u[i] = QMatrix(N, N);
    for (auto [to, from] : edges[i]) m.u[i](to, from) = 1;
  }
  // Conjugate every U_i by the same degree-preserving change of basis.
  for (int r = 0; r < 3 * static_cast<int>(N); ++r) {
    if (N < 2) break;
    std::size_t a = uniform(rng, 0, N - 1), b = uniform(rng, 0, N - 1);
    if (a == b || m.degs[a] != m.degs[b]) continue;
    Rational c = small_nonzero(rng);
    for (auto& u : m.u) {
      for (std::size_t j = 0; j < N; ++j) u(a, j) += c * u(b, j);
      for (std::size_t j = 0; j < N; ++j) u(j, b) -= c * u(j, a);
    }
  }
  return m;
}

DimTable random_trigraded(Rng& rng, int entries) {
  DimTable t({"i", "j", "k"}, {false, false, false});
  for (int e = 0; e < entries; ++e) {
    int i = uniform(rng, -6, 6), j = uniform(rng, -4, 4);
    int k = j + 2 * uniform(rng, -3, 3);
    t.add({2 * i, 2 * j, 2 * k}, uniform(rng, 1, 4));
  }
  return t;
}

LaurentPoly random_poly(Rng& rng, const std::vector<std::string>& vars, int terms, int span, bool half) {
  LaurentPoly p(vars);
  for (int t = 0; t < terms; ++t) {
    Exponents e;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      int x = uniform(rng, -span, span);
      e.push_back(half ? x : 2 * x);
    }
    p += LaurentPoly::monomial(vars, e, Rational(uniform(rng, -5, 5)));
  }
  return p;
}

}  // namespace rootchi::testing
