#include "rootchi/qmatrix.hpp"

#include <utility>

#include "rootchi/errors.hpp"

namespace rootchi {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols, std::size_t rows) {
  QMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::submatrix(const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols) const {
  QMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

QVector QMatrix::apply(const QVector& v) const {
  if (v.size() != cols_) throw InvariantError("matrix/vector size mismatch");
  QVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (v[j] != 0 && (*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

QVector QMatrix::column(std::size_t j) const {
  QVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
  if (x.cols_ != y.rows_) throw InvariantError("matrix size mismatch");
  QMatrix out(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Rational& a = x(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < y.cols_; ++j)
        if (y(k, j) != 0) out(i, j) += a * y(k, j);
    }
  return out;
}

QMatrix operator+(const QMatrix& x, const QMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw InvariantError("matrix size mismatch");
  QMatrix out = x;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += y.a_[i];
  return out;
}

QMatrix operator-(const QMatrix& x, const QMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw InvariantError("matrix size mismatch");
  QMatrix out = x;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= y.a_[i];
  return out;
}

std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(QMatrix m) { return rref(m).size(); }

std::vector<QVector> nullspace(const QMatrix& m) {
  QMatrix r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t span_rank(const std::vector<QVector>& vecs, std::size_t dim) {
  if (vecs.empty() || dim == 0) return 0;
  QMatrix m(vecs.size(), dim);
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = vecs[i][j];
  return rank(std::move(m));
}

std::vector<QVector> independent_subset(const std::vector<QVector>& vecs, std::size_t dim) {
  std::vector<QVector> kept;
  for (const auto& v : vecs) {
    kept.push_back(v);
    if (span_rank(kept, dim) < kept.size()) kept.pop_back();
  }
  return kept;
}

}  // namespace rootchi
