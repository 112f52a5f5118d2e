#pragma once

#include <vector>

#include "rootchi/rational.hpp"

namespace rootchi {

using QVector = std::vector<Rational>;

// Dense rational matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  static QMatrix identity(std::size_t n);
  static QMatrix from_columns(const std::vector<QVector>& cols, std::size_t rows);

  bool is_zero() const;
  QMatrix transpose() const;
  QMatrix submatrix(const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) const;
  QVector apply(const QVector& v) const;
  QVector column(std::size_t j) const;

  friend QMatrix operator*(const QMatrix& x, const QMatrix& y);
  friend QMatrix operator+(const QMatrix& x, const QMatrix& y);
  friend QMatrix operator-(const QMatrix& x, const QMatrix& y);
  friend bool operator==(const QMatrix& x, const QMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m);
std::size_t rank(QMatrix m);
// Basis of {x : m x = 0}.
std::vector<QVector> nullspace(const QMatrix& m);
// Rank of the span of the given vectors (all of length dim).
std::size_t span_rank(const std::vector<QVector>& vecs, std::size_t dim);
// Maximal independent subset, chosen greedily in order.
std::vector<QVector> independent_subset(const std::vector<QVector>& vecs, std::size_t dim);

}  // namespace rootchi
