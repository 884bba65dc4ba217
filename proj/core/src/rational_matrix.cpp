#include "thetalab/rational_matrix.hpp"

#include "thetalab/error.hpp"

namespace thetalab {
namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::RankMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool QMatrix::is_zero() const {
  for (const Rational& q : data_) {
    if (q != 0) return false;
  }
  return true;
}

bool QMatrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

std::size_t QMatrix::rank() const {
  QMatrix copy = *this;
  return rref(copy).size();
}

Rational QMatrix::determinant() const {
  if (!square()) throw Error(ErrorCode::RankMismatch, "determinant of a non-square matrix");
  QMatrix m = *this;
  Rational det = 1;
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t sel = col;
    while (sel < rows_ && m(sel, col) == 0) ++sel;
    if (sel == rows_) return Rational(0);
    if (sel != col) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(sel, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < rows_; ++i) {
      if (m(i, col) == 0) continue;
      const Rational factor = m(i, col) / m(col, col);
      for (std::size_t j = col; j < cols_; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return det;
}

std::vector<std::vector<Rational>> QMatrix::kernel() const {
  QMatrix m = *this;
  const std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> QMatrix::solve(const std::vector<Rational>& rhs) const {
  if (rhs.size() != rows_) throw Error(ErrorCode::RankMismatch, "right-hand side of wrong length");
  QMatrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = rhs[i];
  }
  const std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() != cols_) return std::nullopt;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] != r) return std::nullopt;
  }
  for (std::size_t r = cols_; r < rows_; ++r) {
    if (aug(r, cols_) != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols_);
  for (std::size_t r = 0; r < cols_; ++r) x[r] = aug(r, cols_);
  return x;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorCode::RankMismatch, "matrix product shape mismatch");
  QMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) r(i, j) += (*this)(i, k) * other(k, j);
    }
  }
  return r;
}

QMatrix QMatrix::operator*(const Rational& c) const {
  QMatrix r = *this;
  for (Rational& q : r.data_) q *= c;
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorCode::RankMismatch, "matrix shape mismatch");
  QMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= other.data_[i];
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  }
  return r;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::RankMismatch, "vector length mismatch");
  std::vector<Rational> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  }
  return r;
}

Rational quadratic_form(const QMatrix& m, const std::vector<Rational>& v) {
  const std::vector<Rational> mv = m.apply(v);
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * mv[i];
  return s;
}

}  // namespace thetalab
