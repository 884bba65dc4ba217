#include "thetalab/poly_matrix.hpp"

#include <sstream>

#include "thetalab/error.hpp"
#include "thetalab/poly_parser.hpp"

namespace thetalab {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, Poly(nvars)) {}

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t nvars) {
  return scalar(n, Poly::constant(nvars, Rational(1)));
}

PolyMatrix PolyMatrix::scalar(std::size_t n, const Poly& diagonal) {
  PolyMatrix m(n, n, diagonal.nvars());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = diagonal;
  return m;
}

PolyMatrix PolyMatrix::from_columns(std::span<const VecPoly> columns, std::size_t rows, std::size_t nvars) {
  PolyMatrix m(rows, columns.size(), nvars);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].rank() != rows) throw Error(ErrorCode::RankMismatch, "column of wrong length");
    for (std::size_t i = 0; i < rows; ++i) {
      if (!columns[j][i].is_zero()) m(i, j) = columns[j][i];
    }
  }
  return m;
}

PolyMatrix PolyMatrix::parse(const std::vector<std::vector<std::string>>& entries, std::span<const std::string> vars) {
  const std::size_t rows = entries.size();
  const std::size_t cols = rows == 0 ? 0 : entries.front().size();
  PolyMatrix m(rows, cols, vars.size());
  for (std::size_t i = 0; i < rows; ++i) {
    if (entries[i].size() != cols) throw Error(ErrorCode::RankMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_poly(entries[i][j], vars);
  }
  return m;
}

VecPoly PolyMatrix::column(std::size_t j) const {
  VecPoly v(rows_, nvars_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<VecPoly> PolyMatrix::columns() const {
  std::vector<VecPoly> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorCode::RankMismatch, "matrix product shape mismatch");
  PolyMatrix r(rows_, other.cols_, nvars_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Poly& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        if (!other(k, j).is_zero()) r(i, j) += a * other(k, j);
      }
    }
  }
  return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorCode::RankMismatch, "matrix shape mismatch");
  PolyMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += other.data_[i];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorCode::RankMismatch, "matrix shape mismatch");
  PolyMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= other.data_[i];
  return r;
}

VecPoly PolyMatrix::apply(const VecPoly& v) const {
  if (v.rank() != cols_) throw Error(ErrorCode::RankMismatch, "vector length mismatch");
  VecPoly r(rows_, nvars_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
    }
  }
  return r;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(cols_, rows_, nvars_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  }
  return r;
}

PolyMatrix PolyMatrix::kron_identity(std::size_t r) const {
  PolyMatrix out(rows_ * r, cols_ * r, nvars_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      for (std::size_t a = 0; a < r; ++a) out(i * r + a, j * r + a) = (*this)(i, j);
    }
  }
  return out;
}

PolyMatrix PolyMatrix::hconcat(const PolyMatrix& other) const {
  if (rows_ != other.rows_) throw Error(ErrorCode::RankMismatch, "hconcat row mismatch");
  PolyMatrix out(rows_, cols_ + other.cols_, nvars_ != 0 ? nvars_ : other.nvars_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) out(i, cols_ + j) = other(i, j);
  }
  return out;
}

PolyMatrix PolyMatrix::block_diagonal(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(a.rows_ + b.rows_, a.cols_ + b.cols_, a.nvars_ != 0 ? a.nvars_ : b.nvars_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) out(a.rows_ + i, a.cols_ + j) = b(i, j);
  }
  return out;
}

PolyMatrix PolyMatrix::repeat_diagonal(std::size_t p) const {
  PolyMatrix out(rows_ * p, cols_ * p, nvars_);
  for (std::size_t k = 0; k < p; ++k) {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(k * rows_ + i, k * cols_ + j) = (*this)(i, j);
    }
  }
  return out;
}

Poly PolyMatrix::determinant() const {
  if (!square()) throw Error(ErrorCode::RankMismatch, "determinant of a non-square matrix");
  if (rows_ == 0) return Poly::constant(nvars_, Rational(1));
  if (rows_ == 1) return data_[0];
  Poly det(nvars_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if ((*this)(0, j).is_zero()) continue;
    PolyMatrix minor(rows_ - 1, cols_ - 1, nvars_);
    for (std::size_t i = 1; i < rows_; ++i) {
      for (std::size_t k = 0, c = 0; k < cols_; ++k) {
        if (k == j) continue;
        minor(i - 1, c++) = (*this)(i, k);
      }
    }
    const Poly term = (*this)(0, j) * minor.determinant();
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

QMatrix PolyMatrix::at_origin() const {
  QMatrix q(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) q(i, j) = (*this)(i, j).constant_term();
  }
  return q;
}

QMatrix PolyMatrix::evaluate(std::span<const Rational> point) const {
  QMatrix q(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) q(i, j) = (*this)(i, j).evaluate(point);
  }
  return q;
}

int PolyMatrix::max_degree() const {
  int d = -1;
  for (const Poly& p : data_) d = std::max(d, p.degree());
  return d;
}

std::string to_string(const PolyMatrix& m, std::span<const std::string> vars) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i == 0 ? "[" : ", [");
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j == 0 ? "" : ", ") << to_string(m(i, j), vars);
    out << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace thetalab
