#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetalab/rational.hpp"

namespace thetalab {

/// Dense matrix over Q, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_symmetric() const;

  std::size_t rank() const;
  Rational determinant() const;
  /// Basis of {v : M v = 0}, one vector per free column.
  std::vector<std::vector<Rational>> kernel() const;

  QMatrix operator*(const QMatrix& other) const;
  QMatrix operator*(const Rational& c) const;
  QMatrix operator-(const QMatrix& other) const;
  QMatrix transpose() const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  /// The unique x with M x = rhs, or nullopt when M is singular or the
  /// system is inconsistent.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& rhs) const;

  bool operator==(const QMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// v^T M v.
Rational quadratic_form(const QMatrix& m, const std::vector<Rational>& v);

}  // namespace thetalab
