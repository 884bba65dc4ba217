#pragma once

#include <span>
#include <string>
#include <vector>

#include "thetalab/rational_matrix.hpp"
#include "thetalab/vec_poly.hpp"

namespace thetalab {

/// Dense matrix with polynomial entries, row-major. Columns are read as
/// elements of P^rows (relations of a presentation, images of basis vectors).
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

  static PolyMatrix identity(std::size_t n, std::size_t nvars);
  static PolyMatrix scalar(std::size_t n, const Poly& diagonal);
  static PolyMatrix from_columns(std::span<const VecPoly> columns, std::size_t rows, std::size_t nvars);
  /// Row-major text entries parsed with the given variable names.
  static PolyMatrix parse(const std::vector<std::vector<std::string>>& entries, std::span<const std::string> vars);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nvars() const noexcept { return nvars_; }
  bool square() const noexcept { return rows_ == cols_; }

  Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  VecPoly column(std::size_t j) const;
  std::vector<VecPoly> columns() const;

  PolyMatrix operator*(const PolyMatrix& other) const;
  PolyMatrix operator+(const PolyMatrix& other) const;
  PolyMatrix operator-(const PolyMatrix& other) const;
  VecPoly apply(const VecPoly& v) const;
  PolyMatrix transpose() const;

  /// this (x) I_r: each entry a becomes the block a * I_r.
  PolyMatrix kron_identity(std::size_t r) const;
  /// [this | other].
  PolyMatrix hconcat(const PolyMatrix& other) const;
  static PolyMatrix block_diagonal(const PolyMatrix& a, const PolyMatrix& b);
  /// I_p (x) this.
  PolyMatrix repeat_diagonal(std::size_t p) const;

  /// Laplace expansion; sizes here stay small.
  Poly determinant() const;
  QMatrix at_origin() const;
  QMatrix evaluate(std::span<const Rational> point) const;
  int max_degree() const;

  bool operator==(const PolyMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t nvars_ = 0;
  std::vector<Poly> data_;
};

std::string to_string(const PolyMatrix& m, std::span<const std::string> vars);

}  // namespace thetalab
