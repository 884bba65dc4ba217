#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "thetalab/poly_matrix.hpp"

namespace thetalab {

/// Polynomial differential form sum_I g_I dx_I. A basis covector dx_I is a
/// bitmask of strictly increasing indices, so antisymmetry is built in.
class DiffForm {
 public:
  using Mask = std::uint32_t;

  DiffForm() = default;
  explicit DiffForm(std::size_t nvars);

  static DiffForm function(const Poly& g);
  static DiffForm dx(std::size_t nvars, std::size_t i);
  /// g dx_0 ^ ... ^ dx_{n-1}.
  static DiffForm top(const Poly& g);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Mask, Poly>& terms() const noexcept { return terms_; }
  Poly coefficient(Mask mask) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Part of form degree p.
  DiffForm component(int p) const;

  void add(Mask mask, const Poly& g);
  DiffForm& operator+=(const DiffForm& other);
  DiffForm& operator-=(const DiffForm& other);
  friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
  friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
  friend DiffForm operator*(const Poly& g, const DiffForm& w);
  friend DiffForm operator*(const Rational& c, const DiffForm& w);

  bool operator==(const DiffForm& other) const;

 private:
  std::size_t nvars_ = 0;
  std::map<Mask, Poly> terms_;
};

DiffForm wedge(const DiffForm& a, const DiffForm& b);
/// Exterior derivative.
DiffForm d(const DiffForm& w);
int form_degree(DiffForm::Mask mask);

/// "(x - y)*dx^dz + 2*dy"; "0" for the zero form.
std::string to_string(const DiffForm& w, std::span<const std::string> vars);

/// Matrix with differential-form entries; products use the wedge product.
class FormMatrix {
 public:
  FormMatrix() = default;
  FormMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);
  static FormMatrix functions(const PolyMatrix& m);
  /// Entrywise exterior derivative of a polynomial matrix.
  static FormMatrix differential(const PolyMatrix& m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  DiffForm& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const DiffForm& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  FormMatrix operator*(const FormMatrix& other) const;
  DiffForm trace() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t nvars_ = 0;
  std::vector<DiffForm> data_;
};

}  // namespace thetalab
