#include "thetalab/matrix_factorization.hpp"

#include <optional>
#include <stdexcept>

#include "thetalab/error.hpp"
#include "thetalab/standard_basis.hpp"

namespace thetalab {
namespace {

std::string entry_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void require_factorization_identity(const PolyMatrix& prod, const Poly& f, const char* label) {
  for (std::size_t i = 0; i < prod.rows(); ++i) {
    for (std::size_t j = 0; j < prod.cols(); ++j) {
      Poly diff = prod(i, j);
      if (i == j) diff -= f;
      if (!diff.is_zero()) {
        throw Error(ErrorCode::NotAFactorization,
                    std::string("entry ") + entry_name(i, j) + " of " + label + " - f*I is " +
                        to_string(diff, default_variable_names(f.nvars())));
      }
    }
  }
}

PolyMatrix drop_row_and_column(const PolyMatrix& q, std::size_t row, std::size_t col) {
  PolyMatrix out(q.rows() - 1, q.cols() - 1, q.nvars());
  for (std::size_t i = 0, oi = 0; i < q.rows(); ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < q.cols(); ++j) {
      if (j == col) continue;
      out(oi, oj++) = q(i, j);
    }
    ++oi;
  }
  return out;
}

bool find_unit_entry(const PolyMatrix& q, std::size_t& row, std::size_t& col) {
  for (std::size_t i = 0; i < q.rows(); ++i) {
    for (std::size_t j = 0; j < q.cols(); ++j) {
      if (q(i, j).constant_term() != 0) {
        row = i;
        col = j;
        return true;
      }
    }
  }
  return false;
}

// Generators of {x in P^c : Q x in f P^r}, i.e. a presentation over P of the
// first syzygy module of coker(Q) over R.
std::vector<VecPoly> syzygy_presentation(const PolyMatrix& q, const Poly& f) {
  const std::size_t r = q.rows();
  const std::size_t c = q.cols();
  const PolyMatrix ext = q.hconcat(PolyMatrix::scalar(r, f));
  std::vector<VecPoly> out;
  for (const VecPoly& s : syzygies(ext.columns(), r, q.nvars())) {
    VecPoly head = s.slice(0, c);
    if (!head.is_zero()) out.push_back(std::move(head));
  }
  return out;
}

// Columns are P-independent when the evaluation at some point has full
// column rank; a failed probe proves nothing and the caller falls back to
// computing syzygies.
bool certified_injective(const PolyMatrix& q) {
  if (q.cols() > q.rows()) return false;
  const std::size_t n = q.nvars();
  for (int probe = 1; probe <= 3; ++probe) {
    std::vector<Rational> point(n);
    for (std::size_t i = 0; i < n; ++i) {
      point[i] = Rational(static_cast<long>(probe * (i + 2) + i * i), probe + 1);
      point[i].canonicalize();
    }
    if (q.evaluate(point).rank() == q.cols()) return true;
  }
  return false;
}

// f * A^{-1} for square nonsingular A by fraction-free Gauss-Jordan
// elimination on [A | f I]; nullopt when the result is not polynomial.
std::optional<PolyMatrix> f_times_inverse(const PolyMatrix& a, const Poly& f) {
  const std::size_t p = a.rows();
  const std::size_t n = a.nvars();
  std::vector<std::vector<Poly>> m(p, std::vector<Poly>(2 * p, Poly(n)));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) m[i][j] = a(i, j);
    m[i][p + i] = f;
  }
  Poly prev = Poly::constant(n, Rational(1));
  for (std::size_t k = 0; k < p; ++k) {
    std::size_t piv = k;
    while (piv < p && m[piv][k].is_zero()) ++piv;
    if (piv == p) return std::nullopt;
    std::swap(m[k], m[piv]);
    for (std::size_t i = 0; i < p; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < 2 * p; ++j) {
        if (j == k) continue;
        std::optional<Poly> q = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        if (!q) throw std::logic_error("Bareiss division was not exact");
        m[i][j] = std::move(*q);
      }
      m[i][k] = Poly(n);
    }
    prev = m[k][k];
  }
  PolyMatrix b(p, p, n);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      std::optional<Poly> q = divide_exact(m[i][p + j], m[i][i]);
      if (!q) return std::nullopt;
      b(i, j) = std::move(*q);
    }
  }
  return b;
}

std::size_t free_rank_at_origin(const MatrixFactorization& m) {
  return m.size() - m.a().at_origin().rank() - m.b().at_origin().rank();
}

}  // namespace

MatrixFactorization mf_validate(PolyMatrix a, PolyMatrix b, const Poly& f) {
  if (!a.square() || !b.square() || a.rows() != b.rows()) {
    throw Error(ErrorCode::RankMismatch, "A and B must be square matrices of equal size");
  }
  if (f.is_zero()) throw Error(ErrorCode::NotAFactorization, "f must be nonzero");
  require_factorization_identity(a * b, f, "A*B");
  require_factorization_identity(b * a, f, "B*A");
  if (a.determinant() * b.determinant() != f.pow(static_cast<unsigned>(a.rows()))) {
    throw Error(ErrorCode::NotAFactorization, "det(A)*det(B) differs from f^p");
  }
  MatrixFactorization m;
  m.a_ = std::move(a);
  m.b_ = std::move(b);
  m.f_ = f;
  return m;
}

MatrixFactorization mf_direct_sum(const MatrixFactorization& m1, const MatrixFactorization& m2) {
  if (m1.size() == 0) return m2;
  if (m2.size() == 0) return m1;
  if (m1.f() != m2.f()) throw Error(ErrorCode::RingMismatch, "direct sum of factorizations of different f");
  return mf_validate(PolyMatrix::block_diagonal(m1.a(), m2.a()), PolyMatrix::block_diagonal(m1.b(), m2.b()),
                     m1.f());
}

MatrixFactorization mf_shift(const MatrixFactorization& m) {
  if (m.size() == 0) return m;
  return mf_validate(m.b(), m.a(), m.f());
}

MatrixFactorization ExtractedFactorization::effective() const {
  return syzygy_steps % 2 == 0 ? mf : mf_shift(mf);
}

ModulePresentation::ModulePresentation(PolyMatrix relations, const Poly& f) : relations_(std::move(relations)), f_(f) {
  if (relations_.rows() == 0) return;
  const std::vector<VecPoly> cols = relations_.columns();
  if (cols.empty() && !f.is_zero()) {
    throw Error(ErrorCode::NotInModule, "f does not annihilate a module without relations");
  }
  const StdBasis sb = std_basis(std::span<const VecPoly>(cols));
  for (std::size_t j = 0; j < relations_.rows(); ++j) {
    VecPoly fe = VecPoly::unit(relations_.rows(), f.nvars(), j);
    fe = f * fe;
    if (!sb.contains(fe)) {
      throw Error(ErrorCode::NotInModule, "f does not annihilate the cokernel (generator " + std::to_string(j + 1) + ")");
    }
  }
}

ModulePresentation ModulePresentation::from_ideal(const std::vector<Poly>& gens, const Poly& f) {
  std::vector<VecPoly> cols;
  for (const Poly& g : gens) {
    if (!g.is_zero()) cols.push_back(VecPoly::scalar(g));
  }
  const VecPoly fv = VecPoly::scalar(f);
  if (cols.empty() || !std_basis(std::span<const VecPoly>(cols)).contains(fv)) cols.push_back(fv);
  return ModulePresentation(PolyMatrix::from_columns(cols, 1, f.nvars()), f);
}

ModulePresentation ModulePresentation::from_mf(const MatrixFactorization& m) {
  ModulePresentation p;
  p.relations_ = m.a();
  p.f_ = m.f();
  return p;
}

PolyMatrix minimalize_presentation(const PolyMatrix& input) {
  PolyMatrix q = input;
  std::size_t row = 0;
  std::size_t col = 0;
  while (find_unit_entry(q, row, col)) {
    const Poly u = q(row, col);
    for (std::size_t k = 0; k < q.cols(); ++k) {
      if (k == col || q(row, k).is_zero()) continue;
      const Poly c = q(row, k);
      for (std::size_t i = 0; i < q.rows(); ++i) q(i, k) = u * q(i, k) - c * q(i, col);
    }
    q = drop_row_and_column(q, row, col);
  }
  std::vector<VecPoly> cols;
  for (VecPoly& c : q.columns()) {
    if (!c.is_zero()) cols.push_back(std::move(c));
  }
  // Later columns are dropped first so earlier relations are preferred.
  for (std::size_t k = cols.size(); k-- > 0;) {
    std::vector<VecPoly> others;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (j != k) others.push_back(cols[j]);
    }
    if (others.empty()) continue;
    if (std_basis(std::span<const VecPoly>(others)).contains(cols[k])) cols.erase(cols.begin() + static_cast<long>(k));
  }
  return PolyMatrix::from_columns(cols, q.rows(), q.nvars());
}

ExtractedFactorization mf_from_module(const ModulePresentation& m) {
  const Poly& f = m.f();
  const std::size_t nvars = f.nvars();
  PolyMatrix q = minimalize_presentation(m.relations());
  // Depth grows by one per syzygy, so n = nvars - 1 steps reach a maximal
  // Cohen-Macaulay module; one extra step is slack.
  for (std::size_t step = 0; step <= nvars + 1; ++step) {
    if (q.rows() == 0) throw Error(ErrorCode::FreeModule, "module has finite projective dimension");
    const std::vector<VecPoly> cols = q.columns();
    if (!certified_injective(q) && !syzygies(cols, q.rows(), nvars).empty()) {
      q = minimalize_presentation(PolyMatrix::from_columns(syzygy_presentation(q, f), q.cols(), nvars));
      continue;
    }
    if (!q.square()) {
      throw Error(ErrorCode::Unsupported, "injective presentation is not square; f does not annihilate the module");
    }
    std::optional<PolyMatrix> b = f_times_inverse(q, f);
    if (!b) {
      throw Error(ErrorCode::Unsupported, "f * A^{-1} is not polynomial; the factorization needs a unit denominator");
    }
    ExtractedFactorization out{mf_validate(std::move(q), std::move(*b), f), step};
    if (free_rank_at_origin(out.mf) == 0) {
      throw Error(ErrorCode::FreeModule, "module has finite projective dimension");
    }
    return out;
  }
  throw Error(ErrorCode::Unsupported, "syzygies did not stabilize to a square presentation");
}

}  // namespace thetalab
