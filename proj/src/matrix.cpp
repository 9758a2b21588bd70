#include "hyper/polycore/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hyper {

// ---------------------------------------------------------- RationalMatrix

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum mismatch");
  RationalMatrix c = a;
  for (std::size_t k = 0; k < c.a_.size(); ++k) c.a_[k] += b.a_[k];
  return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum mismatch");
  RationalMatrix c = a;
  for (std::size_t k = 0; k < c.a_.size(); ++k) c.a_[k] -= b.a_[k];
  return c;
}

RationalMatrix operator*(const Rational& s, RationalMatrix a) {
  for (auto& v : a.a_) v *= s;
  return a;
}

RationalVector RationalMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  RationalVector out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot product dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational quadratic_form(const RationalMatrix& m, std::span<const Rational> v) {
  RationalVector mv = m.apply(v);
  return dot(v, mv);
}

RowEchelon rref(RationalMatrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (m(row, j) != 0) m(i, j) -= factor * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve_linear(const RationalMatrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("right-hand side dimension mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  RowEchelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  RationalVector x(m.cols(), Rational(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

Rational determinant(const RationalMatrix& input) {
  if (!input.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  RationalMatrix m = input;
  std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

namespace {

// Given the state after `step` pivots (S holds the Schur complement in the
// trailing block, L the computed multipliers), lift a trailing vector u to
// y with y^T G y = u^T S u, expressed in the original index order.
RationalVector lift_witness(const RationalMatrix& lower, const std::vector<std::size_t>& perm,
                            std::size_t step, const RationalVector& u_trailing) {
  std::size_t n = perm.size();
  RationalVector y(n, Rational(0));
  for (std::size_t i = step; i < n; ++i) y[i] = u_trailing[i - step];
  // y_head = -L11^{-T} L21^T u
  RationalVector rhs(step, Rational(0));
  for (std::size_t j = 0; j < step; ++j)
    for (std::size_t i = step; i < n; ++i) rhs[j] -= lower(i, j) * y[i];
  for (std::size_t j = step; j-- > 0;) {
    Rational v = rhs[j];
    for (std::size_t i = j + 1; i < step; ++i) v -= lower(i, j) * y[i];
    y[j] = v;
  }
  RationalVector out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) out[perm[i]] = y[i];
  return out;
}

}  // namespace

LdlDecomposition ldl_decompose(const RationalMatrix& g) {
  if (!g.is_symmetric()) throw std::invalid_argument("LDL^T requires a symmetric matrix");
  std::size_t n = g.rows();
  LdlDecomposition out;
  out.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.perm[i] = i;
  out.lower = RationalMatrix::identity(n);
  out.diagonal.assign(n, Rational(0));
  RationalMatrix s = g;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (s(i, i) > s(p, p)) p = i;
    if (s(p, p) < 0) {
      RationalVector u(n - k, Rational(0));
      u[p - k] = 1;
      out.witness = lift_witness(out.lower, out.perm, k, u);
      out.reason = "negative pivot";
      return out;
    }
    if (s(p, p) == 0) {
      for (std::size_t i = k; i < n; ++i)
        if (s(i, i) < 0) {
          RationalVector u(n - k, Rational(0));
          u[i - k] = 1;
          out.witness = lift_witness(out.lower, out.perm, k, u);
          out.reason = "negative pivot";
          return out;
        }
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (s(i, j) != 0) {
            RationalVector u(n - k, Rational(0));
            u[i - k] = 1;
            u[j - k] = s(i, j) > 0 ? -1 : 1;
            out.witness = lift_witness(out.lower, out.perm, k, u);
            out.reason = "zero pivot with nonzero off-diagonal entry";
            return out;
          }
      out.psd = true;
      return out;
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(s(p, j), s(k, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(s(i, p), s(i, k));
      for (std::size_t j = 0; j < k; ++j) std::swap(out.lower(p, j), out.lower(k, j));
      std::swap(out.perm[p], out.perm[k]);
    }
    const Rational d = s(k, k);
    out.diagonal[k] = d;
    for (std::size_t i = k + 1; i < n; ++i) out.lower(i, k) = s(i, k) / d;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (s(i, k) == 0) continue;
      for (std::size_t j = k + 1; j < n; ++j) s(i, j) -= out.lower(i, k) * s(k, j);
    }
    for (std::size_t i = k; i < n; ++i) {
      s(i, k) = 0;
      s(k, i) = 0;
    }
  }
  out.psd = true;
  return out;
}

bool is_positive_semidefinite(const RationalMatrix& g) { return ldl_decompose(g).psd; }

bool is_positive_definite(const RationalMatrix& g) {
  LdlDecomposition ldl = ldl_decompose(g);
  if (!ldl.psd) return false;
  for (const auto& d : ldl.diagonal)
    if (d == 0) return false;
  return true;
}

// -------------------------------------------------------- PolynomialMatrix

PolynomialMatrix::PolynomialMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), a_(rows * cols, Polynomial(nvars)) {}

PolynomialMatrix PolynomialMatrix::pencil(std::span<const RationalMatrix> matrices) {
  if (matrices.empty()) throw std::invalid_argument("empty pencil");
  std::size_t n = matrices.size();
  std::size_t r = matrices[0].rows(), c = matrices[0].cols();
  PolynomialMatrix out(r, c, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (matrices[k].rows() != r || matrices[k].cols() != c)
      throw std::invalid_argument("pencil matrices differ in size");
    Monomial m(n);
    m[k] = 1;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) out(i, j).add_term(m, matrices[k](i, j));
  }
  return out;
}

PolynomialMatrix PolynomialMatrix::constant(const RationalMatrix& m, std::size_t nvars) {
  PolynomialMatrix out(m.rows(), m.cols(), nvars);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Polynomial::constant(nvars, m(i, j));
  return out;
}

bool PolynomialMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

RationalMatrix PolynomialMatrix::evaluate(std::span<const Rational> point) const {
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = hyper::evaluate((*this)(i, j), point);
  return out;
}

Polynomial PolynomialMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
  Polynomial t(nvars_);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

PolynomialMatrix PolynomialMatrix::minor_matrix(std::size_t skip_row, std::size_t skip_col) const {
  PolynomialMatrix out(rows_ - 1, cols_ - 1, nvars_);
  for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
    if (i == skip_row) continue;
    for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
      if (j == skip_col) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

PolynomialMatrix operator*(const PolynomialMatrix& a, const PolynomialMatrix& b) {
  if (a.cols_ != b.rows_ || a.nvars_ != b.nvars_)
    throw std::invalid_argument("matrix product dimension mismatch");
  PolynomialMatrix c(a.rows_, b.cols_, a.nvars_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

PolynomialMatrix operator*(const RationalMatrix& a, const PolynomialMatrix& b) {
  return PolynomialMatrix::constant(a, b.nvars()) * b;
}

Polynomial poly_determinant_cofactor(const PolynomialMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(m.nvars(), 1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Polynomial det(m.nvars());
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Polynomial term = m(0, j) * poly_determinant_cofactor(m.minor_matrix(0, j));
    if (j % 2) det -= term;
    else det += term;
  }
  return det;
}

namespace {

Polynomial bareiss_determinant(PolynomialMatrix m) {
  std::size_t n = m.rows();
  Polynomial prev = Polynomial::constant(m.nvars(), 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k).is_zero()) ++piv;
      if (piv == n) return Polynomial(m.nvars());
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        auto q = exact_divide(num, prev);
        if (!q) throw std::logic_error("Bareiss step was not an exact division");
        m(i, j) = std::move(*q);
      }
    prev = m(k, k);
  }
  Polynomial det = m(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace

Polynomial poly_determinant(const PolynomialMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() <= 4) return poly_determinant_cofactor(m);
  return bareiss_determinant(m);
}

PolynomialMatrix poly_adjugate(const PolynomialMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("adjugate of a non-square matrix");
  std::size_t n = m.rows();
  PolynomialMatrix adj(n, n, m.nvars());
  if (n == 0) return adj;
  if (n == 1) {
    adj(0, 0) = Polynomial::constant(m.nvars(), 1);
    return adj;
  }
  bool symmetric = m.is_symmetric();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (symmetric && j < i) {
        adj(i, j) = adj(j, i);
        continue;
      }
      // adj(i, j) = (-1)^{i+j} det(minor with row j, column i removed)
      Polynomial c = poly_determinant(m.minor_matrix(j, i));
      adj(i, j) = (i + j) % 2 ? -c : c;
    }
  return adj;
}

}  // namespace hyper
