#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyper/polycore/polynomial.hpp"
#include "hyper/polycore/rational.hpp"

namespace hyper {

/// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RationalMatrix transpose() const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a);
  RationalVector apply(std::span<const Rational> v) const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Quadratic form v^T M v.
Rational quadratic_form(const RationalMatrix& m, std::span<const Rational> v);

struct RowEchelon {
  RationalMatrix reduced;            // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon rref(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Some solution of m x = rhs (free variables set to zero), or nullopt if
/// the system is inconsistent.
std::optional<RationalVector> solve_linear(const RationalMatrix& m, std::span<const Rational> rhs);

Rational determinant(const RationalMatrix& m);

/// Exact LDL^T with symmetric pivoting on the largest remaining diagonal:
/// G(perm[i], perm[j]) = (L D L^T)(i, j).
struct LdlDecomposition {
  bool psd = false;
  std::vector<std::size_t> perm;
  RationalMatrix lower;       // unit lower triangular
  RationalVector diagonal;    // D
  RationalVector witness;     // when !psd: y with y^T G y < 0
  std::string reason;
};

LdlDecomposition ldl_decompose(const RationalMatrix& g);

bool is_positive_definite(const RationalMatrix& g);
bool is_positive_semidefinite(const RationalMatrix& g);

/// Matrix with polynomial entries sharing one ring.
class PolynomialMatrix {
 public:
  PolynomialMatrix() = default;
  PolynomialMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

  /// Linear pencil sum_i x_i M_i over nvars = matrices.size() variables.
  static PolynomialMatrix pencil(std::span<const RationalMatrix> matrices);
  static PolynomialMatrix constant(const RationalMatrix& m, std::size_t nvars);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nvars() const noexcept { return nvars_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;

  Polynomial& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RationalMatrix evaluate(std::span<const Rational> point) const;
  Polynomial trace() const;
  PolynomialMatrix minor_matrix(std::size_t skip_row, std::size_t skip_col) const;

  friend PolynomialMatrix operator*(const PolynomialMatrix& a, const PolynomialMatrix& b);
  friend PolynomialMatrix operator*(const RationalMatrix& a, const PolynomialMatrix& b);
  bool operator==(const PolynomialMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t nvars_ = 0;
  std::vector<Polynomial> a_;
};

/// Cofactor expansion up to 4x4, fraction-free Bareiss elimination above.
Polynomial poly_determinant(const PolynomialMatrix& m);

/// Plain Laplace expansion along the first row, any size.
Polynomial poly_determinant_cofactor(const PolynomialMatrix& m);

/// Transposed cofactor matrix; the 1x1 adjugate is [1].
PolynomialMatrix poly_adjugate(const PolynomialMatrix& m);

}  // namespace hyper
