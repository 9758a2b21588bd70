#pragma once

#include <string>
#include <vector>

#include "hyper/polycore/matrix.hpp"
#include "hyper/polycore/polynomial.hpp"
#include "hyper/verdict.hpp"

namespace hyper {

/// x1 * x2 * ... * xn.
Polynomial gen_product(std::size_t n);
/// x1^2 - x2^2 - ... - xn^2.
Polynomial gen_lorentz(std::size_t n);
Polynomial gen_elementary_symmetric(std::size_t n, std::size_t d);
/// Determinant of the generic symmetric d x d matrix, with variable
/// (i, j), i <= j, numbered row by row over the upper triangle.
Polynomial gen_sym_det(std::size_t d);
std::vector<std::string> sym_det_variable_names(std::size_t d);
/// (x - y)(x + y)(x + 2y) - x z^2 in variables x, y, z.
Polynomial gen_cubic_example();
/// Bases generating polynomial of the Vamos matroid on 8 elements.
Polynomial gen_vamos();
/// Quadruples missing from the support of gen_vamos() (1-based).
std::vector<std::vector<std::size_t>> vamos_nonbases();

struct VamosReport {
  Polynomial delta78;  // Delta_78 h in 8 variables
  /// (1/4) Delta_78 h at (z, z, y, y, x, x, w, w), in x, y, z.
  Polynomial W;
  /// The same at (x, x, y, y, z, z, w, w); W with x and z exchanged.
  Polynomial literal_W;
  Polynomial expected_W;
  std::vector<RationalVector> vanishing_points;
  std::size_t cubic_space_dimension = 0;
  std::vector<Polynomial> cubic_basis;
  RationalMatrix gram;
  Rational gram_det;
  Verdict conclusion;
};

/// Restricts Delta_78 of the Vamos polynomial to x1 = x2, x3 = x4, x5 = x6,
/// x7 = x8 and shows a quarter of it is not a sum of squares through the
/// unique Gram matrix over cubics vanishing at its six real zeros. Throws
/// std::logic_error if an intermediate identity fails.
VamosReport vamos_reproduction();

}  // namespace hyper
