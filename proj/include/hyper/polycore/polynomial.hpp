#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyper/polycore/rational.hpp"
#include "hyper/polycore/univariate.hpp"

namespace hyper {

/// Exponent vector of fixed length (the ambient variable count).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  std::size_t nvars() const noexcept { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<unsigned>& exponents() const noexcept { return exps_; }

  unsigned degree() const noexcept;
  bool divides(const Monomial& other) const;
  /// Componentwise difference; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  bool is_square() const;
  Monomial half() const;

  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;
  /// Graded lexicographic: total degree first, then x1 > x2 > ... .
  std::strong_ordering operator<=>(const Monomial& other) const;

 private:
  std::vector<unsigned> exps_;
};

/// Sparse multivariate polynomial over the rationals. Terms are kept in
/// descending graded-lex order and never hold a zero coefficient.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, std::greater<>>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial term(const Monomial& m, const Rational& c);

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  Rational coefficient(const Monomial& m) const;
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  Polynomial pow(unsigned exponent) const;

  bool operator==(const Polynomial& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
  }

 private:
  void check_compatible(const Polynomial& other) const;

  std::size_t nvars_;
  Terms terms_;
};

Rational evaluate(const Polynomial& f, std::span<const Rational> point);

Polynomial partial_derivative(const Polynomial& f, std::size_t var);

/// Sum_i a_i df/dx_i.
Polynomial directional_derivative(const Polynomial& f, std::span<const Rational> a);

/// Same with polynomial direction entries, so that directions may be
/// symbolic (extra ring variables standing for the coordinates of a).
Polynomial directional_derivative(const Polynomial& f, std::span<const Polynomial> a);

/// t -> f(t*e + a).
UnivariatePolynomial restrict_to_line(const Polynomial& f, std::span<const Rational> e,
                                      std::span<const Rational> a);

/// Replaces x_i by images[i]; every image must share one ring.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

/// Reinterprets f in a ring with new_nvars >= nvars variables, the old
/// variables occupying indices [0, nvars).
Polynomial embed(const Polynomial& f, std::size_t new_nvars);

/// All monomials of exactly the given degree, descending graded-lex.
std::vector<Monomial> homogeneous_monomials(std::size_t nvars, unsigned degree);

/// Quotient q with p = q * f, or nullopt when f does not divide p.
/// Throws std::domain_error when f is zero.
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& f);

/// r with r*r == p and positive leading coefficient, or nullopt.
std::optional<Polynomial> perfect_square_root(const Polynomial& p);

bool is_multiaffine(const Polynomial& f);

/// Names x1..xn.
std::vector<std::string> default_variable_names(std::size_t nvars);

/// Canonical text, e.g. "3*x^2*y - 5/2*z^4".
std::string format_poly(const Polynomial& f, std::span<const std::string> names);
std::string format_poly(const Polynomial& f);
std::string format_monomial(const Monomial& m, std::span<const std::string> names);

/// Grammar: sums/differences of products of factors; factors are rational
/// literals p/q, variable names, parenthesized expressions, optionally
/// raised to a nonnegative integer power. Implicit multiplication is an
/// error. Throws ParseError.
Polynomial parse_poly(std::string_view text, std::span<const std::string> names);

std::vector<std::string> split_names(std::string_view comma_separated);

}  // namespace hyper
