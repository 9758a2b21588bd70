#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hyper/polycore/rational.hpp"

namespace hyper {

/// Dense univariate polynomial; coefficient k multiplies t^k. The
/// coefficient vector never ends in a zero.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coefficients);
  UnivariatePolynomial(std::initializer_list<long> coefficients);

  static UnivariatePolynomial monomial(unsigned power, const Rational& c = 1);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& t) const;
  /// Sign at +infinity (plus = true) or -infinity.
  int sign_at_infinity(bool plus) const;

  UnivariatePolynomial derivative() const;
  UnivariatePolynomial monic() const;

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& o);
  UnivariatePolynomial& operator-=(const UnivariatePolynomial& o);
  friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) {
    return a += b;
  }
  friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) {
    return a -= b;
  }
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a,
                                        const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(UnivariatePolynomial a, const Rational& s);
  UnivariatePolynomial operator-() const;

  bool operator==(const UnivariatePolynomial&) const = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivisionResult {
  UnivariatePolynomial quotient;
  UnivariatePolynomial remainder;
};

DivisionResult divide(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b);

struct SquareFreeFactor {
  UnivariatePolynomial factor;  // square-free, monic, positive degree
  unsigned multiplicity;
};

/// Yun's algorithm: p = lc * prod factor^multiplicity with pairwise coprime
/// square-free factors.
std::vector<SquareFreeFactor> squarefree_decomposition(const UnivariatePolynomial& p);

/// Monic product of the distinct irreducible factors of p.
UnivariatePolynomial squarefree_part(const UnivariatePolynomial& p);

std::string format_univariate(const UnivariatePolynomial& p, const std::string& var = "t");

}  // namespace hyper
