#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyper {

/// Exact rational number. GMP keeps it canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// Thrown on malformed textual input (polynomials, rationals, vectors).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws ParseError.
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals, e.g. "1,0,-1/2".
RationalVector parse_rational_list(std::string_view text);

/// Exact square root if q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Best rational approximation of x with denominator at most max_den
/// (continued fractions, choosing the closer of the last convergent and
/// the admissible semiconvergent).
Rational approximate(double x, const Integer& max_den);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace hyper
