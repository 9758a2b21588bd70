#include "hyper/polycore/rational.hpp"

#include <cmath>

namespace hyper {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip();
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (start == pos) throw ParseError("expected digits", pos);
    return std::string(text.substr(start, pos - start));
  };
  Integer num(digits());
  Integer den(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = Integer(digits());
    if (den == 0) throw ParseError("zero denominator", pos);
  }
  skip();
  if (pos != text.size()) throw ParseError("trailing characters in rational", pos);
  Rational q(num, den);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

RationalVector parse_rational_list(std::string_view text) {
  RationalVector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    try {
      out.push_back(parse_rational(text.substr(start, comma - start)));
    } catch (const ParseError& err) {
      throw ParseError(std::string("bad list entry: ") + err.what(), start);
    }
    start = comma + 1;
  }
  return out;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  Integer n = q.get_num();
  Integer d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

Rational approximate(double x, const Integer& max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("cannot rationalize a non-finite value");
  // The double is itself an exact dyadic rational; expand that exactly.
  Rational exact(x);
  if (exact.get_den() <= max_den) return exact;
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Integer num = exact.get_num(), den = exact.get_den();
  while (den != 0) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Integer q2 = q0 + a * q1;
    if (q2 > max_den) {
      // Largest admissible semiconvergent.
      Integer k = (max_den - q0) / q1;
      Rational semi(p0 + k * p1, q0 + k * q1);
      Rational last(p1, q1);
      semi.canonicalize();
      last.canonicalize();
      return abs(semi - exact) < abs(last - exact) ? semi : last;
    }
    Integer p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Integer rem = num - a * den;
    num = den;
    den = rem;
  }
  Rational r(p1, q1);
  r.canonicalize();
  return r;
}

}  // namespace hyper
