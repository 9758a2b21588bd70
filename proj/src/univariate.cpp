#include "hyper/polycore/univariate.hpp"

#include <stdexcept>

namespace hyper {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients)
    : c_(std::move(coefficients)) {
  trim();
}

UnivariatePolynomial::UnivariatePolynomial(std::initializer_list<long> coefficients) {
  for (long v : coefficients) c_.emplace_back(v);
  trim();
}

UnivariatePolynomial UnivariatePolynomial::monomial(unsigned power, const Rational& c) {
  std::vector<Rational> v(power + 1, Rational(0));
  v[power] = c;
  return UnivariatePolynomial(std::move(v));
}

void UnivariatePolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UnivariatePolynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
  return acc;
}

int UnivariatePolynomial::sign_at_infinity(bool plus) const {
  if (c_.empty()) return 0;
  int s = sgn(c_.back());
  if (!plus && degree() % 2 == 1) s = -s;
  return s;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (c_.empty()) return {};
  Rational lc = c_.back();
  UnivariatePolynomial out = *this;
  for (auto& v : out.c_) v /= lc;
  return out;
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial operator*(UnivariatePolynomial a, const Rational& s) {
  for (auto& v : a.c_) v *= s;
  a.trim();
  return a;
}

UnivariatePolynomial UnivariatePolynomial::operator-() const { return *this * Rational(-1); }

DivisionResult divide(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<Rational> rem = a.coefficients();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {UnivariatePolynomial(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(da - db + 1), Rational(0));
  const Rational& lb = b.leading();
  const auto& bc = b.coefficients();
  for (int k = da; k >= db; --k) {
    Rational q = rem[k] / lb;
    quo[k - db] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
  }
  return {UnivariatePolynomial(std::move(quo)), UnivariatePolynomial(std::move(rem))};
}

UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b) {
  while (!b.is_zero()) {
    UnivariatePolynomial r = divide(a, b).remainder;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::vector<SquareFreeFactor> squarefree_decomposition(const UnivariatePolynomial& p) {
  if (p.is_zero()) throw std::domain_error("square-free decomposition of zero");
  std::vector<SquareFreeFactor> out;
  if (p.degree() == 0) return out;
  UnivariatePolynomial dp = p.derivative();
  UnivariatePolynomial a = gcd(p, dp);
  UnivariatePolynomial b = divide(p, a).quotient;
  UnivariatePolynomial c = divide(dp, a).quotient;
  UnivariatePolynomial d = c - b.derivative();
  unsigned mult = 1;
  while (b.degree() > 0) {
    UnivariatePolynomial g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g, mult});
    UnivariatePolynomial nb = divide(b, g).quotient;
    UnivariatePolynomial nc = divide(d, g).quotient;
    b = nb;
    d = nc - b.derivative();
    ++mult;
  }
  return out;
}

UnivariatePolynomial squarefree_part(const UnivariatePolynomial& p) {
  if (p.is_zero()) throw std::domain_error("square-free part of zero");
  if (p.degree() == 0) return UnivariatePolynomial({1});
  return divide(p, gcd(p, p.derivative())).quotient.monic();
}

std::string format_univariate(const UnivariatePolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coefficients()[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace hyper
