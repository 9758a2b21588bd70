#include "hyper/polycore/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hyper {

// ---------------------------------------------------------------- Monomial

unsigned Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] = other.exps_[i] - exps_[i];
  return q;
}

bool Monomial::is_square() const {
  return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e % 2 == 0; });
}

Monomial Monomial::half() const {
  Monomial h(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) h.exps_[i] = exps_[i] / 2;
  return h;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] = exps_[i] + other.exps_[i];
  return m;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  return exps_ <=> other.exps_;
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Monomial m(nvars);
  m[index] = 1;
  return term(m, 1);
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.degree());
}

int Polynomial::degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  unsigned best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m[var]);
  return static_cast<int>(best);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw std::invalid_argument("monomial arity does not match ring");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (nvars_ != other.nvars_)
    throw std::invalid_argument("polynomials live in rings of different arity");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.nvars_);
  Rational prod;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term(ma * mb, prod);
    }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

// ------------------------------------------------------------- operations

Rational evaluate(const Polynomial& f, std::span<const Rational> point) {
  if (point.size() != f.nvars())
    throw std::invalid_argument("evaluation point has wrong dimension");
  // Cache powers per variable.
  std::vector<std::vector<Rational>> powers(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    int d = f.degree_in(i);
    powers[i].resize(static_cast<std::size_t>(std::max(d, 0)) + 1);
    powers[i][0] = 1;
    for (int k = 1; k <= d; ++k) powers[i][k] = powers[i][k - 1] * point[i];
  }
  Rational sum = 0;
  for (const auto& [m, c] : f.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (m[i]) t *= powers[i][m[i]];
    sum += t;
  }
  return sum;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
  if (var >= f.nvars()) throw std::out_of_range("variable index out of range");
  Polynomial out(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    out.add_term(d, c * m[var]);
  }
  return out;
}

Polynomial directional_derivative(const Polynomial& f, std::span<const Rational> a) {
  if (a.size() != f.nvars()) throw std::invalid_argument("direction has wrong dimension");
  Polynomial out(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0 || a[i] == 0) continue;
      Monomial d = m;
      d[i] -= 1;
      out.add_term(d, c * m[i] * a[i]);
    }
  }
  return out;
}

Polynomial directional_derivative(const Polynomial& f, std::span<const Polynomial> a) {
  if (a.size() != f.nvars()) throw std::invalid_argument("direction has wrong dimension");
  Polynomial out(f.nvars());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    out += a[i] * partial_derivative(f, i);
  }
  return out;
}

UnivariatePolynomial restrict_to_line(const Polynomial& f, std::span<const Rational> e,
                                      std::span<const Rational> a) {
  if (e.size() != f.nvars() || a.size() != f.nvars())
    throw std::invalid_argument("line data has wrong dimension");
  std::vector<std::vector<UnivariatePolynomial>> powers(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    UnivariatePolynomial lin(std::vector<Rational>{a[i], e[i]});
    int d = std::max(f.degree_in(i), 0);
    powers[i].push_back(UnivariatePolynomial({1}));
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * lin);
  }
  UnivariatePolynomial out;
  for (const auto& [m, c] : f.terms()) {
    UnivariatePolynomial t = UnivariatePolynomial::monomial(0, c);
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (m[i]) t = t * powers[i][m[i]];
    out += t;
  }
  return out;
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  if (images.size() != f.nvars()) throw std::invalid_argument("substitution has wrong arity");
  std::size_t target = images.empty() ? 0 : images[0].nvars();
  for (const auto& img : images)
    if (img.nvars() != target) throw std::invalid_argument("substitution images disagree on ring");
  std::vector<std::vector<Polynomial>> powers(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    int d = std::max(f.degree_in(i), 0);
    powers[i].push_back(Polynomial::constant(target, 1));
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  Polynomial out(target);
  for (const auto& [m, c] : f.terms()) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (m[i]) t *= powers[i][m[i]];
    out += t;
  }
  return out;
}

Polynomial embed(const Polynomial& f, std::size_t new_nvars) {
  if (new_nvars < f.nvars()) throw std::invalid_argument("cannot embed into a smaller ring");
  Polynomial out(new_nvars);
  for (const auto& [m, c] : f.terms()) {
    std::vector<unsigned> e = m.exponents();
    e.resize(new_nvars, 0);
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

std::vector<Monomial> homogeneous_monomials(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<unsigned> e(nvars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, degree);
  return out;
}

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.nvars() != f.nvars()) throw std::invalid_argument("polynomials live in different rings");
  const Monomial& lead = f.leading_monomial();
  const Rational& lead_c = f.leading_coefficient();
  Polynomial remainder = p;
  Polynomial quotient(p.nvars());
  while (!remainder.is_zero()) {
    const Monomial& rm = remainder.leading_monomial();
    if (!lead.divides(rm)) return std::nullopt;
    Polynomial t = Polynomial::term(lead.quotient_of(rm), remainder.leading_coefficient() / lead_c);
    quotient += t;
    remainder -= t * f;
  }
  return quotient;
}

std::optional<Polynomial> perfect_square_root(const Polynomial& p) {
  if (p.is_zero()) return Polynomial(p.nvars());
  const Monomial& lm = p.leading_monomial();
  if (!lm.is_square()) return std::nullopt;
  auto lc = rational_sqrt(p.leading_coefficient());
  if (!lc) return std::nullopt;
  Polynomial root = Polynomial::term(lm.half(), *lc);
  Monomial root_lead = lm.half();
  Rational twice_lead = 2 * *lc;
  Monomial last = root_lead;
  Polynomial remainder = p - root * root;
  while (!remainder.is_zero()) {
    const Monomial& rm = remainder.leading_monomial();
    if (!root_lead.divides(rm)) return std::nullopt;
    Monomial next = root_lead.quotient_of(rm);
    if (!(next < last)) return std::nullopt;
    Polynomial t = Polynomial::term(next, remainder.leading_coefficient() / twice_lead);
    // (root + t)^2 - p = (root^2 - p) + 2*root*t + t^2
    remainder -= (root * 2 + t) * t;
    root += t;
    last = next;
  }
  return root;
}

bool is_multiaffine(const Polynomial& f) {
  for (const auto& [m, c] : f.terms())
    for (unsigned e : m.exponents())
      if (e > 1) return false;
  return true;
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string format_monomial(const Monomial& m, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_poly(const Polynomial& f, std::span<const std::string> names) {
  if (names.size() < f.nvars()) throw std::invalid_argument("not enough variable names");
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.degree() == 0) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += format_monomial(m, names);
    }
  }
  return out;
}

std::string format_poly(const Polynomial& f) {
  auto names = default_variable_names(f.nvars());
  return format_poly(f, names);
}

std::vector<std::string> split_names(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> names)
      : text_(text), names_(names) {}

  Polynomial parse() {
    skip();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) {
      if (starts_factor()) throw ParseError("implicit multiplication is not allowed", pos_);
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }
    return p;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at(char ch) {
    skip();
    return pos_ < text_.size() && text_[pos_] == ch;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= text_.size()) return false;
    char ch = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '(';
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (at('+')) {
        ++pos_;
        acc += term();
      } else if (at('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (true) {
      if (at('*')) {
        ++pos_;
        acc *= unary();
      } else if (starts_factor()) {
        throw ParseError("implicit multiplication is not allowed", pos_);
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (at('-')) {
      ++pos_;
      return -unary();
    }
    if (at('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (at('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected a nonnegative integer exponent", pos_);
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 10000) throw ParseError("exponent too large", start);
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!at(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Integer num(std::string(text_.substr(start, pos_ - start)));
      Integer den(1);
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) throw ParseError("expected denominator digits", pos_);
        den = Integer(std::string(text_.substr(dstart, pos_ - dstart)));
        if (den == 0) throw ParseError("zero denominator", dstart);
      }
      Rational q(num, den);
      q.canonicalize();
      return Polynomial::constant(names_.size(), q);
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return Polynomial::variable(names_.size(), i);
      throw ParseError("unknown variable '" + std::string(name) + "'", start);
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", pos_);
  }

  std::string_view text_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, std::span<const std::string> names) {
  return Parser(text, names).parse();
}

}  // namespace hyper
