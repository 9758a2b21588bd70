#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "hyper/polycore/matrix.hpp"
#include "hyper/polycore/polynomial.hpp"

namespace testing_support {

using hyper::Monomial;
using hyper::Polynomial;
using hyper::Rational;
using hyper::RationalMatrix;
using hyper::RationalVector;

/// gmpxx leaves num/den unreduced.
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::vector<std::string> xyz() { return {"x", "y", "z"}; }

inline Polynomial P(const std::string& text, const std::vector<std::string>& names) {
  return hyper::parse_poly(text, names);
}

struct Random {
  std::mt19937_64 rng;
  explicit Random(std::uint64_t seed) : rng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  Rational rational(long bound = 9, long den = 5) {
    return frac(integer(-bound, bound), integer(1, den));
  }
  RationalVector vector(std::size_t n, long bound = 9, long den = 5) {
    RationalVector v(n);
    for (auto& x : v) x = rational(bound, den);
    return v;
  }
  RationalVector nonzero_vector(std::size_t n, long bound = 9, long den = 5) {
    while (true) {
      RationalVector v = vector(n, bound, den);
      if (std::any_of(v.begin(), v.end(), [](const Rational& q) { return q != 0; })) return v;
    }
  }
  RationalMatrix matrix(std::size_t r, std::size_t c, long bound = 5) {
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = integer(-bound, bound);
    return m;
  }
  RationalMatrix symmetric(std::size_t n, long bound = 5) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = integer(-bound, bound);
    return m;
  }
  /// Random form of the given degree with `terms` attempted terms.
  Polynomial form(std::size_t nvars, unsigned degree, std::size_t terms, long bound = 5) {
    auto monos = hyper::homogeneous_monomials(nvars, degree);
    Polynomial f(nvars);
    for (std::size_t k = 0; k < terms; ++k)
      f.add_term(monos[static_cast<std::size_t>(integer(0, static_cast<long>(monos.size()) - 1))],
                 integer(-bound, bound));
    return f;
  }
  Polynomial dense(std::size_t nvars, unsigned max_degree, std::size_t terms, long bound = 5) {
    Polynomial f(nvars);
    for (std::size_t k = 0; k < terms; ++k) {
      Monomial m(nvars);
      for (std::size_t v = 0; v < nvars; ++v) m[v] = static_cast<unsigned>(integer(0, max_degree));
      f.add_term(m, integer(-bound, bound));
    }
    return f;
  }
};

/// Leibniz determinant over all permutations; independent of the library's
/// elimination code.
inline Rational leibniz_det(const RationalMatrix& m) {
  std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational prod = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= m(i, perm[i]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// PSD test through all principal minors.
inline bool psd_by_minors(const RationalMatrix& m) {
  std::size_t n = m.rows();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    RationalMatrix sub(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = m(idx[a], idx[b]);
    if (leibniz_det(sub) < 0) return false;
  }
  return true;
}

/// Polynomial built directly from (coefficient, exponents) pairs.
inline Polynomial from_terms(std::size_t nvars,
                             const std::vector<std::pair<Rational, std::vector<unsigned>>>& terms) {
  Polynomial f(nvars);
  for (const auto& [c, e] : terms) f.add_term(Monomial(e), c);
  return f;
}

}  // namespace testing_support
