#pragma once

#include <optional>
#include <vector>

#include "hyper/polycore/univariate.hpp"
#include "hyper/verdict.hpp"

namespace hyper {

/// p, p', then negated remainders, ending at a nonzero multiple of gcd(p, p').
struct SturmSequence {
  std::vector<UnivariatePolynomial> chain;

  explicit SturmSequence(const UnivariatePolynomial& p);
  /// Sign changes at t (zeros skipped).
  int variations(const Rational& t) const;
  int variations_at_infinity(bool plus) const;
};

/// An optional finite bound; nullopt stands for -inf (lower) or +inf (upper).
using Bound = std::optional<Rational>;

/// Number of distinct real roots in (lo, hi]. Throws on the zero polynomial.
int sturm_root_count(const UnivariatePolynomial& p, const Bound& lo, const Bound& hi);

/// Strict upper bound on |root| (Cauchy): 1 + max |a_i / a_deg|.
Rational cauchy_bound(const UnivariatePolynomial& p);

struct IsolatingInterval {
  Rational lo;
  Rational hi;
  unsigned multiplicity = 1;
  bool exact() const { return lo == hi; }
};

struct RootList {
  std::vector<IsolatingInterval> intervals;
  int degree = 0;
  unsigned total_multiplicity() const;
  bool real_rooted() const { return static_cast<int>(total_multiplicity()) == degree; }
};

/// Isolates every real root in an interval of width <= precision. Open
/// intervals (lo, hi) have p(lo), p(hi) != 0; point intervals are exact
/// rational roots. Multiplicities come from the square-free decomposition.
RootList isolate_real_roots(const UnivariatePolynomial& p, const Rational& precision);

bool is_real_rooted(const UnivariatePolynomial& p);

/// Distinct real roots of f*g in increasing order together with the
/// multiplicity of each as a root of f and of g. Decided exactly, with no
/// numerical tolerance.
struct MergedRoot {
  IsolatingInterval where;
  unsigned mult_f = 0;
  unsigned mult_g = 0;
};
std::vector<MergedRoot> merge_roots(const UnivariatePolynomial& f, const UnivariatePolynomial& g);

/// Sign of p at the unique root of f inside `where` (an isolating interval
/// of f's square-free part), decided exactly.
int sign_at_root(const UnivariatePolynomial& p, const UnivariatePolynomial& f,
                 const IsolatingInterval& where);

/// a_1 <= b_1 <= a_2 <= ... <= b_{d-1} <= a_d (strictly if strict), where a
/// and b are the sorted roots of f and g with multiplicity. Throws
/// std::invalid_argument unless deg g = deg f - 1.
Verdict roots_interlace(const UnivariatePolynomial& f, const UnivariatePolynomial& g, bool strict);

}  // namespace hyper
